#include "tropopt/spectral.hpp"

#include "tropopt/errors.hpp"

namespace tropopt {

Scalar spectral_radius(const Semifield& sf, const TropMatrix& a) {
  if (!a.is_square()) throw NotSquare("spectral_radius requires a square matrix");
  Scalar lambda = Scalar::zero();
  TropMatrix power = a;
  for (std::size_t m = 1; m <= a.rows(); ++m) {
    lambda = sf.add(lambda, sf.power(trace(sf, power), 1, static_cast<std::int64_t>(m)));
    if (m < a.rows()) power = multiply(sf, power, a);
  }
  return lambda;
}

SpectrumReport eigenvectors(const Semifield& sf, const TropMatrix& a) {
  Scalar lambda = spectral_radius(sf, a);
  if (lambda.is_zero()) throw ZeroSpectralRadius();
  TropMatrix scaled = scale(sf, sf.inverse(lambda), a);
  return SpectrumReport{lambda, plus_closure(sf, scaled)};
}

}  // namespace tropopt
