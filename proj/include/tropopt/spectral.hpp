#pragma once

#include "tropopt/algebra.hpp"

namespace tropopt {

/// Spectral radius and the generator of all eigenvectors associated with it.
/// For every regular u, A (eigen_generator u) = lambda (eigen_generator u).
struct SpectrumReport {
  Scalar lambda;
  TropMatrix eigen_generator;
};

/// lambda = (+)_{m=1..n} tr^{1/m}(A^m); zero for the all-zero matrix.
/// Exact in the additive semifields (the root is a division by m).
Scalar spectral_radius(const Semifield& sf, const TropMatrix& a);

/// Eigenvector generator (lambda^{-1} A)^+; throws ZeroSpectralRadius when
/// lambda = 0 (the scaling is then undefined).
SpectrumReport eigenvectors(const Semifield& sf, const TropMatrix& a);

}  // namespace tropopt
