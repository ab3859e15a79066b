#include <random>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "tropopt/errors.hpp"
#include "tropopt/spectral.hpp"

using namespace tropopt;
using namespace tropopt::testing;

#include "cycle_oracle.hpp"

namespace {
const Semifield sf = Semifield::max_plus();
}  // namespace

TEST_CASE("spectral radius: closed form and examples") {
  CHECK(sf.eq(spectral_radius(sf, mat({{fin(7)}})), fin(7)));
  CHECK(sf.eq(spectral_radius(sf, mat({{fin(1), fin(3)}, {fin(0), fin(2)}})), fin(2)));
  CHECK(spectral_radius(sf, TropMatrix(3, 3)).is_zero());
  CHECK_THROWS_AS(spectral_radius(sf, TropMatrix(2, 3)), NotSquare);
}

TEST_CASE("spectral radius equals the exhaustive cycle-mean maximum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 5;
    TropMatrix a = random_matrix(rng, n, n, -9, 9, 350);
    CHECK(sf.eq(spectral_radius(sf, a), cycle_mean_maximum(sf, a)));
  }
}

TEST_CASE("eigenvector generator satisfies the eigen equation exactly") {
  TropMatrix a = mat({{fin(1), fin(3)}, {fin(0), fin(2)}});
  SpectrumReport spectrum = eigenvectors(sf, a);
  CHECK(sf.eq(spectrum.lambda, fin(2)));
  CHECK(spectrum.eigen_generator.cols() == 1);
  CHECK(sf.eq(spectrum.eigen_generator.at(0, 0), fin(1)));
  CHECK(sf.eq(spectrum.eigen_generator.at(1, 0), fin(0)));
  TropVector x = spectrum.eigen_generator.column(0);
  CHECK(vector_eq(sf, mat_vec(sf, a, x), scale(sf, spectrum.lambda, x)));

  SpectrumReport one_dim = eigenvectors(sf, mat({{fin(5)}}));
  CHECK(matrix_eq(sf, one_dim.eigen_generator, mat({{fin(0)}})));

  CHECK_THROWS_AS(eigenvectors(sf, TropMatrix(2, 2)), ZeroSpectralRadius);

  std::mt19937_64 rng(37);
  int tested = 0;
  for (int trial = 0; tested < 200 && trial < 600; ++trial) {
    std::size_t n = 1 + rng() % 5;
    TropMatrix m = random_matrix(rng, n, n, -9, 9, 250);
    if (spectral_radius(sf, m).is_zero()) continue;
    ++tested;
    SpectrumReport sp = eigenvectors(sf, m);
    for (int draw = 0; draw < 100; ++draw) {
      TropVector u = random_regular_vector(rng, sp.eigen_generator.cols(), -8, 8);
      TropVector ev = mat_vec(sf, sp.eigen_generator, u);
      CHECK(vector_eq(sf, mat_vec(sf, m, ev), scale(sf, sp.lambda, ev)));
    }
  }
  CHECK(tested == 200);
}

TEST_CASE("spectral radius is scaling-equivariant") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 5;
    TropMatrix a = random_matrix(rng, n, n, -9, 9, 250);
    Scalar c = fin(static_cast<std::int64_t>(rng() % 15) - 7);
    Scalar lhs = spectral_radius(sf, scale(sf, c, a));
    Scalar rhs = sf.mul(c, spectral_radius(sf, a));
    if (spectral_radius(sf, a).is_zero()) {
      CHECK(lhs.is_zero());
    } else {
      CHECK(sf.eq(lhs, rhs));
    }
  }
}
