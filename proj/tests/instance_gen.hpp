#pragma once

#include <random>
#include <utility>

#include "test_support.hpp"
#include "tropopt/problem.hpp"
#include "tropopt/spectral.hpp"

namespace tropopt::testing {

struct GenDims {
  std::size_t n = 2;  // unknown dimension
  std::size_t m = 2;  // row count of A where rectangular
  std::size_t l = 2;  // row count of B in the span-max family
};

/// Draws a precondition-satisfying instance of the given form with integer
/// data in [lo, hi]. Trace conditions are met by construction (constraint
/// matrices are drawn nonpositive, with unit diagonals where Tr = 1 is
/// required); spectral-radius and regularity conditions by bounded retry.
inline ProblemInstance random_instance(ProblemForm form, std::mt19937_64& rng, GenDims dims,
                                       std::int64_t lo, std::int64_t hi) {
  const Semifield sf = Semifield::max_plus();
  ProblemInstance inst;
  inst.semifield = sf;
  inst.form = form;
  const std::size_t n = dims.n;
  const std::size_t m = dims.m;
  const std::size_t l = dims.l;

  auto spectral_ok = [&](const TropMatrix& a) { return !spectral_radius(sf, a).is_zero(); };
  auto draw_spectral = [&](std::size_t order) {
    for (;;) {
      TropMatrix a = random_matrix(rng, order, order, lo, hi, 250);
      if (spectral_ok(a)) return a;
    }
  };
  auto draw_regular = [&](std::size_t rows, std::size_t cols, int zero_permille) {
    for (;;) {
      TropMatrix a = random_matrix(rng, rows, cols, lo, hi, zero_permille);
      if (classify_regularity(a).regular) return a;
    }
  };
  // Nonpositive entries keep every cycle weight <= 0, hence Tr <= 1.
  auto draw_subunit = [&](std::size_t order) {
    std::int64_t low = std::min<std::int64_t>(lo, -1);
    return random_matrix(rng, order, order, low, 0, 350);
  };
  auto draw_box = [&](std::size_t dim) {
    TropVector g = random_vector(rng, dim, lo, hi, 250);
    TropVector h(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      std::int64_t base = g[i].is_zero() ? lo : g[i].rat().num();
      h[i] = fin(base + static_cast<std::int64_t>(rng() % 3));
    }
    return std::make_pair(g, h);
  };
  auto nonzero_vector = [&](std::size_t dim) {
    for (;;) {
      TropVector p = random_vector(rng, dim, lo, hi, 300);
      if (p.is_nonzero()) return p;
    }
  };

  switch (form) {
    case ProblemForm::P3Rayleigh:
      inst.A = draw_spectral(n);
      break;
    case ProblemForm::P4ChebyBox: {
      inst.p = random_regular_vector(rng, n, lo, hi);
      inst.q = random_regular_vector(rng, n, lo, hi);
      auto [g, h] = draw_box(n);
      inst.g = g;
      inst.h = h;
      break;
    }
    case ProblemForm::P5ChebyLower:
      inst.A = draw_regular(m, n, 200);
      inst.p = random_regular_vector(rng, m, lo, hi);
      inst.q = random_regular_vector(rng, m, lo, hi);
      inst.g = random_vector(rng, n, lo, hi, 300);
      break;
    case ProblemForm::P6ChebyIneqBox: {
      inst.B = draw_subunit(n);
      inst.p = nonzero_vector(n);
      inst.q = random_regular_vector(rng, n, lo, hi);
      auto [g, h] = draw_box(n);
      inst.g = g;
      inst.h = h;
      // enforce h^- B* g <= 1 by shifting g down when violated
      TropMatrix star = kleene_star(sf, *inst.B);
      Scalar gate = conj_dot(sf, *inst.h, mat_vec(sf, star, *inst.g));
      if (!sf.leq(gate, sf.one())) inst.g = scale(sf, sf.inverse(gate), *inst.g);
      break;
    }
    case ProblemForm::P8ChebyIneq:
      inst.B = draw_subunit(n);
      inst.p = nonzero_vector(n);
      inst.q = random_regular_vector(rng, n, lo, hi);
      break;
    case ProblemForm::P9SpanMin:
      for (;;) {
        inst.A = random_matrix(rng, m, n, lo, hi, 250);
        if (classify_regularity(*inst.A).row_regular) break;
      }
      for (;;) {
        inst.B = random_matrix(rng, m, n, lo, hi, 250);
        if (classify_regularity(*inst.B).column_regular) break;
      }
      inst.p = nonzero_vector(m);
      inst.q = random_regular_vector(rng, m, lo, hi);
      break;
    case ProblemForm::P10SpanMinEqIneq:
      inst.C = draw_regular(n, n, 200);
      inst.D = draw_subunit(n);
      break;
    case ProblemForm::P11SpanMax:
    case ProblemForm::P13SpanMaxIneq:
    case ProblemForm::P14SpanMaxEq: {
      inst.A = random_matrix(rng, m, n, lo, hi, 0);  // all entries finite
      for (;;) {
        inst.B = random_matrix(rng, l, n, lo, hi, 250);
        if (classify_regularity(*inst.B).column_regular) break;
      }
      inst.p = random_regular_vector(rng, m, lo, hi);
      inst.q = random_regular_vector(rng, l, lo, hi);
      if (form == ProblemForm::P13SpanMaxIneq) {
        inst.C = draw_subunit(n);
      } else if (form == ProblemForm::P14SpanMaxEq) {
        TropMatrix c = draw_subunit(n);
        for (std::size_t i = 0; i < n; ++i) c.at(i, i) = fin(0);  // Tr(C) = 1
        inst.C = c;
      }
      break;
    }
    case ProblemForm::P15RayleighAffine:
      inst.A = draw_spectral(n);
      inst.p = random_vector(rng, n, lo, hi, 300);
      inst.q = random_regular_vector(rng, n, lo, hi);
      inst.c = random_entry(rng, lo, hi, 300);
      break;
    case ProblemForm::P16RayleighFull: {
      inst.A = draw_spectral(n);
      inst.B = draw_subunit(n);
      for (;;) {
        inst.C = random_matrix(rng, m, n, lo, hi, 250);
        if (classify_regularity(*inst.C).column_regular) break;
      }
      inst.g = random_vector(rng, n, lo, hi, 300);
      inst.h = random_regular_vector(rng, m, lo, hi);
      TropMatrix star = kleene_star(sf, *inst.B);
      Scalar gate = conj_dot(sf, *inst.h, mat_vec(sf, *inst.C, mat_vec(sf, star, *inst.g)));
      if (!sf.leq(gate, sf.one())) inst.g = scale(sf, sf.inverse(gate), *inst.g);
      break;
    }
    case ProblemForm::P17RayleighIneq:
      inst.A = draw_spectral(n);
      inst.B = draw_subunit(n);
      inst.g = random_vector(rng, n, lo, hi, 300);
      break;
    case ProblemForm::P18RayleighBox: {
      inst.A = draw_spectral(n);
      auto [g, h] = draw_box(n);
      inst.g = g;
      inst.h = h;
      break;
    }
    case ProblemForm::P19RayleighPIneq:
      inst.A = draw_spectral(n);
      inst.B = draw_subunit(n);
      inst.p = random_vector(rng, n, lo, hi, 300);
      inst.g = random_vector(rng, n, lo, hi, 300);
      break;
  }
  inst.validate();
  return inst;
}

/// A deliberately infeasible variant plus the condition name expected from
/// the solver (substring of the Error::condition()).
inline std::pair<ProblemInstance, std::string> infeasible_instance(ProblemForm form,
                                                                   std::mt19937_64& rng,
                                                                   GenDims dims, std::int64_t lo,
                                                                   std::int64_t hi) {
  ProblemInstance inst = random_instance(form, rng, dims, lo, hi);
  const std::size_t n = dims.n;
  switch (form) {
    case ProblemForm::P3Rayleigh:
    case ProblemForm::P15RayleighAffine:
      inst.A = TropMatrix(n, n);
      return {inst, "lambda = 0"};
    case ProblemForm::P4ChebyBox: {
      (*inst.g)[0] = fin((*inst.h)[0].rat().num() + 1);
      return {inst, "g > h"};
    }
    case ProblemForm::P5ChebyLower:
      for (std::size_t j = 0; j < inst.A->cols(); ++j) inst.A->at(0, j) = zz();
      return {inst, "A not regular"};
    case ProblemForm::P6ChebyIneqBox:
    case ProblemForm::P8ChebyIneq:
    case ProblemForm::P17RayleighIneq:
    case ProblemForm::P19RayleighPIneq:
      inst.B->at(0, 0) = fin(1);
      return {inst, "Tr(B) > 1"};
    case ProblemForm::P9SpanMin:
      for (std::size_t j = 0; j < inst.A->cols(); ++j) inst.A->at(0, j) = zz();
      return {inst, "A not row-regular"};
    case ProblemForm::P10SpanMinEqIneq:
      inst.D->at(0, 0) = fin(1);
      return {inst, "Tr(D) > 1"};
    case ProblemForm::P11SpanMax:
      inst.A->at(0, 0) = zz();
      return {inst, "A has a zero entry"};
    case ProblemForm::P13SpanMaxIneq:
      inst.C->at(0, 0) = fin(1);
      return {inst, "Tr(C) > 1"};
    case ProblemForm::P14SpanMaxEq:
      inst.C = TropMatrix(n, n, fin(-1));  // every cycle weight < 0, so Tr < 1
      return {inst, "Tr(C) != 1"};
    case ProblemForm::P16RayleighFull:
      inst.B->at(0, 0) = fin(1);
      return {inst, "Tr(B) > 1"};
    case ProblemForm::P18RayleighBox: {
      (*inst.g)[0] = fin((*inst.h)[0].rat().num() + 1);
      return {inst, "h-g > 1"};
    }
  }
  return {inst, ""};
}

}  // namespace tropopt::testing
