#include "tropopt/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>

#include "tropopt/algebra.hpp"
#include "tropopt/errors.hpp"

namespace tropopt {

namespace {

constexpr std::uint64_t kMaxGridPoints = 1'000'000'000;

void require_oracle_semifield(const Semifield& sf) {
  if (!sf.is_additive() || !sf.is_exact()) {
    throw Error("oracle semifield", "the grid oracle requires an exact additive semifield");
  }
}

void require_unknown(const ProblemInstance& inst, const TropVector& x) {
  inst.validate();
  if (x.dim() != inst.unknown_dim()) {
    throw ShapeMismatch("x has dimension " + std::to_string(x.dim()) + ", expected " +
                        std::to_string(inst.unknown_dim()));
  }
}

Scalar rayleigh_term(const Semifield& sf, const TropMatrix& a, const TropVector& x) {
  return conj_dot(sf, x, mat_vec(sf, a, x));
}

}  // namespace

Scalar evaluate_objective(const ProblemInstance& inst, const TropVector& x) {
  require_unknown(inst, x);
  if (!x.is_regular()) throw NotRegular("x not regular");
  const Semifield& sf = inst.semifield;
  switch (inst.form) {
    case ProblemForm::P3Rayleigh:
      return rayleigh_term(sf, *inst.A, x);
    case ProblemForm::P4ChebyBox:
      return sf.add(conj_dot(sf, *inst.q, x), conj_dot(sf, x, *inst.p));
    case ProblemForm::P5ChebyLower: {
      TropVector y = mat_vec(sf, *inst.A, x);
      return sf.add(conj_dot(sf, *inst.q, y), conj_dot(sf, y, *inst.p));
    }
    case ProblemForm::P6ChebyIneqBox:
    case ProblemForm::P8ChebyIneq:
      return sf.add(conj_dot(sf, x, *inst.p), conj_dot(sf, *inst.q, x));
    case ProblemForm::P9SpanMin:
    case ProblemForm::P11SpanMax:
    case ProblemForm::P13SpanMaxIneq:
    case ProblemForm::P14SpanMaxEq:
      return sf.mul(conj_dot(sf, *inst.q, mat_vec(sf, *inst.B, x)),
                    conj_dot(sf, mat_vec(sf, *inst.A, x), *inst.p));
    case ProblemForm::P10SpanMinEqIneq: {
      TropVector y = mat_vec(sf, *inst.C, x);
      return sf.mul(norm(sf, y), norm(sf, conjugate(sf, y)));
    }
    case ProblemForm::P15RayleighAffine: {
      Scalar v = rayleigh_term(sf, *inst.A, x);
      v = sf.add(v, conj_dot(sf, x, *inst.p));
      v = sf.add(v, conj_dot(sf, *inst.q, x));
      return sf.add(v, *inst.c);
    }
    case ProblemForm::P16RayleighFull:
    case ProblemForm::P17RayleighIneq:
    case ProblemForm::P18RayleighBox:
      return rayleigh_term(sf, *inst.A, x);
    case ProblemForm::P19RayleighPIneq:
      return sf.add(rayleigh_term(sf, *inst.A, x), conj_dot(sf, x, *inst.p));
  }
  throw Error("unknown problem form");
}

// ---------------------------------------------------------------------------
// Double-entry evaluation: scalar loops over raw payloads, no algebra helpers.

namespace {

struct DirectOps {
  bool max_like;
  bool times;

  // Finite payloads as doubles in float mode; exact mode keeps Rationals.
  Scalar add(const Scalar& a, const Scalar& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_exact()) {
      bool keep_a = max_like ? (b.rat() < a.rat()) : (a.rat() < b.rat());
      return keep_a ? a : b;
    }
    bool keep_a = max_like ? (b.real() < a.real()) : (a.real() < b.real());
    return keep_a ? a : b;
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (a.is_zero() || b.is_zero()) return Scalar::zero();
    if (a.is_exact()) return Scalar::exact(a.rat() + b.rat());
    return Scalar::approx(times ? a.real() * b.real() : a.real() + b.real());
  }
  Scalar inv(const Scalar& a) const {
    if (a.is_exact()) return Scalar::exact(-a.rat());
    return Scalar::approx(times ? 1.0 / a.real() : -a.real());
  }
};

}  // namespace

Scalar evaluate_objective_direct(const ProblemInstance& inst, const TropVector& x) {
  require_unknown(inst, x);
  if (!x.is_regular()) throw NotRegular("x not regular");
  const SemifieldId id = inst.semifield.id();
  DirectOps ops{id == SemifieldId::MaxPlus || id == SemifieldId::MaxTimes,
                id == SemifieldId::MaxTimes || id == SemifieldId::MinTimes};

  auto conj_pair = [&](const TropVector& a, const TropVector& b) {
    Scalar acc = Scalar::zero();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a[i].is_zero() || b[i].is_zero()) continue;
      acc = ops.add(acc, ops.mul(ops.inv(a[i]), b[i]));
    }
    return acc;
  };
  auto apply = [&](const TropMatrix& m, const TropVector& v) {
    TropVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Scalar acc = Scalar::zero();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
        acc = ops.add(acc, ops.mul(m.at(i, j), v[j]));
      }
      y[i] = acc;
    }
    return y;
  };
  auto ray = [&](const TropMatrix& a) {
    Scalar acc = Scalar::zero();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.at(i, j).is_zero()) continue;
        acc = ops.add(acc, ops.mul(ops.mul(ops.inv(x[i]), a.at(i, j)), x[j]));
      }
    }
    return acc;
  };

  switch (inst.form) {
    case ProblemForm::P3Rayleigh:
      return ray(*inst.A);
    case ProblemForm::P4ChebyBox:
      return ops.add(conj_pair(*inst.q, x), conj_pair(x, *inst.p));
    case ProblemForm::P5ChebyLower: {
      TropVector y = apply(*inst.A, x);
      return ops.add(conj_pair(*inst.q, y), conj_pair(y, *inst.p));
    }
    case ProblemForm::P6ChebyIneqBox:
    case ProblemForm::P8ChebyIneq:
      return ops.add(conj_pair(x, *inst.p), conj_pair(*inst.q, x));
    case ProblemForm::P9SpanMin:
    case ProblemForm::P11SpanMax:
    case ProblemForm::P13SpanMaxIneq:
    case ProblemForm::P14SpanMaxEq:
      return ops.mul(conj_pair(*inst.q, apply(*inst.B, x)), conj_pair(apply(*inst.A, x), *inst.p));
    case ProblemForm::P10SpanMinEqIneq: {
      TropVector y = apply(*inst.C, x);
      Scalar hi = Scalar::zero();
      Scalar lo = Scalar::zero();
      for (std::size_t i = 0; i < y.dim(); ++i) {
        hi = ops.add(hi, y[i]);
        lo = ops.add(lo, ops.inv(y[i]));
      }
      return ops.mul(hi, lo);
    }
    case ProblemForm::P15RayleighAffine: {
      Scalar v = ops.add(ray(*inst.A), conj_pair(x, *inst.p));
      v = ops.add(v, conj_pair(*inst.q, x));
      return ops.add(v, *inst.c);
    }
    case ProblemForm::P16RayleighFull:
    case ProblemForm::P17RayleighIneq:
    case ProblemForm::P18RayleighBox:
      return ray(*inst.A);
    case ProblemForm::P19RayleighPIneq:
      return ops.add(ray(*inst.A), conj_pair(x, *inst.p));
  }
  throw Error("unknown problem form");
}

bool check_feasible(const ProblemInstance& inst, const TropVector& x) {
  require_unknown(inst, x);
  const Semifield& sf = inst.semifield;
  auto leq_all = [&](const TropVector& a, const TropVector& b) { return vector_leq(sf, a, b); };
  switch (inst.form) {
    case ProblemForm::P3Rayleigh:
    case ProblemForm::P9SpanMin:
    case ProblemForm::P11SpanMax:
    case ProblemForm::P15RayleighAffine:
      return x.is_regular();
    case ProblemForm::P4ChebyBox:
    case ProblemForm::P18RayleighBox:
      return leq_all(*inst.g, x) && leq_all(x, *inst.h);
    case ProblemForm::P5ChebyLower:
      return leq_all(*inst.g, x);
    case ProblemForm::P6ChebyIneqBox:
      return leq_all(mat_vec(sf, *inst.B, x), x) && leq_all(*inst.g, x) && leq_all(x, *inst.h);
    case ProblemForm::P8ChebyIneq:
      return leq_all(mat_vec(sf, *inst.B, x), x);
    case ProblemForm::P10SpanMinEqIneq:
      return leq_all(mat_vec(sf, *inst.D, x), x);
    case ProblemForm::P13SpanMaxIneq:
      return leq_all(mat_vec(sf, *inst.C, x), x);
    case ProblemForm::P14SpanMaxEq:
      return vector_eq(sf, mat_vec(sf, *inst.C, x), x);
    case ProblemForm::P16RayleighFull:
      return leq_all(mat_vec(sf, *inst.B, x), x) && leq_all(*inst.g, x) &&
             leq_all(mat_vec(sf, *inst.C, x), *inst.h);
    case ProblemForm::P17RayleighIneq:
    case ProblemForm::P19RayleighPIneq:
      return leq_all(mat_vec(sf, *inst.B, x), x) && leq_all(*inst.g, x);
  }
  throw Error("unknown problem form");
}

// ---------------------------------------------------------------------------
// Grid construction.

std::pair<Rational, Rational> finite_constant_range(const ProblemInstance& inst) {
  bool seen = false;
  Rational lo(0);
  Rational hi(0);
  auto visit = [&](const Scalar& s) {
    if (s.is_zero()) return;
    Rational r = s.is_exact() ? s.rat() : Rational::from_double(s.real());
    if (!seen || r < lo) lo = r;
    if (!seen || hi < r) hi = r;
    seen = true;
  };
  for (const auto& m : {inst.A, inst.B, inst.C, inst.D}) {
    if (!m) continue;
    for (const Scalar& s : m->entries()) visit(s);
  }
  for (const auto& v : {inst.p, inst.q, inst.g, inst.h}) {
    if (!v) continue;
    for (const Scalar& s : v->entries()) visit(s);
  }
  if (inst.c) visit(*inst.c);
  return {lo, hi};
}

GridSpec default_grid(const ProblemInstance& inst) {
  inst.validate();
  require_oracle_semifield(inst.semifield);
  const Semifield& sf = inst.semifield;
  const std::size_t n = inst.unknown_dim();

  std::int64_t denom = 1;
  for (std::size_t k = 2; k <= n + 1; ++k) denom = lcm64(denom, static_cast<std::int64_t>(k));
  Rational step(1, denom);

  auto [cmin, cmax] = finite_constant_range(inst);
  Rational span = cmax - cmin;
  Rational lo = cmin - span;
  Rational hi = cmax + span;

  GridSpec grid{TropVector(n), TropVector(n), step};
  std::vector<Rational> lower(n, lo);
  std::vector<Rational> upper(n, hi);

  // Explicit per-coordinate bounds shrink the box; the semifield order
  // decides which numeric side each bound lands on.
  const bool max_like = sf.id() == SemifieldId::MaxPlus;
  auto bound_below = [&](const TropVector& v) {  // constraint v <= x in the order
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      if (max_like) {
        lower[i] = std::max(lower[i], v[i].rat());
      } else {
        upper[i] = std::min(upper[i], v[i].rat());
      }
    }
  };
  auto bound_above = [&](const TropVector& v) {  // constraint x <= v in the order
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      if (max_like) {
        upper[i] = std::min(upper[i], v[i].rat());
      } else {
        lower[i] = std::max(lower[i], v[i].rat());
      }
    }
  };
  switch (inst.form) {
    case ProblemForm::P4ChebyBox:
    case ProblemForm::P18RayleighBox:
      bound_below(*inst.g);
      bound_above(*inst.h);
      break;
    case ProblemForm::P5ChebyLower:
    case ProblemForm::P16RayleighFull:
    case ProblemForm::P17RayleighIneq:
    case ProblemForm::P19RayleighPIneq:
      bound_below(*inst.g);
      break;
    case ProblemForm::P6ChebyIneqBox:
      bound_below(*inst.g);
      bound_above(*inst.h);
      break;
    default:
      break;
  }

  // Anchor the lattice at multiples of the step so step-aligned optima are
  // guaranteed to be hit regardless of the bound denominators.
  for (std::size_t i = 0; i < n; ++i) {
    Rational down = Rational((lower[i] / step).floor()) * step;
    Rational up = Rational((upper[i] / step).ceil()) * step;
    grid.lower[i] = sf.from_rational(down);
    grid.upper[i] = sf.from_rational(up);
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Lattice enumeration shared by the kernels.

namespace {

struct Lattice {
  std::vector<Rational> lower;
  Rational step;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 1;
};

Lattice build_lattice(const GridSpec& grid) {
  if (!(Rational(0) < grid.step)) throw Error("grid step must be positive");
  if (grid.lower.dim() != grid.upper.dim()) throw ShapeMismatch("grid bounds dimensions differ");
  Lattice lat;
  lat.step = grid.step;
  const std::size_t n = grid.lower.dim();
  lat.lower.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (grid.lower[i].is_zero() || grid.upper[i].is_zero()) {
      throw Error("grid bounds must be finite");
    }
    Rational lo = grid.lower[i].rat();
    Rational hi = grid.upper[i].rat();
    if (hi < lo) throw EmptyFeasibleGrid();
    lat.lower.push_back(lo);
    std::int64_t count = ((hi - lo) / grid.step).floor() + 1;
    lat.counts.push_back(static_cast<std::uint64_t>(count));
    if (lat.total > kMaxGridPoints / static_cast<std::uint64_t>(count)) {
      throw Error("grid too large", "oracle grid exceeds " + std::to_string(kMaxGridPoints) +
                                        " points");
    }
    lat.total *= static_cast<std::uint64_t>(count);
  }
  return lat;
}

/// Lexicographic decomposition: coordinate 0 is the most significant digit.
void lattice_point(const Lattice& lat, std::uint64_t index, std::vector<Rational>& out) {
  out.resize(lat.counts.size());
  for (std::size_t d = lat.counts.size(); d-- > 0;) {
    std::uint64_t t = index % lat.counts[d];
    index /= lat.counts[d];
    out[d] = lat.lower[d] + Rational(static_cast<std::int64_t>(t)) * lat.step;
  }
}

struct SearchState {
  bool found = false;
  Scalar best;
  std::vector<std::uint64_t> arg_indices;
  bool truncated = false;
};

OracleReport finalize(const ProblemInstance& inst, const Lattice& lat, SearchState&& state) {
  if (!state.found) throw EmptyFeasibleGrid();
  OracleReport report;
  report.best_value = state.best;
  report.evaluated_count = lat.total;
  report.argbest_truncated = state.truncated;
  std::vector<Rational> coords;
  for (std::uint64_t idx : state.arg_indices) {
    lattice_point(lat, idx, coords);
    TropVector x(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) x[i] = inst.semifield.from_rational(coords[i]);
    report.argbest.push_back(std::move(x));
  }
  return report;
}

// Integer fast path: every value is scaled by a common denominator L so the
// additive semifield arithmetic becomes 64-bit max/min-plus on integers. The
// public Scalar type never sees the sentinel encoding; it exists only inside
// this kernel and is checked bit-identical against the scalar reference.
struct IntKernel {
  struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> v;
    std::int64_t at(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
  };

  bool max_like = true;
  Sense sense = Sense::Minimize;
  ProblemForm form = ProblemForm::P3Rayleigh;
  std::int64_t zero_s = 0;
  std::int64_t scale = 1;  // common denominator; every value is scaled by it
  Mat A, B, C, D;
  std::vector<std::int64_t> p, q, g, h;
  std::int64_t c = 0;
  bool has_c = false;

  std::vector<std::int64_t> lower;
  std::int64_t step = 1;
  std::vector<std::uint64_t> counts;

  std::int64_t sadd(std::int64_t a, std::int64_t b) const {
    return max_like ? (a > b ? a : b) : (a < b ? a : b);
  }
  std::int64_t smul(std::int64_t a, std::int64_t b) const {
    return (a == zero_s || b == zero_s) ? zero_s : a + b;
  }
  bool sleq(std::int64_t a, std::int64_t b) const {
    if (a == zero_s) return true;
    if (b == zero_s) return false;
    return max_like ? a <= b : b <= a;
  }
  bool better(std::int64_t cand, std::int64_t best) const {
    if (cand == best) return false;
    return sense == Sense::Minimize ? sleq(cand, best) : sleq(best, cand);
  }

  void point_at(std::uint64_t index, std::int64_t* x) const {
    for (std::size_t d = counts.size(); d-- > 0;) {
      std::uint64_t t = index % counts[d];
      index /= counts[d];
      x[d] = lower[d] + static_cast<std::int64_t>(t) * step;
    }
  }

  std::int64_t apply_row(const Mat& m, std::size_t i, const std::int64_t* x) const {
    std::int64_t acc = zero_s;
    for (std::size_t j = 0; j < m.cols; ++j) acc = sadd(acc, smul(m.at(i, j), x[j]));
    return acc;
  }

  std::int64_t rayleigh(const Mat& m, const std::int64_t* x) const {
    std::int64_t acc = zero_s;
    for (std::size_t i = 0; i < m.rows; ++i) {
      for (std::size_t j = 0; j < m.cols; ++j) {
        std::int64_t e = m.at(i, j);
        if (e == zero_s) continue;
        acc = sadd(acc, e + x[j] - x[i]);
      }
    }
    return acc;
  }

  // a^- b over paired entries, zero terms skipped.
  std::int64_t conj_pair(const std::vector<std::int64_t>& a, const std::int64_t* b,
                         std::size_t dim) const {
    std::int64_t acc = zero_s;
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] == zero_s || b[i] == zero_s) continue;
      acc = sadd(acc, b[i] - a[i]);
    }
    return acc;
  }

  std::int64_t eval(const std::int64_t* x, std::vector<std::int64_t>& y) const {
    switch (form) {
      case ProblemForm::P3Rayleigh:
      case ProblemForm::P16RayleighFull:
      case ProblemForm::P17RayleighIneq:
      case ProblemForm::P18RayleighBox:
        return rayleigh(A, x);
      case ProblemForm::P4ChebyBox: {
        std::int64_t acc = zero_s;
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (q[i] != zero_s) acc = sadd(acc, x[i] - q[i]);
          if (p[i] != zero_s) acc = sadd(acc, p[i] - x[i]);
        }
        return acc;
      }
      case ProblemForm::P5ChebyLower: {
        y.resize(A.rows);
        for (std::size_t i = 0; i < A.rows; ++i) y[i] = apply_row(A, i, x);
        std::int64_t acc = zero_s;
        for (std::size_t i = 0; i < A.rows; ++i) {
          if (y[i] == zero_s) continue;
          if (q[i] != zero_s) acc = sadd(acc, y[i] - q[i]);
          if (p[i] != zero_s) acc = sadd(acc, p[i] - y[i]);
        }
        return acc;
      }
      case ProblemForm::P6ChebyIneqBox:
      case ProblemForm::P8ChebyIneq: {
        std::int64_t acc = zero_s;
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (p[i] != zero_s) acc = sadd(acc, p[i] - x[i]);
          if (q[i] != zero_s) acc = sadd(acc, x[i] - q[i]);
        }
        return acc;
      }
      case ProblemForm::P9SpanMin:
      case ProblemForm::P11SpanMax:
      case ProblemForm::P13SpanMaxIneq:
      case ProblemForm::P14SpanMaxEq: {
        std::int64_t left = zero_s;
        for (std::size_t i = 0; i < B.rows; ++i) {
          std::int64_t bi = apply_row(B, i, x);
          if (bi != zero_s && q[i] != zero_s) left = sadd(left, bi - q[i]);
        }
        std::int64_t right = zero_s;
        for (std::size_t i = 0; i < A.rows; ++i) {
          std::int64_t ai = apply_row(A, i, x);
          if (ai != zero_s && p[i] != zero_s) right = sadd(right, p[i] - ai);
        }
        return smul(left, right);
      }
      case ProblemForm::P10SpanMinEqIneq: {
        std::int64_t hi = zero_s;
        std::int64_t lo = zero_s;
        for (std::size_t i = 0; i < C.rows; ++i) {
          std::int64_t yi = apply_row(C, i, x);
          if (yi == zero_s) return zero_s;
          hi = sadd(hi, yi);
          lo = sadd(lo, -yi);
        }
        return smul(hi, lo);
      }
      case ProblemForm::P15RayleighAffine: {
        std::int64_t acc = rayleigh(A, x);
        acc = sadd(acc, conj_pair_x_p(x));
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (q[i] != zero_s) acc = sadd(acc, x[i] - q[i]);
        }
        if (has_c) acc = sadd(acc, c);
        return acc;
      }
      case ProblemForm::P19RayleighPIneq:
        return sadd(rayleigh(A, x), conj_pair_x_p(x));
    }
    return zero_s;
  }

  std::int64_t conj_pair_x_p(const std::int64_t* x) const {
    std::int64_t acc = zero_s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != zero_s) acc = sadd(acc, p[i] - x[i]);
    }
    return acc;
  }

  bool row_bound_holds(const Mat& m, const std::int64_t* x, const std::int64_t* cap) const {
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (!sleq(apply_row(m, i, x), cap[i])) return false;
    }
    return true;
  }

  bool feasible(const std::int64_t* x) const {
    switch (form) {
      case ProblemForm::P3Rayleigh:
      case ProblemForm::P9SpanMin:
      case ProblemForm::P11SpanMax:
      case ProblemForm::P15RayleighAffine:
        return true;
      case ProblemForm::P4ChebyBox:
      case ProblemForm::P18RayleighBox:
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!sleq(g[i], x[i]) || !sleq(x[i], h[i])) return false;
        }
        return true;
      case ProblemForm::P5ChebyLower:
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!sleq(g[i], x[i])) return false;
        }
        return true;
      case ProblemForm::P6ChebyIneqBox:
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!sleq(g[i], x[i]) || !sleq(x[i], h[i])) return false;
        }
        return row_bound_holds(B, x, x);
      case ProblemForm::P8ChebyIneq:
        return row_bound_holds(B, x, x);
      case ProblemForm::P10SpanMinEqIneq:
        return row_bound_holds(D, x, x);
      case ProblemForm::P13SpanMaxIneq:
        return row_bound_holds(C, x, x);
      case ProblemForm::P14SpanMaxEq:
        for (std::size_t i = 0; i < C.rows; ++i) {
          if (apply_row(C, i, x) != x[i]) return false;
        }
        return true;
      case ProblemForm::P16RayleighFull:
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!sleq(g[i], x[i])) return false;
        }
        return row_bound_holds(B, x, x) && row_bound_holds(C, x, h.data());
      case ProblemForm::P17RayleighIneq:
      case ProblemForm::P19RayleighPIneq:
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!sleq(g[i], x[i])) return false;
        }
        return row_bound_holds(B, x, x);
    }
    return false;
  }
};

/// Builds the scaled integer kernel; throws OverflowError when the common
/// denominator or the scaled magnitudes do not fit comfortably in 64 bits.
IntKernel build_int_kernel(const ProblemInstance& inst, const Lattice& lat) {
  IntKernel kern;
  kern.max_like = inst.semifield.id() == SemifieldId::MaxPlus;
  kern.sense = sense_of(inst.form);
  kern.form = inst.form;

  std::int64_t scale = lat.step.den();
  auto visit_den = [&](const Scalar& s) {
    if (s.is_finite()) scale = lcm64(scale, s.rat().den());
  };
  for (const auto& m : {inst.A, inst.B, inst.C, inst.D}) {
    if (m) {
      for (const Scalar& s : m->entries()) visit_den(s);
    }
  }
  for (const auto& v : {inst.p, inst.q, inst.g, inst.h}) {
    if (v) {
      for (const Scalar& s : v->entries()) visit_den(s);
    }
  }
  if (inst.c) visit_den(*inst.c);
  for (const Rational& r : lat.lower) scale = lcm64(scale, r.den());

  constexpr std::int64_t kMagnitudeCap = std::int64_t{1} << 56;
  auto scaled = [&](const Rational& r) {
    __int128 v = static_cast<__int128>(r.num()) * (scale / r.den());
    if (v > kMagnitudeCap || v < -kMagnitudeCap) {
      throw OverflowError("scaled grid value out of kernel range");
    }
    return static_cast<std::int64_t>(v);
  };

  // The sentinel sits so far from every attainable value that sums of a few
  // finite terms can never collide with it.
  kern.zero_s = kern.max_like ? std::numeric_limits<std::int64_t>::min() / 4
                              : std::numeric_limits<std::int64_t>::max() / 4;
  auto enc = [&](const Scalar& s) { return s.is_zero() ? kern.zero_s : scaled(s.rat()); };

  auto enc_mat = [&](const std::optional<TropMatrix>& m, IntKernel::Mat& out) {
    if (!m) return;
    out.rows = m->rows();
    out.cols = m->cols();
    out.v.reserve(out.rows * out.cols);
    for (const Scalar& s : m->entries()) out.v.push_back(enc(s));
  };
  auto enc_vec = [&](const std::optional<TropVector>& v, std::vector<std::int64_t>& out) {
    if (!v) return;
    out.reserve(v->dim());
    for (const Scalar& s : v->entries()) out.push_back(enc(s));
  };
  enc_mat(inst.A, kern.A);
  enc_mat(inst.B, kern.B);
  enc_mat(inst.C, kern.C);
  enc_mat(inst.D, kern.D);
  enc_vec(inst.p, kern.p);
  enc_vec(inst.q, kern.q);
  enc_vec(inst.g, kern.g);
  enc_vec(inst.h, kern.h);
  if (inst.c) {
    kern.has_c = true;
    kern.c = enc(*inst.c);
  }

  kern.scale = scale;
  kern.step = scaled(lat.step);
  for (const Rational& r : lat.lower) kern.lower.push_back(scaled(r));
  kern.counts = lat.counts;
  return kern;
}

SearchState run_int_kernel(const IntKernel& kern, std::uint64_t total) {
  const std::size_t n = kern.counts.size();
  SearchState global;
  std::int64_t global_best = 0;
  std::vector<std::uint64_t> global_args;
  bool global_found = false;
  bool global_trunc = false;

#pragma omp parallel
  {
    std::vector<std::int64_t> x(n);
    std::vector<std::int64_t> scratch;
    std::int64_t best = 0;
    std::vector<std::uint64_t> args;
    bool found = false;
    bool trunc = false;

#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      std::uint64_t idx = static_cast<std::uint64_t>(i);
      kern.point_at(idx, x.data());
      if (!kern.feasible(x.data())) continue;
      std::int64_t v = kern.eval(x.data(), scratch);
      if (!found || kern.better(v, best)) {
        found = true;
        best = v;
        args.assign(1, idx);
        trunc = false;
      } else if (v == best) {
        if (args.size() < kArgbestCap) {
          args.push_back(idx);
        } else {
          trunc = true;
        }
      }
    }

#pragma omp critical
    {
      if (found) {
        if (!global_found || kern.better(best, global_best)) {
          global_found = true;
          global_best = best;
          global_args = args;
          global_trunc = trunc;
        } else if (best == global_best) {
          global_args.insert(global_args.end(), args.begin(), args.end());
          global_trunc = global_trunc || trunc;
        }
      }
    }
  }

  if (global_found) {
    std::sort(global_args.begin(), global_args.end());
    if (global_args.size() > kArgbestCap) {
      global_args.resize(kArgbestCap);
      global_trunc = true;
    }
    global.found = true;
    global.arg_indices = std::move(global_args);
    global.truncated = global_trunc;
    global.best = global_best == kern.zero_s
                      ? Scalar::zero()
                      : Scalar::exact(Rational(global_best, kern.scale));
  }
  return global;
}

SearchState run_scalar_search(const ProblemInstance& inst, const Lattice& lat) {
  const Semifield& sf = inst.semifield;
  const Sense sense = sense_of(inst.form);
  SearchState state;
  std::vector<Rational> coords;
  for (std::uint64_t idx = 0; idx < lat.total; ++idx) {
    lattice_point(lat, idx, coords);
    TropVector x(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) x[i] = sf.from_rational(coords[i]);
    if (!check_feasible(inst, x)) continue;
    Scalar v = evaluate_objective(inst, x);
    bool better = false;
    if (state.found) {
      better = sense == Sense::Minimize ? sf.less(v, state.best) : sf.less(state.best, v);
    }
    if (!state.found || better) {
      state.found = true;
      state.best = v;
      state.arg_indices.assign(1, idx);
      state.truncated = false;
    } else if (sf.eq(v, state.best)) {
      if (state.arg_indices.size() < kArgbestCap) {
        state.arg_indices.push_back(idx);
      } else {
        state.truncated = true;
      }
    }
  }
  return state;
}

}  // namespace

OracleReport grid_optimize(const ProblemInstance& inst, const GridSpec& grid) {
  inst.validate();
  require_oracle_semifield(inst.semifield);
  if (grid.lower.dim() != inst.unknown_dim()) {
    throw ShapeMismatch("grid dimension does not match the unknown vector");
  }
  Lattice lat = build_lattice(grid);
  try {
    IntKernel kern = build_int_kernel(inst, lat);
    return finalize(inst, lat, run_int_kernel(kern, lat.total));
  } catch (const OverflowError&) {
    // Data too wide for the integer kernel; the scalar path has no such limit.
    return finalize(inst, lat, run_scalar_search(inst, lat));
  }
}

OracleReport grid_optimize_serial(const ProblemInstance& inst, const GridSpec& grid) {
  inst.validate();
  require_oracle_semifield(inst.semifield);
  if (grid.lower.dim() != inst.unknown_dim()) {
    throw ShapeMismatch("grid dimension does not match the unknown vector");
  }
  Lattice lat = build_lattice(grid);
  return finalize(inst, lat, run_scalar_search(inst, lat));
}

// ---------------------------------------------------------------------------
// Solution-set membership and sampling.

namespace {

/// Maximal u with G u <= x (componentwise residuation).
TropVector residual_preimage(const Semifield& sf, const TropMatrix& g, const TropVector& x) {
  TropVector u(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Scalar acc = Scalar::zero();  // (+)_i x_i^{-1} g_ij
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (g.at(i, j).is_zero()) continue;
      acc = sf.add(acc, sf.mul(sf.inverse(x[i]), g.at(i, j)));
    }
    u[j] = acc.is_zero() ? Scalar::zero() : sf.inverse(acc);
  }
  return u;
}

}  // namespace

bool set_contains(const Semifield& sf, const SolutionSet& set, const TropVector& x) {
  if (!x.is_regular()) return false;
  if (const auto* iv = std::get_if<SolutionSet::Interval>(&set.v)) {
    return vector_leq(sf, iv->lower, x) && vector_leq(sf, x, iv->upper);
  }
  if (const auto* gi = std::get_if<SolutionSet::GeneratedInterval>(&set.v)) {
    if (x.dim() != gi->generator.rows()) return false;
    TropVector u = residual_preimage(sf, gi->generator, x);
    for (std::size_t j = 0; j < u.dim(); ++j) u[j] = sf.min(u[j], gi->u_upper[j]);
    return vector_eq(sf, mat_vec(sf, gi->generator, u), x) && vector_leq(sf, gi->u_lower, u);
  }
  if (const auto* gc = std::get_if<SolutionSet::GeneratedCone>(&set.v)) {
    if (x.dim() != gc->generator.rows()) return false;
    TropVector u = residual_preimage(sf, gc->generator, x);
    return vector_eq(sf, mat_vec(sf, gc->generator, u), x) &&
           vector_leq(sf, mat_vec(sf, gc->generator, gc->u_lower), x);
  }
  if (const auto* pb = std::get_if<SolutionSet::PinnedScaledBox>(&set.v)) {
    if (pb->pin.is_zero()) return false;
    Scalar alpha = sf.mul(x[pb->k], sf.inverse(pb->pin));
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (j == pb->k) continue;
      if (!sf.leq(x[j], sf.mul(alpha, pb->caps[j]))) return false;
    }
    return true;
  }
  if (const auto* sub = std::get_if<SolutionSet::Substituted>(&set.v)) {
    if (x.dim() != sub->outer.rows()) return false;
    TropVector u = residual_preimage(sf, sub->outer, x);
    return vector_eq(sf, mat_vec(sf, sub->outer, u), x) && set_contains(sf, *sub->inner, u);
  }
  return false;
}

namespace {

class SetSampler {
 public:
  SetSampler(const Semifield& sf, const Rational& offset, std::uint64_t seed)
      : sf_(sf), offset_(sf.from_rational(offset)), rng_(seed) {}

  /// lo * (lo^-1 hi)^t for a random t in [0, 1] on a 1/16 lattice; exact in
  /// exact mode, endpoints included.
  Scalar between(const Scalar& lo, const Scalar& hi) {
    Scalar span = sf_.mul(sf_.inverse(lo), hi);
    return sf_.mul(lo, sf_.power(span, draw(), 16));
  }

  Scalar above(const Scalar& base) { return sf_.mul(base, sf_.power(offset_, draw(), 16)); }
  Scalar below(const Scalar& cap) {
    return sf_.mul(cap, sf_.inverse(sf_.power(offset_, draw(), 16)));
  }

  TropVector sample(const SolutionSet& set, std::size_t dims_hint);

 private:
  std::int64_t draw() { return static_cast<std::int64_t>(rng_() % 17); }

  const Semifield& sf_;
  Scalar offset_;
  std::mt19937_64 rng_;
};

TropVector SetSampler::sample(const SolutionSet& set, std::size_t dims_hint) {
  if (const auto* iv = std::get_if<SolutionSet::Interval>(&set.v)) {
    TropVector x(iv->lower.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
      Scalar lo = iv->lower[i].is_zero() ? below(iv->upper[i]) : iv->lower[i];
      x[i] = between(lo, iv->upper[i]);
    }
    return x;
  }
  if (const auto* gi = std::get_if<SolutionSet::GeneratedInterval>(&set.v)) {
    TropVector u(gi->u_lower.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
      Scalar lo = gi->u_lower[i].is_zero() ? below(gi->u_upper[i]) : gi->u_lower[i];
      u[i] = between(lo, gi->u_upper[i]);
    }
    return mat_vec(sf_, gi->generator, u);
  }
  if (const auto* gc = std::get_if<SolutionSet::GeneratedCone>(&set.v)) {
    TropVector u(gc->u_lower.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
      Scalar base = gc->u_lower[i].is_zero() ? sf_.one() : gc->u_lower[i];
      u[i] = above(base);
    }
    return mat_vec(sf_, gc->generator, u);
  }
  if (const auto* pb = std::get_if<SolutionSet::PinnedScaledBox>(&set.v)) {
    Scalar alpha = sf_.mul(above(sf_.one()), sf_.inverse(sf_.power(offset_, draw(), 16)));
    TropVector x(pb->caps.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) x[j] = below(sf_.mul(alpha, pb->caps[j]));
    x[pb->k] = sf_.mul(alpha, pb->pin);
    return x;
  }
  if (const auto* sub = std::get_if<SolutionSet::Substituted>(&set.v)) {
    TropVector u = sample(*sub->inner, sub->outer.cols());
    return mat_vec(sf_, sub->outer, u);
  }
  return TropVector(dims_hint);
}

}  // namespace

std::vector<TropVector> sample_solution_set(const Semifield& sf, const SolutionSet& set,
                                            std::size_t count, const Rational& offset,
                                            std::uint64_t seed) {
  SetSampler sampler(sf, offset, seed);
  std::vector<TropVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.sample(set, 1));
  return out;
}

VerificationRecord check_solution_set(const ProblemInstance& inst, const OptimumReport& report,
                                      int samples, std::uint64_t seed,
                                      const std::optional<GridSpec>& grid_override) {
  const Semifield& sf = inst.semifield;
  VerificationRecord record;
  record.optimum = sf.to_string(report.value);

  auto [cmin, cmax] = finite_constant_range(inst);
  Rational offset = cmax - cmin;
  if (offset < Rational(1)) offset = Rational(1);

  std::vector<TropVector> draws =
      sample_solution_set(sf, report.set, static_cast<std::size_t>(std::max(samples, 0)), offset,
                          seed);
  for (const TropVector& x : draws) {
    if (!check_feasible(inst, x)) {
      throw VerificationFailure("sampled solution not feasible");
    }
    if (!sf.eq(evaluate_objective(inst, x), report.value)) {
      throw VerificationFailure("sampled solution does not attain the optimum");
    }
    ++record.samples_checked;
  }

  GridSpec grid = grid_override ? *grid_override : default_grid(inst);
  OracleReport oracle = grid_optimize(inst, grid);
  record.oracle_best = sf.to_string(oracle.best_value);
  record.grid_points = oracle.evaluated_count;
  if (!sf.eq(oracle.best_value, report.value)) {
    throw VerificationFailure("oracle best value " + record.oracle_best +
                              " != reported optimum " + record.optimum);
  }

  const bool interval_shaped = std::holds_alternative<SolutionSet::Interval>(report.set.v) ||
                               std::holds_alternative<SolutionSet::GeneratedInterval>(report.set.v);
  if (interval_shaped) {
    for (const TropVector& x : oracle.argbest) {
      if (!set_contains(sf, report.set, x)) {
        throw VerificationFailure("oracle argbest outside the reported solution set");
      }
      ++record.argbest_checked;
    }
  }
  return record;
}

}  // namespace tropopt
