#include "tropopt/solvers.hpp"

#include <cassert>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tropopt/algebra.hpp"
#include "tropopt/errors.hpp"
#include "tropopt/spectral.hpp"

namespace tropopt {

namespace {

constexpr std::size_t kMaxTraceSumOrder = 12;

void require_regular(const TropVector& v, const char* name, std::vector<std::string>& diag) {
  if (!v.is_regular()) throw NotRegular(std::string(name) + " not regular");
  diag.push_back(std::string(name) + " regular");
}

void require_nonzero(const TropVector& v, const char* name, std::vector<std::string>& diag) {
  if (!v.is_nonzero()) throw NotRegular(std::string(name) + " is zero");
  diag.push_back(std::string(name) + " nonzero");
}

void require_trace_leq_one(const Semifield& sf, const TropMatrix& m, const char* name,
                           std::vector<std::string>& diag) {
  if (!sf.leq(trace_polynomial(sf, m), sf.one())) {
    throw Infeasible(std::string("Tr(") + name + ") > 1");
  }
  diag.push_back(std::string("Tr(") + name + ") <= 1");
}

Scalar positive_spectral_radius(const Semifield& sf, const TropMatrix& a,
                                std::vector<std::string>& diag) {
  Scalar lambda = spectral_radius(sf, a);
  if (lambda.is_zero()) throw ZeroSpectralRadius();
  diag.push_back("lambda > 0");
  return lambda;
}

void check_order_bound(std::size_t n) {
  if (n > kMaxTraceSumOrder) {
    throw DimensionTooLarge("trace-sum enumeration limited to order " +
                            std::to_string(kMaxTraceSumOrder) + ", got " + std::to_string(n));
  }
}

/// Fills zero components of u with 1 (possible because star/plus generators
/// carry unit diagonals, so the result stays inside the described set).
TropVector one_filled(const Semifield& sf, const TropVector& u) {
  TropVector v = u;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) v[i] = sf.one();
  }
  return v;
}

/// The two bounds of a generated interval must be ordered once the
/// preconditions hold; a violation means the closed form was misapplied.
void assert_bounds_ordered(const Semifield& sf, const TropVector& lo, const TropVector& hi,
                           const char* where) {
  if (!vector_leq(sf, lo, hi)) {
    throw Error(std::string(where) + ": solution interval is empty");
  }
}

/// (+) of tr^{1/k}(W E) over all words W in {A, B} of length 1..n that
/// contain k >= 1 letters A. `require_leading_a` restricts to words starting
/// with A (the variant without the B^{i0} prefix); `e` right-multiplies every
/// word before the trace is taken (pass I columns via nullptr to skip).
Scalar trace_word_sum(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                      const TropMatrix* e, bool require_leading_a) {
  const std::size_t n = a.rows();
  Scalar acc = Scalar::zero();

  auto trace_with_e = [&](const TropMatrix& w) {
    if (e == nullptr) return trace(sf, w);
    Scalar t = Scalar::zero();
    for (std::size_t i = 0; i < n; ++i) {
      Scalar d = Scalar::zero();
      for (std::size_t k = 0; k < n; ++k) d = sf.add(d, sf.mul(w.at(i, k), e->at(k, i)));
      t = sf.add(t, d);
    }
    return t;
  };

  std::function<void(const TropMatrix&, std::size_t, std::size_t)> walk =
      [&](const TropMatrix& word, std::size_t length, std::size_t a_count) {
        if (a_count >= 1) {
          acc = sf.add(acc, sf.power(trace_with_e(word), 1, static_cast<std::int64_t>(a_count)));
        }
        if (length == n) return;
        walk(multiply(sf, word, a), length + 1, a_count + 1);
        if (!(require_leading_a && length == 0)) {
          walk(multiply(sf, word, b), length + 1, a_count);
        }
      };
  walk(TropMatrix::identity(n, sf), 0, 0);
  return acc;
}

}  // namespace

OptimumReport cheby_box(const Semifield& sf, const TropVector& p, const TropVector& q,
                        const TropVector& g, const TropVector& h) {
  if (p.dim() != q.dim() || p.dim() != g.dim() || p.dim() != h.dim()) {
    throw ShapeMismatch("cheby_box: p, q, g, h must share one dimension");
  }
  OptimumReport report;
  require_regular(p, "p", report.diagnostics);
  require_regular(q, "q", report.diagnostics);
  // x <= h admits regular solutions only for regular h (a zero component
  // would pin x at zero); the closed form presumes it.
  require_regular(h, "h", report.diagnostics);
  if (!vector_leq(sf, g, h)) throw BoundsInverted();
  report.diagnostics.push_back("g <= h");

  Scalar mu = sf.power(conj_dot(sf, q, p), 1, 2);
  mu = sf.add(mu, conj_dot(sf, q, g));
  mu = sf.add(mu, conj_dot(sf, h, p));

  Scalar mu_inv = sf.inverse(mu);
  TropVector lower = add(sf, scale(sf, mu_inv, p), g);
  TropVector upper(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Scalar bound = sf.add(sf.mul(mu_inv, sf.inverse(q[i])), sf.inverse(h[i]));
    upper[i] = sf.inverse(bound);
  }
  assert_bounds_ordered(sf, lower, upper, "cheby_box");

  report.value = mu;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::Interval{lower, upper};
  report.witness = lower;
  return report;
}

OptimumReport cheby_lower(const Semifield& sf, const TropMatrix& a, const TropVector& p,
                          const TropVector& q, const TropVector& g) {
  if (p.dim() != a.rows() || q.dim() != a.rows() || g.dim() != a.cols()) {
    throw ShapeMismatch("cheby_lower: dimensions inconsistent with A");
  }
  OptimumReport report;
  RegularityClass rc = classify_regularity(a);
  if (!rc.regular) throw NotRegular("A not regular");
  report.diagnostics.push_back("A regular");
  require_regular(p, "p", report.diagnostics);
  require_regular(q, "q", report.diagnostics);

  TropVector w = conjugate(sf, conj_vec_mat(sf, q, a));  // (q^- A)^-
  Scalar delta = sf.power(conj_dot(sf, mat_vec(sf, a, w), p), 1, 2);
  Scalar mu = sf.add(delta, conj_dot(sf, q, mat_vec(sf, a, g)));

  TropVector x = scale(sf, mu, w);
  report.value = mu;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::Interval{x, x};
  report.witness = x;
  return report;
}

OptimumReport cheby_ineq(const Semifield& sf, const TropMatrix& b, const TropVector& p,
                         const TropVector& q, const TropVector& g,
                         const std::optional<TropVector>& h) {
  if (!b.is_square() || p.dim() != b.cols() || q.dim() != b.cols() || g.dim() != b.cols() ||
      (h && h->dim() != b.cols())) {
    throw ShapeMismatch("cheby_ineq: dimensions inconsistent with B");
  }
  OptimumReport report;
  require_nonzero(p, "p", report.diagnostics);
  require_regular(q, "q", report.diagnostics);
  require_trace_leq_one(sf, b, "B", report.diagnostics);
  TropMatrix star = kleene_star(sf, b);

  Scalar theta = sf.power(conj_dot(sf, q, mat_vec(sf, star, p)), 1, 2);
  TropVector u_lower(b.cols());
  TropVector u_upper(b.cols());
  if (h) {
    require_regular(*h, "h", report.diagnostics);
    if (!sf.leq(conj_dot(sf, *h, mat_vec(sf, star, g)), sf.one())) {
      throw Infeasible("h-B*g > 1");
    }
    report.diagnostics.push_back("h-B*g <= 1");
    theta = sf.add(theta, conj_dot(sf, *h, mat_vec(sf, star, p)));
    theta = sf.add(theta, conj_dot(sf, q, mat_vec(sf, star, g)));

    Scalar theta_inv = sf.inverse(theta);
    u_lower = add(sf, g, scale(sf, theta_inv, p));
    TropVector row(b.cols());  // h^- (+) theta^{-1} q^-
    for (std::size_t i = 0; i < b.cols(); ++i) {
      row[i] = sf.add(sf.inverse((*h)[i]), sf.mul(theta_inv, sf.inverse(q[i])));
    }
    u_upper = conjugate(sf, vec_mat(sf, row, star));
  } else {
    Scalar theta_inv = sf.inverse(theta);
    u_lower = scale(sf, theta_inv, p);
    u_upper = scale(sf, theta, conjugate(sf, conj_vec_mat(sf, q, star)));
  }
  assert_bounds_ordered(sf, u_lower, u_upper, "cheby_ineq");

  report.value = theta;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::GeneratedInterval{star, u_lower, u_upper};
  report.witness = mat_vec(sf, star, u_upper);
  return report;
}

OptimumReport span_min(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                       const TropVector& p, const TropVector& q) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || p.dim() != a.rows() || q.dim() != a.rows()) {
    throw ShapeMismatch("span_min: A, B, p, q dimensions inconsistent");
  }
  OptimumReport report;
  if (!classify_regularity(a).row_regular) throw NotRegular("A not row-regular");
  report.diagnostics.push_back("A row-regular");
  if (!classify_regularity(b).column_regular) throw NotRegular("B not column-regular");
  report.diagnostics.push_back("B column-regular");
  require_nonzero(p, "p", report.diagnostics);
  require_regular(q, "q", report.diagnostics);

  TropVector w = conjugate(sf, conj_vec_mat(sf, q, b));  // (q^- B)^-
  Scalar delta = conj_dot(sf, mat_vec(sf, a, w), p);

  report.value = delta;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::GeneratedCone{w.as_column(), TropVector(1)};
  report.witness = w;
  return report;
}

OptimumReport span_min_constrained(const Semifield& sf, const TropMatrix& c, const TropMatrix& d) {
  if (!c.is_square() || !d.is_square() || c.rows() != d.rows()) {
    throw ShapeMismatch("span_min_constrained: C and D must be square of equal order");
  }
  OptimumReport report;
  if (!classify_regularity(c).regular) throw NotRegular("C not regular");
  report.diagnostics.push_back("C regular");
  require_trace_leq_one(sf, d, "D", report.diagnostics);

  TropMatrix d_star = kleene_star(sf, d);
  TropMatrix m = multiply(sf, c, d_star);
  TropVector w = conjugate(sf, conj_vec_mat(sf, ones_vector(sf, m.rows()), m));
  Scalar delta = conj_dot(sf, mat_vec(sf, m, w), ones_vector(sf, m.rows()));

  TropVector x = mat_vec(sf, d_star, w);
  report.value = delta;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::GeneratedCone{x.as_column(), TropVector(1)};
  report.witness = x;
  return report;
}

OptimumReport span_max(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                       const TropVector& p, const TropVector& q) {
  if (a.cols() != b.cols() || p.dim() != a.rows() || q.dim() != b.rows()) {
    throw ShapeMismatch("span_max: A, B, p, q dimensions inconsistent");
  }
  OptimumReport report;
  for (const Scalar& e : a.entries()) {
    if (e.is_zero()) throw NotRegular("A has a zero entry");
  }
  report.diagnostics.push_back("columns of A regular");
  if (!classify_regularity(b).column_regular) throw NotRegular("B not column-regular");
  report.diagnostics.push_back("B column-regular");
  require_regular(p, "p", report.diagnostics);
  require_regular(q, "q", report.diagnostics);

  const std::size_t n = a.cols();
  const std::size_t m = a.rows();

  // Per-column scores q^- b_i (a_i^- p); ties break to the smallest index.
  std::vector<Scalar> conj_col_p(n);
  Scalar delta = Scalar::zero();
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    conj_col_p[i] = conj_dot(sf, a.column(i), p);
    Scalar score = sf.mul(conj_dot(sf, q, b.column(i)), conj_col_p[i]);
    if (i == 0 || sf.less(delta, score)) {
      delta = score;
      k = i;
    }
  }

  std::size_t s = 0;
  Scalar best = Scalar::zero();
  for (std::size_t i = 0; i < m; ++i) {
    Scalar cand = sf.mul(sf.inverse(a.at(i, k)), p[i]);
    if (i == 0 || sf.less(best, cand)) {
      best = cand;
      s = i;
    }
  }

  Scalar pin = conj_col_p[k];
  TropVector caps(n);
  for (std::size_t j = 0; j < n; ++j) caps[j] = sf.mul(sf.inverse(a.at(s, j)), p[s]);

  TropVector witness = caps;
  witness[k] = pin;

  report.value = delta;
  report.sense = Sense::Maximize;
  report.set.v = SolutionSet::PinnedScaledBox{k, s, pin, caps};
  report.witness = witness;
  return report;
}

OptimumReport span_max_constrained(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                                   const TropMatrix& c, const TropVector& p, const TropVector& q,
                                   ConstraintKind kind) {
  if (!c.is_square() || c.rows() != a.cols() || a.cols() != b.cols()) {
    throw ShapeMismatch("span_max_constrained: C must be square of order A.cols()");
  }
  OptimumReport report;
  TropMatrix generator(1, 1);
  if (kind == ConstraintKind::Inequality) {
    require_trace_leq_one(sf, c, "C", report.diagnostics);
    generator = kleene_star(sf, c);
  } else {
    if (!sf.eq(trace_polynomial(sf, c), sf.one())) throw Infeasible("Tr(C) != 1");
    report.diagnostics.push_back("Tr(C) = 1");
    generator = plus_closure(sf, c);
    // A plus-closure with a zero row forces that component of C^+ u to zero:
    // the constrained problem then has no regular solution.
    if (!classify_regularity(generator).row_regular) {
      throw NotRegular("C+ has a zero row");
    }
  }

  OptimumReport inner = span_max(sf, multiply(sf, a, generator), multiply(sf, b, generator), p, q);
  report.diagnostics.insert(report.diagnostics.end(), inner.diagnostics.begin(),
                            inner.diagnostics.end());

  report.value = inner.value;
  report.sense = Sense::Maximize;
  report.set.v = SolutionSet::Substituted{
      generator, std::make_shared<SolutionSet>(std::move(inner.set))};
  report.witness = mat_vec(sf, generator, inner.witness);
  return report;
}

OptimumReport rayleigh(const Semifield& sf, const TropMatrix& a) {
  OptimumReport report;
  Scalar lambda = positive_spectral_radius(sf, a, report.diagnostics);
  TropMatrix star = kleene_star(sf, scale(sf, sf.inverse(lambda), a));

  report.value = lambda;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::GeneratedCone{star, TropVector(a.rows())};
  report.witness = mat_vec(sf, star, ones_vector(sf, a.rows()));
  return report;
}

OptimumReport rayleigh_affine(const Semifield& sf, const TropMatrix& a, const TropVector& p,
                              const TropVector& q, const Scalar& c) {
  if (!a.is_square() || p.dim() != a.cols() || q.dim() != a.cols()) {
    throw ShapeMismatch("rayleigh_affine: dimensions inconsistent with A");
  }
  OptimumReport report;
  require_regular(q, "q", report.diagnostics);
  Scalar lambda = positive_spectral_radius(sf, a, report.diagnostics);

  Scalar mu = lambda;
  TropMatrix power = TropMatrix::identity(a.rows(), sf);
  for (std::size_t m = 1; m <= a.rows(); ++m) {
    Scalar term = conj_dot(sf, q, mat_vec(sf, power, p));
    mu = sf.add(mu, sf.power(term, 1, static_cast<std::int64_t>(m) + 1));
    if (m < a.rows()) power = multiply(sf, power, a);
  }
  mu = sf.add(mu, c);

  Scalar mu_inv = sf.inverse(mu);
  TropMatrix star = kleene_star(sf, scale(sf, mu_inv, a));
  TropVector u_lower = scale(sf, mu_inv, p);
  TropVector u_upper = scale(sf, mu, conjugate(sf, conj_vec_mat(sf, q, star)));
  assert_bounds_ordered(sf, u_lower, u_upper, "rayleigh_affine");

  report.value = mu;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::GeneratedInterval{star, u_lower, u_upper};
  report.witness = mat_vec(sf, star, u_upper);
  return report;
}

OptimumReport rayleigh_full(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                            const TropMatrix& c_mat, const TropVector& g, const TropVector& h) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows() || c_mat.cols() != a.cols() ||
      g.dim() != a.cols() || h.dim() != c_mat.rows()) {
    throw ShapeMismatch("rayleigh_full: dimensions inconsistent");
  }
  check_order_bound(a.rows());
  OptimumReport report;
  positive_spectral_radius(sf, a, report.diagnostics);
  require_trace_leq_one(sf, b, "B", report.diagnostics);
  require_regular(h, "h", report.diagnostics);

  const bool c_is_zero = c_mat.is_all_zero();
  if (!c_is_zero && !classify_regularity(c_mat).column_regular) {
    throw NotRegular("C not column-regular");
  }
  report.diagnostics.push_back(c_is_zero ? "C = 0" : "C column-regular");

  TropMatrix b_star = kleene_star(sf, b);
  if (!c_is_zero) {
    Scalar gate = conj_dot(sf, h, mat_vec(sf, c_mat, mat_vec(sf, b_star, g)));
    if (!sf.leq(gate, sf.one())) throw Infeasible("h-C B*g > 1");
    report.diagnostics.push_back("h-C B*g <= 1");
  }

  // E = I (+) g (h^- C); with C = 0 the factor degenerates to I and the box
  // constraint disappears, leaving the cone solution of the B-variant.
  const std::size_t n = a.rows();
  Scalar theta = Scalar::zero();
  if (c_is_zero) {
    theta = trace_word_sum(sf, a, b, nullptr, false);
  } else {
    TropVector hc = conj_vec_mat(sf, h, c_mat);
    TropMatrix e = TropMatrix::identity(n, sf);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        e.at(i, j) = sf.add(e.at(i, j), sf.mul(g[i], hc[j]));
      }
    }
    theta = trace_word_sum(sf, a, b, &e, false);
  }

  TropMatrix star = kleene_star(sf, add(sf, scale(sf, sf.inverse(theta), a), b));
  report.value = theta;
  report.sense = Sense::Minimize;
  if (c_is_zero) {
    report.set.v = SolutionSet::GeneratedCone{star, g};
    report.witness = mat_vec(sf, star, one_filled(sf, g));
  } else {
    TropVector u_upper = conjugate(sf, vec_mat(sf, conj_vec_mat(sf, h, c_mat), star));
    assert_bounds_ordered(sf, g, u_upper, "rayleigh_full");
    report.set.v = SolutionSet::GeneratedInterval{star, g, u_upper};
    report.witness = mat_vec(sf, star, u_upper);
  }
  return report;
}

OptimumReport rayleigh_ineq(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                            const TropVector& g) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows() || g.dim() != a.cols()) {
    throw ShapeMismatch("rayleigh_ineq: dimensions inconsistent");
  }
  check_order_bound(a.rows());
  OptimumReport report;
  positive_spectral_radius(sf, a, report.diagnostics);
  require_trace_leq_one(sf, b, "B", report.diagnostics);

  Scalar theta = trace_word_sum(sf, a, b, nullptr, true);
  TropMatrix star = kleene_star(sf, add(sf, scale(sf, sf.inverse(theta), a), b));

  report.value = theta;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::GeneratedCone{star, g};
  report.witness = mat_vec(sf, star, one_filled(sf, g));
  return report;
}

OptimumReport rayleigh_box(const Semifield& sf, const TropMatrix& a, const TropVector& g,
                           const TropVector& h) {
  if (!a.is_square() || g.dim() != a.cols() || h.dim() != a.cols()) {
    throw ShapeMismatch("rayleigh_box: dimensions inconsistent");
  }
  OptimumReport report;
  Scalar lambda = positive_spectral_radius(sf, a, report.diagnostics);
  require_regular(h, "h", report.diagnostics);
  if (!sf.leq(conj_dot(sf, h, g), sf.one())) throw Infeasible("h-g > 1");
  report.diagnostics.push_back("h-g <= 1");

  Scalar theta = lambda;
  TropMatrix power = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    Scalar term = conj_dot(sf, h, mat_vec(sf, power, g));
    theta = sf.add(theta, sf.power(term, 1, static_cast<std::int64_t>(k)));
    if (k < a.rows()) power = multiply(sf, power, a);
  }

  TropMatrix star = kleene_star(sf, scale(sf, sf.inverse(theta), a));
  TropVector u_upper = conjugate(sf, conj_vec_mat(sf, h, star));
  assert_bounds_ordered(sf, g, u_upper, "rayleigh_box");

  report.value = theta;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::GeneratedInterval{star, g, u_upper};
  report.witness = mat_vec(sf, star, u_upper);
  return report;
}

OptimumReport rayleigh_p_ineq(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                              const TropVector& p, const TropVector& g) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows() || p.dim() != a.cols() ||
      g.dim() != a.cols()) {
    throw ShapeMismatch("rayleigh_p_ineq: dimensions inconsistent");
  }
  check_order_bound(a.rows());
  OptimumReport report;
  positive_spectral_radius(sf, a, report.diagnostics);
  require_trace_leq_one(sf, b, "B", report.diagnostics);

  Scalar theta = trace_word_sum(sf, a, b, nullptr, true);
  TropMatrix star = kleene_star(sf, add(sf, scale(sf, sf.inverse(theta), a), b));
  TropVector u_lower = add(sf, scale(sf, sf.inverse(theta), p), g);

  report.value = theta;
  report.sense = Sense::Minimize;
  report.set.v = SolutionSet::GeneratedCone{star, u_lower};
  report.witness = mat_vec(sf, star, one_filled(sf, u_lower));
  return report;
}

OptimumReport solve(const ProblemInstance& inst) {
  inst.validate();
  const Semifield& sf = inst.semifield;
  switch (inst.form) {
    case ProblemForm::P3Rayleigh:
      return rayleigh(sf, *inst.A);
    case ProblemForm::P4ChebyBox:
      return cheby_box(sf, *inst.p, *inst.q, *inst.g, *inst.h);
    case ProblemForm::P5ChebyLower:
      return cheby_lower(sf, *inst.A, *inst.p, *inst.q, *inst.g);
    case ProblemForm::P6ChebyIneqBox:
      return cheby_ineq(sf, *inst.B, *inst.p, *inst.q, *inst.g, inst.h);
    case ProblemForm::P8ChebyIneq:
      return cheby_ineq(sf, *inst.B, *inst.p, *inst.q, TropVector(inst.B->cols()), std::nullopt);
    case ProblemForm::P9SpanMin:
      return span_min(sf, *inst.A, *inst.B, *inst.p, *inst.q);
    case ProblemForm::P10SpanMinEqIneq:
      return span_min_constrained(sf, *inst.C, *inst.D);
    case ProblemForm::P11SpanMax:
      return span_max(sf, *inst.A, *inst.B, *inst.p, *inst.q);
    case ProblemForm::P13SpanMaxIneq:
      return span_max_constrained(sf, *inst.A, *inst.B, *inst.C, *inst.p, *inst.q,
                                  ConstraintKind::Inequality);
    case ProblemForm::P14SpanMaxEq:
      return span_max_constrained(sf, *inst.A, *inst.B, *inst.C, *inst.p, *inst.q,
                                  ConstraintKind::Equality);
    case ProblemForm::P15RayleighAffine:
      return rayleigh_affine(sf, *inst.A, *inst.p, *inst.q, *inst.c);
    case ProblemForm::P16RayleighFull:
      return rayleigh_full(sf, *inst.A, *inst.B, *inst.C, *inst.g, *inst.h);
    case ProblemForm::P17RayleighIneq:
      return rayleigh_ineq(sf, *inst.A, *inst.B, *inst.g);
    case ProblemForm::P18RayleighBox:
      return rayleigh_box(sf, *inst.A, *inst.g, *inst.h);
    case ProblemForm::P19RayleighPIneq:
      return rayleigh_p_ineq(sf, *inst.A, *inst.B, *inst.p, *inst.g);
  }
  throw Error("unknown problem form");
}

}  // namespace tropopt
