#pragma once

#include "tropopt/problem.hpp"

namespace tropopt {

// Closed-form solvers. Each returns the optimum value, a symbolic
// description of the optima, and one regular feasible witness attaining the
// value exactly. Violated preconditions raise NotRegular / Infeasible /
// ZeroSpectralRadius / BoundsInverted with the condition name.

/// minimize q^- x (+) x^- p over g <= x <= h.
OptimumReport cheby_box(const Semifield& sf, const TropVector& p, const TropVector& q,
                        const TropVector& g, const TropVector& h);

/// minimize q^- A x (+) (A x)^- p over x >= g. The closed form guarantees a
/// minimizer, not the full optimal set; the report carries a singleton.
OptimumReport cheby_lower(const Semifield& sf, const TropMatrix& a, const TropVector& p,
                          const TropVector& q, const TropVector& g);

/// minimize x^- p (+) q^- x over B x (+) g <= x (<= h when h is given; pass
/// g = zero vector and omit h for the plain B x <= x variant).
OptimumReport cheby_ineq(const Semifield& sf, const TropMatrix& b, const TropVector& p,
                         const TropVector& q, const TropVector& g,
                         const std::optional<TropVector>& h);

/// minimize q^- B x (A x)^- p (unconstrained).
OptimumReport span_min(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                       const TropVector& p, const TropVector& q);

/// minimize 1^T y y^- 1 subject to C x = y, D x <= x.
OptimumReport span_min_constrained(const Semifield& sf, const TropMatrix& c, const TropMatrix& d);

/// maximize q^- B x (A x)^- p (unconstrained).
OptimumReport span_max(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                       const TropVector& p, const TropVector& q);

enum class ConstraintKind { Inequality, Equality };

/// maximize q^- B x (A x)^- p subject to C x <= x (inequality) or C x = x
/// (equality), by substituting the generator of the constraint set.
OptimumReport span_max_constrained(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                                   const TropMatrix& c, const TropVector& p, const TropVector& q,
                                   ConstraintKind kind);

/// minimize x^- A x (unconstrained); the optimum is the spectral radius.
OptimumReport rayleigh(const Semifield& sf, const TropMatrix& a);

/// minimize x^- A x (+) x^- p (+) q^- x (+) c.
OptimumReport rayleigh_affine(const Semifield& sf, const TropMatrix& a, const TropVector& p,
                              const TropVector& q, const Scalar& c);

/// minimize x^- A x subject to B x (+) g <= x, C x <= h. The all-zero C is
/// accepted (the row constraint disappears and the solution set becomes the
/// cone of the b-variant). Orders above 12 are refused (the trace-sum
/// enumeration is exponential).
OptimumReport rayleigh_full(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                            const TropMatrix& c_mat, const TropVector& g, const TropVector& h);

/// minimize x^- A x subject to B x (+) g <= x.
OptimumReport rayleigh_ineq(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                            const TropVector& g);

/// minimize x^- A x subject to g <= x <= h.
OptimumReport rayleigh_box(const Semifield& sf, const TropMatrix& a, const TropVector& g,
                           const TropVector& h);

/// minimize x^- A x (+) x^- p subject to B x (+) g <= x.
OptimumReport rayleigh_p_ineq(const Semifield& sf, const TropMatrix& a, const TropMatrix& b,
                              const TropVector& p, const TropVector& g);

/// Dispatch on instance.form; validates the instance first.
OptimumReport solve(const ProblemInstance& instance);

}  // namespace tropopt
