#pragma once

#include "tropopt/matrix.hpp"
#include "tropopt/semifield.hpp"

namespace tropopt {

// Matrix/vector algebra over an idempotent semifield: entrywise addition,
// (+,*) matrix product, scalar scaling, multiplicative conjugate
// transposition, idempotent norms and traces, Kleene star, plus-closure,
// regularity classification, and the generator solutions of B x <= x and
// C x = x.

TropMatrix add(const Semifield& sf, const TropMatrix& a, const TropMatrix& b);
TropMatrix multiply(const Semifield& sf, const TropMatrix& a, const TropMatrix& b);
TropMatrix scale(const Semifield& sf, const Scalar& c, const TropMatrix& a);
TropMatrix matrix_power(const Semifield& sf, const TropMatrix& a, std::size_t k);

TropVector add(const Semifield& sf, const TropVector& a, const TropVector& b);
TropVector scale(const Semifield& sf, const Scalar& c, const TropVector& a);

/// A (x) x for an m-by-n matrix and an n-vector.
TropVector mat_vec(const Semifield& sf, const TropMatrix& a, const TropVector& x);

/// Conjugate transpose A^- : transposed shape, nonzero entries inverted,
/// zeros fixed. Throws AllZeroMatrix on an all-zero operand.
TropMatrix conjugate_transpose(const Semifield& sf, const TropMatrix& a);

/// Entrywise multiplicative conjugation of a vector (no transposition —
/// callers track row/column roles). Throws AllZeroMatrix on the zero vector.
TropVector conjugate(const Semifield& sf, const TropVector& v);

/// a^- (x) b = (+)_i a_i^{-1} (x) b_i, terms with a zero factor dropped.
/// This is the workhorse behind every q^- A x style expression.
Scalar conj_dot(const Semifield& sf, const TropVector& a, const TropVector& b);

/// Row vector q^- A as a vector of length a.cols().
TropVector conj_vec_mat(const Semifield& sf, const TropVector& q, const TropMatrix& a);

/// Row vector v^T A as a vector of length a.cols() (no conjugation).
TropVector vec_mat(const Semifield& sf, const TropVector& v, const TropMatrix& a);

/// Idempotent norm: (+) over all entries (equals 1^T x resp. 1^T A 1).
Scalar norm(const Semifield& sf, const TropMatrix& a);
Scalar norm(const Semifield& sf, const TropVector& v);

Scalar trace(const Semifield& sf, const TropMatrix& a);  // throws NotSquare

/// Tr(A) = tr A (+) tr A^2 (+) ... (+) tr A^n.
Scalar trace_polynomial(const Semifield& sf, const TropMatrix& a);

/// Kleene star A^* = I (+) A (+) ... (+) A^{n-1}, defined when Tr(A) <= 1
/// (throws StarDiverges otherwise). Computed by binary powering of (I (+) A);
/// identical to the definitional sum by idempotency.
TropMatrix kleene_star(const Semifield& sf, const TropMatrix& a);

/// Plus-closure A^+: the columns of A^x = A A^* that carry 1 on the
/// diagonal, in ascending column order. Requires Tr(A) = 1 (TraceNotOne).
TropMatrix plus_closure(const Semifield& sf, const TropMatrix& a);

RegularityClass classify_regularity(const TropMatrix& a);

/// Generator of {x : B x <= x} = {B^* u : u regular}; throws Infeasible
/// ("Tr(B) > 1") when no regular solution exists.
TropMatrix solve_order_inequality(const Semifield& sf, const TropMatrix& b);

/// Generator of {x : C x = x} = {C^+ u : u regular}; throws Infeasible
/// ("Tr(C) != 1") when no regular solution exists.
TropMatrix solve_fixpoint_equation(const Semifield& sf, const TropMatrix& c);

bool matrix_eq(const Semifield& sf, const TropMatrix& a, const TropMatrix& b);
bool vector_eq(const Semifield& sf, const TropVector& a, const TropVector& b);

/// Componentwise order a <= b (semifield order per component).
bool vector_leq(const Semifield& sf, const TropVector& a, const TropVector& b);

TropVector ones_vector(const Semifield& sf, std::size_t n);

}  // namespace tropopt
