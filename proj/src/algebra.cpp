#include "tropopt/algebra.hpp"

#include <cassert>
#include <string>
#include <vector>

#include "tropopt/errors.hpp"

namespace tropopt {

namespace {

void require_same_shape(const TropMatrix& a, const TropMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()) + " differ");
  }
}

void require_square(const TropMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw NotSquare(std::string(op) + " requires a square matrix, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

TropMatrix add(const Semifield& sf, const TropMatrix& a, const TropMatrix& b) {
  require_same_shape(a, b, "add");
  TropMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = sf.add(a.at(i, j), b.at(i, j));
    }
  }
  return r;
}

TropMatrix multiply(const Semifield& sf, const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                        std::to_string(b.rows()) + " differ");
  }
  TropMatrix r(a.rows(), b.cols());
  // Entries are independent; the reduction is idempotent addition, so any
  // evaluation order gives identical results in exact arithmetic.
#pragma omp parallel for if (a.rows() * b.cols() >= 4096)
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero();
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = sf.add(acc, sf.mul(a.at(i, k), b.at(k, j)));
      }
      r.at(i, j) = acc;
    }
  }
  return r;
}

TropMatrix scale(const Semifield& sf, const Scalar& c, const TropMatrix& a) {
  TropMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r.at(i, j) = sf.mul(c, a.at(i, j));
    }
  }
  return r;
}

TropMatrix matrix_power(const Semifield& sf, const TropMatrix& a, std::size_t k) {
  require_square(a, "matrix_power");
  TropMatrix result = TropMatrix::identity(a.rows(), sf);
  TropMatrix base = a;
  while (k > 0) {
    if (k & 1) result = multiply(sf, result, base);
    k >>= 1;
    if (k > 0) base = multiply(sf, base, base);
  }
  return result;
}

TropVector add(const Semifield& sf, const TropVector& a, const TropVector& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("vector add: dimensions differ");
  TropVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = sf.add(a[i], b[i]);
  return r;
}

TropVector scale(const Semifield& sf, const Scalar& c, const TropVector& a) {
  TropVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = sf.mul(c, a[i]);
  return r;
}

TropVector mat_vec(const Semifield& sf, const TropMatrix& a, const TropVector& x) {
  if (a.cols() != x.dim()) throw ShapeMismatch("mat_vec: inner dimensions differ");
  TropVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = Scalar::zero();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc = sf.add(acc, sf.mul(a.at(i, j), x[j]));
    }
    r[i] = acc;
  }
  return r;
}

TropMatrix conjugate_transpose(const Semifield& sf, const TropMatrix& a) {
  if (a.is_all_zero()) throw AllZeroMatrix();
  TropMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& e = a.at(i, j);
      r.at(j, i) = e.is_zero() ? Scalar::zero() : sf.inverse(e);
    }
  }
  return r;
}

TropVector conjugate(const Semifield& sf, const TropVector& v) {
  if (!v.is_nonzero()) throw AllZeroMatrix();
  TropVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    r[i] = v[i].is_zero() ? Scalar::zero() : sf.inverse(v[i]);
  }
  return r;
}

Scalar conj_dot(const Semifield& sf, const TropVector& a, const TropVector& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("conj_dot: dimensions differ");
  Scalar acc = Scalar::zero();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc = sf.add(acc, sf.mul(sf.inverse(a[i]), b[i]));
  }
  return acc;
}

TropVector conj_vec_mat(const Semifield& sf, const TropVector& q, const TropMatrix& a) {
  if (q.dim() != a.rows()) throw ShapeMismatch("conj_vec_mat: dimensions differ");
  TropVector r(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) r[j] = conj_dot(sf, q, a.column(j));
  return r;
}

TropVector vec_mat(const Semifield& sf, const TropVector& v, const TropMatrix& a) {
  if (v.dim() != a.rows()) throw ShapeMismatch("vec_mat: dimensions differ");
  TropVector r(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Scalar acc = Scalar::zero();
    for (std::size_t i = 0; i < a.rows(); ++i) acc = sf.add(acc, sf.mul(v[i], a.at(i, j)));
    r[j] = acc;
  }
  return r;
}

Scalar norm(const Semifield& sf, const TropMatrix& a) {
  Scalar acc = Scalar::zero();
  for (const Scalar& e : a.entries()) acc = sf.add(acc, e);
  return acc;
}

Scalar norm(const Semifield& sf, const TropVector& v) {
  Scalar acc = Scalar::zero();
  for (const Scalar& e : v.entries()) acc = sf.add(acc, e);
  return acc;
}

Scalar trace(const Semifield& sf, const TropMatrix& a) {
  require_square(a, "trace");
  Scalar acc = Scalar::zero();
  for (std::size_t i = 0; i < a.rows(); ++i) acc = sf.add(acc, a.at(i, i));
  return acc;
}

Scalar trace_polynomial(const Semifield& sf, const TropMatrix& a) {
  require_square(a, "trace_polynomial");
  Scalar acc = Scalar::zero();
  TropMatrix power = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    acc = sf.add(acc, trace(sf, power));
    if (k < a.rows()) power = multiply(sf, power, a);
  }
  return acc;
}

TropMatrix kleene_star(const Semifield& sf, const TropMatrix& a) {
  require_square(a, "kleene_star");
  if (!sf.leq(trace_polynomial(sf, a), sf.one())) throw StarDiverges();
  // (I (+) A)^{n-1} = I (+) A (+) ... (+) A^{n-1} by idempotency.
  TropMatrix base = add(sf, TropMatrix::identity(a.rows(), sf), a);
  return matrix_power(sf, base, a.rows() > 0 ? a.rows() - 1 : 0);
}

TropMatrix plus_closure(const Semifield& sf, const TropMatrix& a) {
  require_square(a, "plus_closure");
  if (!sf.eq(trace_polynomial(sf, a), sf.one())) throw TraceNotOne();
  TropMatrix star = kleene_star(sf, a);
  TropMatrix cross = multiply(sf, a, star);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cross.cols(); ++j) {
    if (sf.eq(cross.at(j, j), sf.one())) keep.push_back(j);
  }
  // Tr(A) = 1 means some cycle attains weight 1, and every node on it gets a
  // unit diagonal in A A^*; an empty selection indicates internal breakage.
  assert(!keep.empty());
  if (keep.empty()) throw Error("plus-closure selected no columns despite Tr(A) = 1");
  TropMatrix r(cross.rows(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c) {
    for (std::size_t i = 0; i < cross.rows(); ++i) r.at(i, c) = cross.at(i, keep[c]);
  }
  return r;
}

RegularityClass classify_regularity(const TropMatrix& a) {
  RegularityClass rc;
  rc.row_regular = true;
  rc.column_regular = true;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < a.cols(); ++j) nonzero |= a.at(i, j).is_finite();
    if (!nonzero) rc.row_regular = false;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < a.rows(); ++i) nonzero |= a.at(i, j).is_finite();
    if (!nonzero) rc.column_regular = false;
  }
  rc.regular = rc.row_regular && rc.column_regular;
  return rc;
}

TropMatrix solve_order_inequality(const Semifield& sf, const TropMatrix& b) {
  require_square(b, "solve_order_inequality");
  if (!sf.leq(trace_polynomial(sf, b), sf.one())) throw Infeasible("Tr(B) > 1");
  return kleene_star(sf, b);
}

TropMatrix solve_fixpoint_equation(const Semifield& sf, const TropMatrix& c) {
  require_square(c, "solve_fixpoint_equation");
  if (!sf.eq(trace_polynomial(sf, c), sf.one())) throw Infeasible("Tr(C) != 1");
  return plus_closure(sf, c);
}

bool matrix_eq(const Semifield& sf, const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (!sf.eq(a.entries()[i], b.entries()[i])) return false;
  }
  return true;
}

bool vector_eq(const Semifield& sf, const TropVector& a, const TropVector& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!sf.eq(a[i], b[i])) return false;
  }
  return true;
}

bool vector_leq(const Semifield& sf, const TropVector& a, const TropVector& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("vector_leq: dimensions differ");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!sf.leq(a[i], b[i])) return false;
  }
  return true;
}

TropVector ones_vector(const Semifield& sf, std::size_t n) {
  return TropVector(n, sf.one());
}

}  // namespace tropopt
