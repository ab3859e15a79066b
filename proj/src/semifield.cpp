#include "tropopt/semifield.hpp"

#include <cmath>
#include <limits>

#include "tropopt/errors.hpp"

namespace tropopt {

const char* to_string(SemifieldId id) {
  switch (id) {
    case SemifieldId::MaxPlus:
      return "max-plus";
    case SemifieldId::MinPlus:
      return "min-plus";
    case SemifieldId::MaxTimes:
      return "max-times";
    case SemifieldId::MinTimes:
      return "min-times";
  }
  return "?";
}

std::optional<SemifieldId> semifield_from_string(std::string_view name) {
  if (name == "max-plus") return SemifieldId::MaxPlus;
  if (name == "min-plus") return SemifieldId::MinPlus;
  if (name == "max-times") return SemifieldId::MaxTimes;
  if (name == "min-times") return SemifieldId::MinTimes;
  return std::nullopt;
}

Semifield Semifield::max_plus(ArithmeticMode mode) {
  return Semifield(SemifieldId::MaxPlus, mode, kDefaultTolerance);
}

Semifield Semifield::min_plus(ArithmeticMode mode) {
  return Semifield(SemifieldId::MinPlus, mode, kDefaultTolerance);
}

Semifield Semifield::max_times(double tolerance) {
  return Semifield(SemifieldId::MaxTimes, ArithmeticMode::Float, tolerance);
}

Semifield Semifield::min_times(double tolerance) {
  return Semifield(SemifieldId::MinTimes, ArithmeticMode::Float, tolerance);
}

Semifield Semifield::make(SemifieldId id, ArithmeticMode mode, double tolerance) {
  if ((id == SemifieldId::MaxTimes || id == SemifieldId::MinTimes) && mode == ArithmeticMode::Exact) {
    throw DomainError("multiplicative semifields require float mode (roots are irrational)");
  }
  return Semifield(id, mode, tolerance);
}

Scalar Semifield::one() const {
  switch (id_) {
    case SemifieldId::MaxPlus:
    case SemifieldId::MinPlus:
      return from_rational(Rational(0));
    case SemifieldId::MaxTimes:
    case SemifieldId::MinTimes:
      return from_real(1.0);
  }
  return Scalar::zero();
}

Scalar Semifield::from_rational(const Rational& r) const {
  if (is_additive()) {
    return is_exact() ? Scalar::exact(r) : Scalar::approx(r.to_double());
  }
  return from_real(r.to_double());
}

Scalar Semifield::from_real(double d) const {
  if (is_additive()) {
    if (!std::isfinite(d)) throw DomainError("additive semifield carrier is the finite reals");
    return is_exact() ? Scalar::exact(Rational::from_double(d)) : Scalar::approx(d);
  }
  // Multiplicative carriers are the strictly positive reals; the boundary
  // points 0 (max-times) and +inf (min-times) are the semifield zero.
  if (d == 0.0 && id_ == SemifieldId::MaxTimes) return Scalar::zero();
  if (std::isinf(d) && d > 0 && id_ == SemifieldId::MinTimes) return Scalar::zero();
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw DomainError("multiplicative semifield carrier is the positive reals");
  }
  return Scalar::approx(d);
}

Scalar Semifield::add(const Scalar& a, const Scalar& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return leq(a, b) ? b : a;
}

Scalar Semifield::mul(const Scalar& a, const Scalar& b) const {
  if (a.is_zero() || b.is_zero()) return Scalar::zero();
  if (a.is_exact() && b.is_exact()) {
    return Scalar::exact(a.rat() + b.rat());  // additive semifields only
  }
  switch (id_) {
    case SemifieldId::MaxPlus:
    case SemifieldId::MinPlus:
      return Scalar::approx(a.real() + b.real());
    case SemifieldId::MaxTimes:
    case SemifieldId::MinTimes:
      return Scalar::approx(a.real() * b.real());
  }
  return Scalar::zero();
}

Scalar Semifield::inverse(const Scalar& a) const {
  if (a.is_zero()) throw InverseOfZero();
  if (a.is_exact()) return Scalar::exact(-a.rat());
  if (is_additive()) return Scalar::approx(-a.real());
  return Scalar::approx(1.0 / a.real());
}

Scalar Semifield::power(const Scalar& a, std::int64_t num, std::int64_t den) const {
  if (den < 1) throw DomainError("rational power requires a positive root index");
  if (a.is_zero()) {
    if (num > 0) return Scalar::zero();
    throw InverseOfZero();
  }
  if (a.is_exact()) return Scalar::exact(a.rat() * Rational(num, den));
  double e = static_cast<double>(num) / static_cast<double>(den);
  if (is_additive()) return Scalar::approx(a.real() * e);
  return Scalar::approx(std::pow(a.real(), e));
}

bool Semifield::num_leq(const Scalar& a, const Scalar& b) const {
  if (a.is_exact() && b.is_exact()) return a.rat() <= b.rat();
  double x = a.real();
  double y = b.real();
  if (x <= y) return true;
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return x - y <= tol_ * scale;
}

bool Semifield::leq(const Scalar& a, const Scalar& b) const {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  // In the min-like instances the order induced by idempotent addition is
  // the reverse of the numeric order (a <= b iff a + b = b, + being min).
  return max_like() ? num_leq(a, b) : num_leq(b, a);
}

bool Semifield::eq(const Scalar& a, const Scalar& b) const {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.is_exact() && b.is_exact()) return a.rat() == b.rat();
  double x = a.real();
  double y = b.real();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= tol_ * scale;
}

std::string Semifield::to_string(const Scalar& a) const {
  if (a.is_zero()) return "zero";
  if (a.is_exact()) return a.rat().to_string();
  return std::to_string(a.real());
}

}  // namespace tropopt
