#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "tropopt/rational.hpp"

namespace tropopt {

/// The four standard linearly ordered, algebraically complete idempotent
/// semifields. Additive semifields (max-plus, min-plus) are exact by default;
/// multiplicative ones (max-times, min-times) run on doubles with a
/// comparison tolerance, since their rational powers are irrational.
enum class SemifieldId { MaxPlus, MinPlus, MaxTimes, MinTimes };

enum class ArithmeticMode { Exact, Float };

const char* to_string(SemifieldId id);
std::optional<SemifieldId> semifield_from_string(std::string_view name);

/// A semifield element: either the zero element (absorbing, neutral for the
/// idempotent addition) or a finite carrier value. Zero is a distinct tag,
/// never an encoded sentinel value.
class Scalar {
 public:
  Scalar() : v_(std::monostate{}) {}

  static Scalar zero() { return Scalar(); }
  static Scalar exact(Rational r) {
    Scalar s;
    s.v_ = r;
    return s;
  }
  static Scalar approx(double d) {
    Scalar s;
    s.v_ = d;
    return s;
  }

  bool is_zero() const { return std::holds_alternative<std::monostate>(v_); }
  bool is_finite() const { return !is_zero(); }
  bool is_exact() const { return std::holds_alternative<Rational>(v_); }

  /// Exact payload; only valid when is_exact().
  const Rational& rat() const { return std::get<Rational>(v_); }

  /// Numeric view of a finite value in either mode.
  double real() const {
    return is_exact() ? rat().to_double() : std::get<double>(v_);
  }

  /// Structural identity (same tag, same payload). Semantic comparison in a
  /// given semifield goes through Semifield::eq / Semifield::leq.
  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  std::variant<std::monostate, Rational, double> v_;
};

/// Arithmetic context: fixes the semifield instance, the arithmetic mode and
/// the float comparison tolerance. All matrix, spectral, solver and oracle
/// operations are parameterized over this object. Values are small and
/// freely copyable.
class Semifield {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  static Semifield max_plus(ArithmeticMode mode = ArithmeticMode::Exact);
  static Semifield min_plus(ArithmeticMode mode = ArithmeticMode::Exact);
  static Semifield max_times(double tolerance = kDefaultTolerance);
  static Semifield min_times(double tolerance = kDefaultTolerance);
  static Semifield make(SemifieldId id, ArithmeticMode mode, double tolerance = kDefaultTolerance);

  SemifieldId id() const { return id_; }
  ArithmeticMode mode() const { return mode_; }
  double tolerance() const { return tol_; }
  bool is_additive() const { return id_ == SemifieldId::MaxPlus || id_ == SemifieldId::MinPlus; }
  bool is_exact() const { return mode_ == ArithmeticMode::Exact; }

  Scalar zero() const { return Scalar::zero(); }
  Scalar one() const;

  /// Builds a finite scalar from a number, respecting the arithmetic mode and
  /// the carrier (positive reals for the multiplicative semifields; a zero or
  /// infinite payload there *is* the semifield zero and is normalized to it).
  Scalar from_rational(const Rational& r) const;
  Scalar from_real(double d) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inverse(const Scalar& a) const;  // throws InverseOfZero

  /// a^(num/den) in the semifield sense: (num/den)*a for the additive
  /// semifields (exact), pow(a, num/den) for the multiplicative ones.
  /// Zero^positive = zero; zero^nonpositive throws InverseOfZero.
  Scalar power(const Scalar& a, std::int64_t num, std::int64_t den) const;

  /// The semifield linear order: a <= b iff a + b = b. The zero element is
  /// the least element in every instance.
  bool leq(const Scalar& a, const Scalar& b) const;
  bool less(const Scalar& a, const Scalar& b) const { return leq(a, b) && !eq(a, b); }
  bool geq(const Scalar& a, const Scalar& b) const { return leq(b, a); }
  bool eq(const Scalar& a, const Scalar& b) const;

  Scalar min(const Scalar& a, const Scalar& b) const { return leq(a, b) ? a : b; }
  Scalar max(const Scalar& a, const Scalar& b) const { return leq(a, b) ? b : a; }

  std::string to_string(const Scalar& a) const;  // "zero" for the zero element

 private:
  Semifield(SemifieldId id, ArithmeticMode mode, double tol) : id_(id), mode_(mode), tol_(tol) {}

  /// Numeric comparison a <= b up to tolerance in float mode.
  bool num_leq(const Scalar& a, const Scalar& b) const;
  bool max_like() const { return id_ == SemifieldId::MaxPlus || id_ == SemifieldId::MaxTimes; }

  SemifieldId id_;
  ArithmeticMode mode_;
  double tol_;
};

}  // namespace tropopt
