#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace tropopt {

/// Exact rational number on 64-bit numerator/denominator, always normalized
/// (gcd(num, den) = 1, den > 0). Intermediate products are evaluated in
/// 128-bit arithmetic and an OverflowError is thrown if a normalized result
/// does not fit; at desk scale (the sizes this library targets) overflow
/// indicates misuse rather than a limitation to work around.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  /// Exact value of a finite double (every finite double is dyadic).
  static Rational from_double(double value);

  /// Parses "a", "-a", or "a/b". Returns nullopt on malformed input.
  static std::optional<Rational> parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;  // "a" when integral, else "a/b"

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws DomainError on /0

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this == o || *this < o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  /// Largest integer <= num/den and smallest integer >= num/den.
  std::int64_t floor() const;
  std::int64_t ceil() const;

 private:
  static Rational normalized(__int128 num, __int128 den);

  std::int64_t num_;
  std::int64_t den_;
};

std::int64_t lcm64(std::int64_t a, std::int64_t b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tropopt
