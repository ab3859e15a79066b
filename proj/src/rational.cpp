#include "tropopt/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "tropopt/errors.hpp"

namespace tropopt {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError(std::string("rational ") + what + " exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::normalized(__int128 num, __int128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  __int128 g = gcd128(num, den);
  num /= g;
  den /= g;
  Rational r;
  r.num_ = narrow(num, "numerator");
  r.den_ = narrow(den, "denominator");
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = normalized(num, den);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double has no rational value");
  // Scale the mantissa out by powers of two; doubles are dyadic rationals.
  int exp = 0;
  double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5, 1)
  __int128 num = 0;
  __int128 den = 1;
  for (int i = 0; i < 64 && mant != 0.0; ++i) {
    mant *= 2;
    double intpart = 0;
    mant = std::modf(mant, &intpart);
    num = num * 2 + static_cast<std::int64_t>(intpart);
    exp -= 1;
  }
  while (exp > 0) {
    num *= 2;
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("double too large for 64-bit rational");
    }
    --exp;
  }
  while (exp < 0) {
    den *= 2;
    if (den > std::numeric_limits<std::int64_t>::max()) {
      throw OverflowError("double too fine-grained for 64-bit rational");
    }
    ++exp;
  }
  return normalized(num, den);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  };
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

std::string Rational::to_string() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_), "numerator");
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return normalized(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return normalized(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return normalized(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  return normalized(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  __int128 l = static_cast<__int128>(a) / std::gcd(a, b) * b;
  return narrow(l < 0 ? -l : l, "lcm");
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace tropopt
