#include "tis/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tis {

namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  __int128 g = wide_gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  constexpr auto lo = static_cast<__int128>(std::numeric_limits<std::int64_t>::min());
  constexpr auto hi = static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
  if (numerator < lo || numerator > hi || denominator > hi) {
    throw std::overflow_error("rational overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& other) {
  *this = from_wide(static_cast<__int128>(num_) * other.den_ + static_cast<__int128>(other.num_) * den_,
                    static_cast<__int128>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  *this = from_wide(static_cast<__int128>(num_) * other.den_ - static_cast<__int128>(other.num_) * den_,
                    static_cast<__int128>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  *this = from_wide(static_cast<__int128>(num_) * other.num_, static_cast<__int128>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("division by zero");
  *this = from_wide(static_cast<__int128>(num_) * other.den_, static_cast<__int128>(den_) * other.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

} // namespace tis
