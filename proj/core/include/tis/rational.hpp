#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tis {

/// Exact rational number in reduced form with a positive denominator.
///
/// Backed by 64-bit integers; every operation computes in 128 bits and throws
/// std::overflow_error if the reduced result does not fit.
class Rational {
public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t value) noexcept : num_(value) {} // NOLINT(implicit)
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }

  /// Accepts "p", "-p" and "p/q".
  static Rational parse(std::string_view text);

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace tis
