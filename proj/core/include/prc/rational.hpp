#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace prc {

// Exact rational value on int64, always stored reduced with a positive
// denominator. All percentages and weights are carried as rationals; class
// membership is decided by integer cross-multiplication, never by floating
// point. Comparisons use 128-bit intermediates and cannot overflow.
class Rational {
 public:
  constexpr Rational() = default;
  // NOLINTNEXTLINE(google-explicit-constructor) integers convert freely
  Rational(std::int64_t value) : num_(value) {}
  // Throws std::domain_error when den == 0.
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 left = static_cast<__int128>(a.num_) * b.den_;
    const __int128 right = static_cast<__int128>(b.num_) * a.den_;
    return left <=> right;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Largest integer <= value (floor division, correct for negatives).
std::int64_t floor_to_int(const Rational& value);

enum class Rounding {
  HalfEven,
  HalfAwayFromZero,
};

// Fixed-point rendering with `digits` fractional digits.
std::string decimal_string(const Rational& value, int digits,
                           Rounding mode = Rounding::HalfEven);

// Integral values render without a fractional part, everything else like
// decimal_string.
std::string compact_string(const Rational& value, int digits,
                           Rounding mode = Rounding::HalfEven);

}  // namespace prc
