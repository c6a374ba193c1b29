#include "prc/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace prc {

namespace {

std::int64_t narrow(__int128 value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(value);
}

__int128 abs128(__int128 value) { return value < 0 ? -value : value; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational& Rational::operator+=(const Rational& other) {
  const __int128 num = static_cast<__int128>(num_) * other.den_ +
                       static_cast<__int128>(other.num_) * den_;
  const __int128 den = static_cast<__int128>(den_) * other.den_;
  const __int128 g = num == 0 ? den : gcd128(num, den);
  num_ = narrow(num / g);
  den_ = narrow(den / g);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  const __int128 num = static_cast<__int128>(num_) * other.num_;
  const __int128 den = static_cast<__int128>(den_) * other.den_;
  const __int128 g = num == 0 ? den : gcd128(num, den);
  num_ = narrow(num / g);
  den_ = narrow(den / g);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(other.den_, other.num_);
}

std::int64_t floor_to_int(const Rational& value) {
  std::int64_t q = value.numerator() / value.denominator();
  if (value.numerator() % value.denominator() != 0 && value.numerator() < 0) {
    --q;
  }
  return q;
}

std::string decimal_string(const Rational& value, int digits, Rounding mode) {
  if (digits < 0 || digits > 18) {
    throw std::invalid_argument("decimal digits out of range");
  }
  const bool negative = value < 0;
  const Rational abs = negative ? -value : value;

  __int128 scaled = abs.numerator();
  for (int i = 0; i < digits; ++i) scaled *= 10;
  const __int128 den = abs.denominator();

  __int128 q = scaled / den;
  const __int128 twice_rem = (scaled % den) * 2;
  if (twice_rem > den) {
    ++q;
  } else if (twice_rem == den) {
    if (mode == Rounding::HalfAwayFromZero || q % 2 != 0) ++q;
  }

  std::string body;
  if (q == 0) {
    body = "0";
  } else {
    while (q > 0) {
      body.insert(body.begin(), static_cast<char>('0' + int(q % 10)));
      q /= 10;
    }
  }
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && body.find_first_not_of("0.") != std::string::npos) {
    body.insert(body.begin(), '-');
  }
  return body;
}

std::string compact_string(const Rational& value, int digits, Rounding mode) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return decimal_string(value, digits, mode);
}

}  // namespace prc
