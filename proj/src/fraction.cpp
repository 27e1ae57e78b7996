#include "ahg/fraction.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ahg/errors.hpp"
#include "ahg/intmath.hpp"

namespace ahg {

namespace {

using int128 = __int128;

long long checked_narrow(int128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error(std::string("Fraction overflow in ") + what);
  }
  return static_cast<long long>(v);
}

Fraction make_normalized(int128 num, int128 den, const char* what) {
  if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int128 a = num < 0 ? -num : num;
  int128 g = 1;
  {
    int128 x = a, y = den;
    while (y != 0) {
      int128 t = x % y;
      x = y;
      y = t;
    }
    g = x == 0 ? 1 : x;
  }
  Fraction result;
  result.num = checked_narrow(num / g, what);
  result.den = checked_narrow(den / g, what);
  return result;
}

}  // namespace

Fraction::Fraction(long long numerator, long long denominator) {
  Fraction f = make_normalized(numerator, denominator, "construction");
  num = f.num;
  den = f.den;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  int128 lhs = static_cast<int128>(a.num) * b.den;
  int128 rhs = static_cast<int128>(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Fraction Fraction::operator+(const Fraction& o) const {
  return make_normalized(static_cast<int128>(num) * o.den + static_cast<int128>(o.num) * den,
                         static_cast<int128>(den) * o.den, "addition");
}

Fraction Fraction::operator-(const Fraction& o) const {
  return make_normalized(static_cast<int128>(num) * o.den - static_cast<int128>(o.num) * den,
                         static_cast<int128>(den) * o.den, "subtraction");
}

Fraction Fraction::operator*(const Fraction& o) const {
  return make_normalized(static_cast<int128>(num) * o.num, static_cast<int128>(den) * o.den,
                         "multiplication");
}

Fraction Fraction::operator/(const Fraction& o) const {
  if (o.num == 0) throw std::invalid_argument("Fraction: division by zero");
  return make_normalized(static_cast<int128>(num) * o.den, static_cast<int128>(den) * o.num,
                         "division");
}

std::strong_ordering compare_fraction(const Fraction& a, const Fraction& b) { return a <=> b; }

long long floor_fraction(const Fraction& a) { return floor_div(a.num, a.den); }

std::string to_string(const Fraction& a) {
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Fraction fraction_from_string(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> long long {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(errc::parse_error, "bad fraction literal '" + std::string(text) + "'");
    }
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den <= 0) fail(errc::parse_error, "bad fraction denominator in '" + std::string(text) + "'");
  return Fraction(num, den);
}

std::ostream& operator<<(std::ostream& os, const Fraction& a) { return os << to_string(a); }

}  // namespace ahg
