#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ahg {

/// Exact rational number. Always normalized: den > 0 and gcd(|num|, den) == 1.
/// Comparisons cross-multiply in 128-bit intermediates; no floating point is
/// involved anywhere, so equality tests on densities are exact.
struct Fraction {
  long long num = 0;
  long long den = 1;

  constexpr Fraction() = default;
  constexpr Fraction(long long value) : num(value), den(1) {}  // NOLINT: implicit by design
  Fraction(long long numerator, long long denominator);

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;  // fields are canonical
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
};

/// Exact three-way comparison (less / equal / greater).
std::strong_ordering compare_fraction(const Fraction& a, const Fraction& b);

/// Greatest integer <= a, correct for negative values.
long long floor_fraction(const Fraction& a);

/// Canonical "num/den" rendering, e.g. "3/1", "-1/2".
std::string to_string(const Fraction& a);

/// Parses "num/den" (or a bare integer). Throws Error(parse_error).
Fraction fraction_from_string(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Fraction& a);

}  // namespace ahg
