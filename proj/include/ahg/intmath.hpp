#pragma once

#include <cstdint>

namespace ahg {

/// Floor of sqrt(x), pure integer Newton iteration. x must be >= 0.
constexpr long long integer_sqrt(long long x) {
  if (x < 0) return -1;
  if (x < 2) return x;
  // Start above the root and descend; converges monotonically.
  unsigned long long n = static_cast<unsigned long long>(x);
  unsigned long long guess = n / 2 + 1;
  unsigned long long next = (guess + n / guess) / 2;
  while (next < guess) {
    guess = next;
    next = (guess + n / guess) / 2;
  }
  return static_cast<long long>(guess);
}

/// Ceiling of a/b for a >= 0, b > 0.
constexpr long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

/// Floor of a/b for b > 0, correct for negative a.
constexpr long long floor_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace ahg
