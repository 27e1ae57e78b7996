#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ahg/errors.hpp"

namespace ahg {

/// splitmix64 step; used to derive independent per-trial sub-seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic uniform sampling on top of std::mt19937_64. The rejection
/// and mapping steps are spelled out here rather than delegated to
/// std::uniform_*_distribution (whose algorithms the standard leaves
/// unspecified), so equal seeds give equal streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform integer in [0, n), n >= 1.
  long long below(long long n) {
    if (n < 1) fail(errc::bad_params, "sample range " + std::to_string(n));
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t cut = (0 - un) % un;  // 2^64 mod n; [cut, 2^64) splits evenly
    std::uint64_t r = eng_();
    while (r < cut) r = eng_();
    return static_cast<long long>((r - cut) % un);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Fisher–Yates shuffle (descending index, partner = below(i+1)).
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(static_cast<long long>(i)));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ahg
