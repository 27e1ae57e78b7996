#pragma once

#include <cstdint>

#include "ahg/graph.hpp"

namespace ahg {

/// Uniform random labeled tree (random Prüfer sequence), n >= 1.
Graph gen_random_tree(int n, std::uint64_t seed);

/// Simple k-regular graph via the pairing model with whole-sample retries.
/// Requires n*k even and k < n; gives up after 1000 rejected pairings.
Graph gen_random_regular(int n, int k, std::uint64_t seed);

/// G(n, p): every unordered pair kept independently with probability p.
Graph gen_gnp(int n, double p, std::uint64_t seed);

/// K_a with a path on b extra vertices hung off clique vertex 0; a >= 3, b >= 1.
Graph gen_clique_plus_path(int a, int b);

}  // namespace ahg
