#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ahg/graph.hpp"

namespace ahg {

struct CompareSpec {
  std::string family;  // "tree" | "regular" | "gnp" | "clique-path"
  int n = 0;
  int k = 0;       // regular only
  double p = 0.0;  // gnp only
  int a = 0;       // clique-path only
  int b = 0;       // clique-path only: path length of the first trial
  bool run_exact = false;
  int exact_limit = 30;
};

struct ExperimentRow {
  std::string family;
  std::uint64_t seed = 0;  // the trial's derived sub-seed
  int n = 0;
  int m = 0;
  bool is_ah = false;
  int bound_mad = 0;
  int bound_delta = 0;
  std::optional<int> bound_brooks;
  std::optional<int> bound_soto;
  int lower_clique = 0;
  int degeneracy_plus_1 = 0;
  int greedy_colors = 0;
  std::optional<int> exact_chromatic;
};

/// The graph for one trial. Randomized families draw from
/// splitmix64(seed + trial); clique-path is deterministic and grows its path
/// by one vertex per trial so rows differ.
Graph compare_instance(const CompareSpec& spec, int trial, std::uint64_t seed);

/// One row per trial, ordered by trial index, reproducible from (spec, seed).
/// The ⌊MAD⌋+1 ≤ Δ+1 relation is rechecked on every row, and the Soto
/// relation on every connected row.
std::vector<ExperimentRow> run_compare(const CompareSpec& spec, int trials,
                                       std::uint64_t seed);

/// Header plus one line per row; byte-deterministic.
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace ahg
