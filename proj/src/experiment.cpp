#include "ahg/experiment.hpp"

#include <sstream>
#include <stdexcept>

#include "ahg/bounds.hpp"
#include "ahg/errors.hpp"
#include "ahg/generators.hpp"
#include "ahg/rng.hpp"

namespace ahg {

Graph compare_instance(const CompareSpec& spec, int trial, std::uint64_t seed) {
  std::uint64_t sub = splitmix64(seed + static_cast<std::uint64_t>(trial));
  if (spec.family == "tree") return gen_random_tree(spec.n, sub);
  if (spec.family == "regular") return gen_random_regular(spec.n, spec.k, sub);
  if (spec.family == "gnp") return gen_gnp(spec.n, spec.p, sub);
  if (spec.family == "clique-path") return gen_clique_plus_path(spec.a, spec.b + trial);
  fail(errc::bad_params, "unknown family " + spec.family);
}

std::vector<ExperimentRow> run_compare(const CompareSpec& spec, int trials,
                                       std::uint64_t seed) {
  if (trials < 1) fail(errc::bad_params, "trials = " + std::to_string(trials));

  std::vector<ExperimentRow> rows;
  rows.reserve(static_cast<size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    Graph g = compare_instance(spec, trial, seed);
    BoundsReport rep = bounds_report(g, spec.run_exact, spec.exact_limit);

    if (rep.bound_mad > rep.bound_delta)
      throw std::logic_error("bound_mad exceeds bound_delta on trial " +
                             std::to_string(trial));
    if (rep.bound_soto && rep.bound_mad > *rep.bound_soto)
      throw std::logic_error("bound_mad exceeds bound_soto on trial " +
                             std::to_string(trial));

    ExperimentRow row;
    row.family = spec.family;
    row.seed = splitmix64(seed + static_cast<std::uint64_t>(trial));
    row.n = rep.n;
    row.m = rep.m;
    row.is_ah = rep.is_ah;
    row.bound_mad = rep.bound_mad;
    row.bound_delta = rep.bound_delta;
    row.bound_brooks = rep.bound_brooks;
    row.bound_soto = rep.bound_soto;
    row.lower_clique = rep.lower_clique;
    row.degeneracy_plus_1 = rep.degeneracy + 1;
    row.greedy_colors = rep.greedy_colors;
    row.exact_chromatic = rep.exact_chromatic;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "family,seed,n,m,is_ah,bound_mad,bound_delta,bound_brooks,bound_soto,"
         "lower_clique,degeneracy_plus_1,greedy_colors,exact_chromatic\n";
  auto opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& r : rows) {
    out << r.family << ',' << r.seed << ',' << r.n << ',' << r.m << ','
        << (r.is_ah ? "true" : "false") << ',' << r.bound_mad << ',' << r.bound_delta
        << ',' << opt(r.bound_brooks) << ',' << opt(r.bound_soto) << ','
        << r.lower_clique << ',' << r.degeneracy_plus_1 << ',' << r.greedy_colors << ','
        << opt(r.exact_chromatic) << '\n';
  }
  return out.str();
}

}  // namespace ahg
