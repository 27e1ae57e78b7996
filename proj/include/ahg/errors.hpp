#pragma once

#include <stdexcept>
#include <string>

namespace ahg {

// Every contract violation surfaces as one of these codes so callers can
// map failures to exit codes or tests can match on the exact condition.
enum class errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  empty_graph,
  invalid_arc,
  source_equals_sink,
  no_edges,
  too_large,
  not_a_permutation,
  length_mismatch,
  parse_error,
  count_mismatch,
  not_three_cnf,
  unused_variable,
  bad_params,
  infeasible_degree,
  retry_exhausted,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace ahg
