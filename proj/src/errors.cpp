#include "ahg/errors.hpp"

namespace ahg {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::empty_graph: return "EmptyGraph";
    case errc::invalid_arc: return "InvalidArc";
    case errc::source_equals_sink: return "SourceEqualsSink";
    case errc::no_edges: return "NoEdges";
    case errc::too_large: return "TooLarge";
    case errc::not_a_permutation: return "NotAPermutation";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::parse_error: return "ParseError";
    case errc::count_mismatch: return "CountMismatch";
    case errc::not_three_cnf: return "NotThreeCnf";
    case errc::unused_variable: return "UnusedVariable";
    case errc::bad_params: return "BadParams";
    case errc::infeasible_degree: return "InfeasibleDegree";
    case errc::retry_exhausted: return "RetryExhausted";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace ahg
