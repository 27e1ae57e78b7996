#pragma once

#include <array>
#include <string>
#include <vector>

#include "ahg/fraction.hpp"
#include "ahg/graph.hpp"

namespace ahg {

struct CnfFormula {
  int num_vars = 0;                          // variables are 1..num_vars
  std::vector<std::array<int, 3>> clauses;   // literals: +v or -v, never 0
};

struct VertexRole {
  enum Kind { BaseT, BaseF, BaseB, PosLit, NegLit, OrNode } kind = BaseT;
  int index = -1;     // variable (1-based) for literals; clause (0-based) for or-nodes
  int position = -1;  // 0..5 within a clause gadget: a1,b1,o1,a2,b2,o2

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct KarpGraph {
  Graph graph;
  std::vector<VertexRole> labels;  // one per vertex id
};

struct PredictedStats {
  long long vertices = 0;
  long long edges_times_2 = 0;
  Fraction density;
};

/// DIMACS CNF ("p cnf V C", clauses as 0-terminated literal runs). Clauses
/// must have exactly three literals.
CnfFormula parse_cnf(const std::string& text);

std::string write_cnf(const CnfFormula& f);

/// The 3-coloring instance for φ: base triangle T,F,B; per variable a
/// positive/negative literal pair tied to B; per clause two chained OR
/// gadgets whose output is wired to F and B. 3-colorable iff φ is
/// satisfiable. Every variable must occur in some clause, which keeps every
/// degree ≥ 2 with no two degree-2 vertices adjacent.
KarpGraph karp_graph(const CnfFormula& f);

/// Closed-form size and density of the construction for C clauses and
/// L = 2·(variable count) literal vertices.
PredictedStats predicted_stats(long long C, long long L);

/// Exhaustive satisfiability check, num_vars <= 20.
bool sat_bruteforce(const CnfFormula& f);

}  // namespace ahg
