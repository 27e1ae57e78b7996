#include "ahg/sat_reduction.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "ahg/errors.hpp"

namespace ahg {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == 'c' || ch == 'C';
  }
  return true;
}

char first_nonspace(const std::string& line) {
  for (char ch : line)
    if (!std::isspace(static_cast<unsigned char>(ch))) return ch;
  return '\0';
}

}  // namespace

CnfFormula parse_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  long long num_vars = 0;
  long long num_clauses = 0;
  CnfFormula f;
  std::array<int, 3> current{};
  int current_size = 0;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    char lead = first_nonspace(line);
    if (lead == '\0' || lead == '%') {
      if (lead == '%') break;  // SATLIB-style trailer
      continue;
    }
    if (blank_or_comment(line)) continue;

    if (lead == 'p') {
      if (have_header) fail(errc::parse_error, "duplicate problem line");
      std::istringstream ls(line);
      std::string p, kind;
      if (!(ls >> p >> kind >> num_vars >> num_clauses) || p != "p" || kind != "cnf")
        fail(errc::parse_error, "bad problem line: " + line);
      std::string extra;
      if (ls >> extra) fail(errc::parse_error, "trailing tokens on problem line: " + line);
      if (num_vars < 1 || num_clauses < 1)
        fail(errc::parse_error, "problem line needs at least 1 variable and 1 clause");
      have_header = true;
      continue;
    }

    if (!have_header) fail(errc::parse_error, "literals before the problem line");
    std::istringstream ls(line);
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (current_size != 3)
          fail(errc::not_three_cnf, "clause " + std::to_string(f.clauses.size() + 1) +
                                        " has " + std::to_string(current_size) +
                                        " literals");
        f.clauses.push_back(current);
        current_size = 0;
        continue;
      }
      if (lit < -num_vars || lit > num_vars)
        fail(errc::parse_error, "literal " + std::to_string(lit) + " out of range");
      if (current_size == 3)
        fail(errc::not_three_cnf,
             "clause " + std::to_string(f.clauses.size() + 1) + " has more than 3 literals");
      current[static_cast<size_t>(current_size++)] = static_cast<int>(lit);
    }
    if (!ls.eof()) fail(errc::parse_error, "bad token on line: " + line);
  }

  if (!have_header) fail(errc::parse_error, "missing problem line");
  if (current_size != 0) fail(errc::parse_error, "unterminated clause at end of input");
  if (static_cast<long long>(f.clauses.size()) != num_clauses)
    fail(errc::parse_error, "problem line announces " + std::to_string(num_clauses) +
                                " clauses, found " + std::to_string(f.clauses.size()));
  f.num_vars = static_cast<int>(num_vars);
  return f;
}

std::string write_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses)
    out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
  return out.str();
}

KarpGraph karp_graph(const CnfFormula& f) {
  if (f.num_vars < 1) fail(errc::bad_params, "formula has no variables");
  if (f.clauses.empty()) fail(errc::bad_params, "formula has no clauses");
  std::vector<char> used(static_cast<size_t>(f.num_vars) + 1, 0);
  for (const auto& cl : f.clauses) {
    for (int lit : cl) {
      if (lit == 0 || lit < -f.num_vars || lit > f.num_vars)
        fail(errc::bad_params, "literal " + std::to_string(lit) + " out of range");
      used[static_cast<size_t>(lit > 0 ? lit : -lit)] = 1;
    }
  }
  for (int v = 1; v <= f.num_vars; ++v)
    if (!used[static_cast<size_t>(v)])
      fail(errc::unused_variable, "variable " + std::to_string(v) + " occurs in no clause");

  int V = f.num_vars;
  int C = static_cast<int>(f.clauses.size());
  constexpr int T = 0, F = 1, B = 2;
  auto lit_vertex = [](int lit) {
    return lit > 0 ? 3 + 2 * (lit - 1) : 4 + 2 * (-lit - 1);
  };

  KarpGraph out;
  int n = 3 + 2 * V + 6 * C;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(3 + 3 * V + 12 * C));
  edges.emplace_back(T, F);
  edges.emplace_back(T, B);
  edges.emplace_back(F, B);
  for (int i = 1; i <= V; ++i) {
    int p = lit_vertex(i), q = lit_vertex(-i);
    edges.emplace_back(p, q);
    edges.emplace_back(p, B);
    edges.emplace_back(q, B);
  }
  for (int j = 0; j < C; ++j) {
    const auto& cl = f.clauses[static_cast<size_t>(j)];
    int base = 3 + 2 * V + 6 * j;
    int a1 = base, b1 = base + 1, o1 = base + 2;
    int a2 = base + 3, b2 = base + 4, o2 = base + 5;
    edges.emplace_back(lit_vertex(cl[0]), a1);
    edges.emplace_back(lit_vertex(cl[1]), b1);
    edges.emplace_back(a1, b1);
    edges.emplace_back(a1, o1);
    edges.emplace_back(b1, o1);
    edges.emplace_back(o1, a2);
    edges.emplace_back(lit_vertex(cl[2]), b2);
    edges.emplace_back(a2, b2);
    edges.emplace_back(a2, o2);
    edges.emplace_back(b2, o2);
    edges.emplace_back(o2, F);
    edges.emplace_back(o2, B);
  }
  out.graph = Graph(n, std::move(edges));

  out.labels.resize(static_cast<size_t>(n));
  out.labels[T] = {VertexRole::BaseT, -1, -1};
  out.labels[F] = {VertexRole::BaseF, -1, -1};
  out.labels[B] = {VertexRole::BaseB, -1, -1};
  for (int i = 1; i <= V; ++i) {
    out.labels[static_cast<size_t>(lit_vertex(i))] = {VertexRole::PosLit, i, -1};
    out.labels[static_cast<size_t>(lit_vertex(-i))] = {VertexRole::NegLit, i, -1};
  }
  for (int j = 0; j < C; ++j)
    for (int pos = 0; pos < 6; ++pos)
      out.labels[static_cast<size_t>(3 + 2 * V + 6 * j + pos)] = {VertexRole::OrNode, j, pos};
  return out;
}

PredictedStats predicted_stats(long long C, long long L) {
  if (C < 1 || L < 2 || L % 2 != 0)
    fail(errc::bad_params, "C = " + std::to_string(C) + ", L = " + std::to_string(L));
  PredictedStats st;
  st.vertices = 6 * C + L + 3;
  st.edges_times_2 = 24 * C + 3 * L + 6;
  st.density = Fraction(3 * (8 * C + L + 2), st.vertices);
  return st;
}

bool sat_bruteforce(const CnfFormula& f) {
  if (f.num_vars > 20)
    fail(errc::too_large, "variable count " + std::to_string(f.num_vars) + " exceeds 20");
  for (const auto& cl : f.clauses)
    for (int lit : cl)
      if (lit == 0 || lit < -f.num_vars || lit > f.num_vars)
        fail(errc::bad_params, "literal " + std::to_string(lit) + " out of range");

  for (unsigned long long mask = 0; mask < (1ull << f.num_vars); ++mask) {
    bool all = true;
    for (const auto& cl : f.clauses) {
      bool sat = false;
      for (int lit : cl) {
        bool value = (mask >> (std::abs(lit) - 1)) & 1ull;
        if (lit > 0 ? value : !value) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace ahg
