#include "ahg/formats.hpp"

#include <cctype>
#include <cstdint>
#include <iomanip>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "ahg/errors.hpp"

namespace ahg {

namespace {

using ordered_json = nlohmann::ordered_json;

char first_nonspace(const std::string& line) {
  for (char ch : line)
    if (!std::isspace(static_cast<unsigned char>(ch))) return ch;
  return '\0';
}

struct GraphHeader {
  long long n = 0;
  long long m = 0;
};

Graph parse_graph_lines(const std::string& text, bool dimacs) {
  std::istringstream in(text);
  std::string line;
  char comment = dimacs ? 'c' : '#';
  std::optional<GraphHeader> header;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    char lead = first_nonspace(line);
    if (lead == '\0' || lead == comment) continue;

    std::istringstream ls(line);
    if (!header) {
      GraphHeader h;
      if (dimacs) {
        std::string p, kind;
        if (!(ls >> p >> kind >> h.n >> h.m) || p != "p" || kind != "edge")
          fail(errc::parse_error, "bad problem line: " + line);
      } else {
        if (!(ls >> h.n >> h.m)) fail(errc::parse_error, "bad header line: " + line);
      }
      std::string extra;
      if (ls >> extra) fail(errc::parse_error, "trailing tokens on line: " + line);
      if (h.n < 0 || h.m < 0) fail(errc::parse_error, "negative counts: " + line);
      header = h;
      continue;
    }

    long long u, v;
    if (dimacs) {
      std::string e;
      if (!(ls >> e >> u >> v) || e != "e") fail(errc::parse_error, "bad edge line: " + line);
      --u;
      --v;
    } else {
      if (!(ls >> u >> v)) fail(errc::parse_error, "bad edge line: " + line);
    }
    std::string extra;
    if (ls >> extra) fail(errc::parse_error, "trailing tokens on line: " + line);
    if (u < INT32_MIN || u > INT32_MAX || v < INT32_MIN || v > INT32_MAX)
      fail(errc::parse_error, "endpoint out of range: " + line);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  if (!header) fail(errc::parse_error, dimacs ? "missing problem line" : "missing header line");
  if (static_cast<long long>(edges.size()) != header->m)
    fail(errc::count_mismatch, "header announces " + std::to_string(header->m) +
                                   " edges, found " + std::to_string(edges.size()));
  if (header->n > INT32_MAX) fail(errc::parse_error, "vertex count out of range");
  return Graph(static_cast<int>(header->n), std::move(edges));
}

ordered_json report_to_json(const BoundsReport& r) {
  auto opt = [](const std::optional<int>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["avg_degree"] = to_string(r.avg_degree);
  j["mad"] = to_string(r.mad_value);
  j["is_ah"] = r.is_ah;
  j["bound_mad"] = r.bound_mad;
  j["bound_delta"] = r.bound_delta;
  j["bound_brooks"] = opt(r.bound_brooks);
  j["bound_soto"] = opt(r.bound_soto);
  j["lower_clique"] = r.lower_clique;
  j["exact_case"] = opt(r.exact_case);
  j["degeneracy"] = r.degeneracy;
  j["greedy_colors"] = r.greedy_colors;
  j["exact_chromatic"] = opt(r.exact_chromatic);
  return j;
}

BoundsReport report_from_json(const ordered_json& j) {
  auto opt = [](const ordered_json& v) -> std::optional<int> {
    if (v.is_null()) return std::nullopt;
    return v.get<int>();
  };
  BoundsReport r;
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.avg_degree = fraction_from_string(j.at("avg_degree").get<std::string>());
  r.mad_value = fraction_from_string(j.at("mad").get<std::string>());
  r.is_ah = j.at("is_ah").get<bool>();
  r.bound_mad = j.at("bound_mad").get<int>();
  r.bound_delta = j.at("bound_delta").get<int>();
  r.bound_brooks = opt(j.at("bound_brooks"));
  r.bound_soto = opt(j.at("bound_soto"));
  r.lower_clique = j.at("lower_clique").get<int>();
  r.exact_case = opt(j.at("exact_case"));
  r.degeneracy = j.at("degeneracy").get<int>();
  r.greedy_colors = j.at("greedy_colors").get<int>();
  r.exact_chromatic = opt(j.at("exact_chromatic"));
  return r;
}

constexpr const char* kReportFields[] = {
    "n",           "m",          "avg_degree",   "mad",
    "is_ah",       "bound_mad",  "bound_delta",  "bound_brooks",
    "bound_soto",  "lower_clique", "exact_case", "degeneracy",
    "greedy_colors", "exact_chromatic"};

std::vector<std::string> report_cells(const BoundsReport& r, const char* absent) {
  auto opt = [&](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string(absent);
  };
  return {std::to_string(r.n),
          std::to_string(r.m),
          to_string(r.avg_degree),
          to_string(r.mad_value),
          r.is_ah ? "true" : "false",
          std::to_string(r.bound_mad),
          std::to_string(r.bound_delta),
          opt(r.bound_brooks),
          opt(r.bound_soto),
          std::to_string(r.lower_clique),
          opt(r.exact_case),
          std::to_string(r.degeneracy),
          std::to_string(r.greedy_colors),
          opt(r.exact_chromatic)};
}

}  // namespace

Graph parse_dimacs_graph(const std::string& text) { return parse_graph_lines(text, true); }

Graph parse_edge_list(const std::string& text) { return parse_graph_lines(text, false); }

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    char lead = first_nonspace(line);
    if (lead == '\0' || lead == 'c' || lead == '#') continue;
    if (lead == 'p') return parse_dimacs_graph(text);
    return parse_edge_list(text);
  }
  fail(errc::parse_error, "no graph data found");
}

std::string write_dimacs_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string serialize_report(const BoundsReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";

  if (format == ReportFormat::csv_row) {
    std::ostringstream out;
    for (size_t i = 0; i < std::size(kReportFields); ++i)
      out << kReportFields[i] << (i + 1 < std::size(kReportFields) ? ',' : '\n');
    auto cells = report_cells(r, "");
    for (size_t i = 0; i < cells.size(); ++i)
      out << cells[i] << (i + 1 < cells.size() ? ',' : '\n');
    return out.str();
  }

  std::ostringstream out;
  auto cells = report_cells(r, "-");
  for (size_t i = 0; i < cells.size(); ++i)
    out << std::left << std::setw(16) << kReportFields[i] << cells[i] << '\n';
  return out.str();
}

std::string serialize_report_document(const ReportDocument& doc) {
  ordered_json j;
  j["input"] = doc.input;
  j["tool_version"] = doc.tool_version;
  j["seed"] = doc.seed ? ordered_json(*doc.seed) : ordered_json(nullptr);
  j["report"] = report_to_json(doc.report);
  return j.dump(2) + "\n";
}

ReportDocument parse_report_document(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "bad report document");
  try {
    ReportDocument doc;
    doc.input = j.at("input").get<std::string>();
    doc.tool_version = j.at("tool_version").get<std::string>();
    if (!j.at("seed").is_null()) doc.seed = j.at("seed").get<std::uint64_t>();
    doc.report = report_from_json(j.at("report"));
    return doc;
  } catch (const ordered_json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

}  // namespace ahg
