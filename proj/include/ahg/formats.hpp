#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ahg/bounds.hpp"
#include "ahg/graph.hpp"

namespace ahg {

/// DIMACS coloring format: "c" comments, one "p edge N M" line, then M
/// "e u v" lines with 1-indexed endpoints.
Graph parse_dimacs_graph(const std::string& text);

/// Plain edge list: "#" comments, first data line "N M", then M lines "u v"
/// with 0-indexed endpoints.
Graph parse_edge_list(const std::string& text);

/// Accepts either format, keyed off the first data line.
Graph parse_graph_text(const std::string& text);

/// Canonical DIMACS output: sorted 1-indexed edges; parse(write(g)) == g.
std::string write_dimacs_graph(const Graph& g);

enum class ReportFormat { json, csv_row, table };

/// Stable field order across all three formats; absent optionals render as
/// JSON null / empty CSV cell / "-" in the table. Fractions are written as
/// exact "num/den" strings, never decimals.
std::string serialize_report(const BoundsReport& r, ReportFormat format);

struct ReportDocument {
  std::string input;
  std::string tool_version;
  std::optional<std::uint64_t> seed;
  BoundsReport report;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

std::string serialize_report_document(const ReportDocument& doc);

/// Inverse of serialize_report_document; round-trips losslessly.
ReportDocument parse_report_document(const std::string& text);

}  // namespace ahg
