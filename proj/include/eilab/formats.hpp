#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eilab/graph.hpp"

namespace eilab {

enum class SourceFormat { Graph6, EdgeListJson };

struct GraphDocument {
  SourceFormat format = SourceFormat::Graph6;
  std::string raw;
  Graph graph;
  std::optional<std::string> name;
  int line = 0;  // 1-based line in the source file, 0 when not line oriented
};

/// Short-form graph6 only (n <= 62). An optional ">>graph6<<" header is
/// accepted; trailing whitespace is ignored.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// {"name"?: str, "n": int, "edges": [[u,v], ...], "labels"?: [str]}
Graph parse_edge_list(std::string_view json_text);
GraphDocument parse_edge_list_document(std::string_view json_text);
std::string encode_edge_list(const Graph& g, const std::optional<std::string>& name = std::nullopt);

/// Reads one graph per non-empty line. Errors carry the offending line number.
std::vector<GraphDocument> read_graph6_stream(std::istream& in);
/// Accepts a single edge-list object or an array of them.
std::vector<GraphDocument> read_edge_list_json(std::string_view json_text);

struct RegEntry {
  int characteristic = 0;
  std::optional<int> reg;
};

struct ReportRow {
  std::string id;
  int n = 0;
  int m = 0;
  std::optional<int> nu;
  std::optional<int> nu0;
  std::optional<int> mm;
  std::optional<int> cochord;
  std::vector<RegEntry> regs;
  std::string verdict;
  std::string certificate;
};

enum class ReportFormat { Json, Csv };

/// Columns: id,n,m,nu,nu0,mm,cochord,reg_char<p>... (ascending p over all
/// rows),verdict. CSV follows RFC 4180 (CRLF, quoted fields as needed); the
/// JSON form additionally carries the certificate summary.
std::string write_report(const std::vector<ReportRow>& rows, ReportFormat format);

std::string csv_escape(std::string_view field);

}  // namespace eilab
