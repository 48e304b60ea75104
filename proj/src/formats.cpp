#include "eilab/formats.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace eilab {

using nlohmann::json;

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw Error(ErrorCode::MalformedGraph6, "empty record");
  for (char c : line) {
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::MalformedGraph6, "byte " + std::to_string(static_cast<int>(c)) +
                                                  " outside 63..126");
    }
  }
  const int n = line[0] - 63;
  if (n > 62) throw Error(ErrorCode::MalformedGraph6, "multi-byte vertex counts are not supported");
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() - 1 != nbytes) {
    throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(nbytes) +
                                                " data bytes for n=" + std::to_string(n) + ", got " +
                                                std::to_string(line.size() - 1));
  }
  std::vector<VertexSet> adj(n, 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
      }
    }
  }
  for (; k < nbytes * 6; ++k) {
    const int byte = line[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Error(ErrorCode::TooLarge, "graph6 short form holds at most 62 vertices");
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v));
  }
  return detail::pack_graph6(n, bits);
}

namespace {

GraphDocument document_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::MalformedDocument, "expected an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorCode::MalformedDocument, "missing integer field 'n'");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::MalformedDocument, "missing array field 'edges'");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 0) throw Error(ErrorCode::MalformedDocument, "negative vertex count");
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "at most 64 vertices");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorCode::MalformedDocument, "edge entries must be 2-element integer lists");
    }
    const auto a = e[0].get<long long>();
    const auto b = e[1].get<long long>();
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::InvalidVertex,
                  "edge [" + std::to_string(a) + "," + std::to_string(b) + "] with n=" + std::to_string(n));
    }
    edges.push_back(Edge::of(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    if (a == b) throw Error(ErrorCode::SelfLoopRejected, "loop at " + std::to_string(a));
  }
  GraphDocument out;
  out.format = SourceFormat::EdgeListJson;
  out.raw = doc.dump();
  out.graph = Graph::from_edges(static_cast<int>(n), edges);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorCode::MalformedDocument, "'name' must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw Error(ErrorCode::MalformedDocument, "'labels' must be a list");
    std::vector<std::string> labels;
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw Error(ErrorCode::MalformedDocument, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<long long>(labels.size()) != n) {
      throw Error(ErrorCode::MalformedDocument, "label count does not match n");
    }
    out.graph = out.graph.with_labels(std::move(labels));
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
}

}  // namespace

GraphDocument parse_edge_list_document(std::string_view json_text) {
  return document_from_json(parse_json(json_text));
}

Graph parse_edge_list(std::string_view json_text) { return parse_edge_list_document(json_text).graph; }

std::string encode_edge_list(const Graph& g, const std::optional<std::string>& name) {
  json doc;
  if (name) doc["name"] = *name;
  doc["n"] = g.order();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = edges;
  if (!g.labels().empty()) doc["labels"] = g.labels();
  return doc.dump();
}

std::vector<GraphDocument> read_graph6_stream(std::istream& in) {
  std::vector<GraphDocument> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      GraphDocument doc;
      doc.format = SourceFormat::Graph6;
      doc.raw = std::string(trim(line));
      doc.graph = parse_graph6(line);
      doc.line = lineno;
      out.push_back(std::move(doc));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<GraphDocument> read_edge_list_json(std::string_view json_text) {
  const json doc = parse_json(json_text);
  std::vector<GraphDocument> out;
  if (doc.is_array()) {
    int index = 0;
    for (const auto& item : doc) {
      ++index;
      try {
        out.push_back(document_from_json(item));
        out.back().line = index;
      } catch (const Error& e) {
        throw Error(e.code(), "record " + std::to_string(index) + ": " + e.what());
      }
    }
  } else {
    out.push_back(document_from_json(doc));
  }
  return out;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string write_report(const std::vector<ReportRow>& rows, ReportFormat format) {
  std::set<int> chars;
  for (const auto& row : rows) {
    for (const auto& r : row.regs) chars.insert(r.characteristic);
  }
  auto reg_for = [](const ReportRow& row, int p) -> std::optional<int> {
    for (const auto& r : row.regs) {
      if (r.characteristic == p) return r.reg;
    }
    return std::nullopt;
  };

  if (format == ReportFormat::Json) {
    json out = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
      obj["id"] = row.id;
      obj["n"] = row.n;
      obj["m"] = row.m;
      obj["nu"] = opt(row.nu);
      obj["nu0"] = opt(row.nu0);
      obj["mm"] = opt(row.mm);
      obj["cochord"] = opt(row.cochord);
      for (int p : chars) obj["reg_char" + std::to_string(p)] = opt(reg_for(row, p));
      obj["verdict"] = row.verdict;
      obj["certificate"] = row.certificate;
      out.push_back(std::move(obj));
    }
    // nlohmann::json sorts object keys; emit in the documented column order instead.
    std::ostringstream ss;
    ss << "[";
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto& obj = out[i];
      std::vector<std::string> keys = {"id", "n", "m", "nu", "nu0", "mm", "cochord"};
      for (int p : chars) keys.push_back("reg_char" + std::to_string(p));
      keys.push_back("verdict");
      keys.push_back("certificate");
      ss << (i ? "," : "") << "\n  {";
      for (std::size_t k = 0; k < keys.size(); ++k) {
        ss << (k ? ", " : "") << json(keys[k]).dump() << ": " << obj.at(keys[k]).dump();
      }
      ss << "}";
    }
    ss << (out.empty() ? "]\n" : "\n]\n");
    return ss.str();
  }

  std::ostringstream ss;
  ss << "id,n,m,nu,nu0,mm,cochord";
  for (int p : chars) ss << ",reg_char" << p;
  ss << ",verdict\r\n";
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& row : rows) {
    ss << csv_escape(row.id) << ',' << row.n << ',' << row.m << ',' << cell(row.nu) << ','
       << cell(row.nu0) << ',' << cell(row.mm) << ',' << cell(row.cochord);
    for (int p : chars) ss << ',' << cell(reg_for(row, p));
    ss << ',' << csv_escape(row.verdict) << "\r\n";
  }
  return ss.str();
}

}  // namespace eilab
