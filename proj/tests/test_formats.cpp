#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "eilab/formats.hpp"
#include "eilab/harness.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace eilab;
using namespace testsupport;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

ErrorCode json_error(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

// Independent encoder written straight from the format definition.
std::string reference_graph6(const Graph& g) {
  std::string out(1, static_cast<char>(63 + g.order()));
  int acc = 0, used = 0;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(63 + acc);
        acc = used = 0;
      }
    }
  }
  if (used) out += static_cast<char>(63 + (acc << (6 - used)));
  return out;
}

}  // namespace

TEST_CASE("graph6 golden pairs") {
  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6("Dhc") == cycle(5));
  CHECK(encode_graph6(complete(2)) == "A_");
  CHECK(encode_graph6(cycle(5)) == "Dhc");
  CHECK(encode_graph6(Graph::edgeless(1)) == "@");
  CHECK(encode_graph6(Graph::edgeless(0)) == "?");
  CHECK(parse_graph6(">>graph6<<Dhc") == cycle(5));
  CHECK(parse_graph6("Dhc\r\n") == cycle(5));
  CHECK(parse_graph6("IheA@GUAo").size() == 15);  // Petersen graph as printed by networkx
}

TEST_CASE("graph6 rejects malformed records") {
  CHECK(parse_error("D?") == ErrorCode::MalformedGraph6);    // one byte short
  CHECK(parse_error("D???") == ErrorCode::MalformedGraph6);  // one byte long
  CHECK(parse_error("") == ErrorCode::MalformedGraph6);
  CHECK(parse_error("A\x7f") == ErrorCode::MalformedGraph6);
  CHECK(parse_error("D h") == ErrorCode::MalformedGraph6);
  CHECK(parse_error("A`") == ErrorCode::MalformedGraph6);  // padding bit set
  CHECK(parse_error("~?@?") == ErrorCode::MalformedGraph6);  // long-form vertex count
  // Five vertices, no edges: two zero bytes of data.
  CHECK(parse_graph6("D??") == Graph::edgeless(5));
  CHECK_THROWS_AS(encode_graph6(Graph::edgeless(63)), Error);
}

TEST_CASE("graph6 round trip on the corpus and on random graphs up to 20 vertices") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n, false).graphs) {
      CHECK(parse_graph6(encode_graph6(g)) == g);
      CHECK(encode_graph6(g) == reference_graph6(g));
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(0, 20);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph(rng, order(rng), density(rng));
    const std::string text = encode_graph6(g);
    CHECK(text == reference_graph6(g));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 files from networkx parse") {
  std::ifstream atlas(EILAB_FIXTURES "/atlas_n1to7.g6");
  REQUIRE(atlas);
  const auto docs = read_graph6_stream(atlas);
  CHECK(docs.size() == 1252);
  std::ifstream n8(EILAB_FIXTURES "/networkx_n8.g6");
  REQUIRE(n8);
  const auto eight = read_graph6_stream(n8);
  REQUIRE(eight.size() == 41);
  CHECK(eight.front().graph == cycle(8));
  for (const auto& d : eight) {
    const std::string raw = d.raw.starts_with(">>graph6<<") ? d.raw.substr(10) : d.raw;
    CHECK(encode_graph6(d.graph) == raw);
  }
}

TEST_CASE("graph6 stream errors carry the line number") {
  std::istringstream in("Dhc\n\nA_\nD?\n");
  try {
    read_graph6_stream(in);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedGraph6);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("edge-list JSON") {
  CHECK(parse_edge_list(R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]})") == cycle(5));
  CHECK(parse_edge_list(R"({"n":2,"edges":[]})") == Graph::edgeless(2));
  CHECK(json_error(R"({"n":2,"edges":[[0,2]]})") == ErrorCode::InvalidVertex);
  CHECK(json_error(R"({"n":2,"edges":[[1,1]]})") == ErrorCode::SelfLoopRejected);
  CHECK(json_error(R"({"edges":[]})") == ErrorCode::MalformedDocument);
  CHECK(json_error(R"({"n":2,"edges":[[0]]})") == ErrorCode::MalformedDocument);
  CHECK(json_error(R"({"n":2,"edges":[[0,1]],"labels":["a"]})") == ErrorCode::MalformedDocument);
  CHECK(json_error(R"({"n":2,)") == ErrorCode::MalformedDocument);
  CHECK(json_error(R"([1,2])") == ErrorCode::MalformedDocument);

  const auto doc = parse_edge_list_document(R"({"name":"p3","n":3,"edges":[[0,1],[1,2]],"labels":["a","b","c"]})");
  CHECK(doc.name == std::optional<std::string>("p3"));
  CHECK(doc.graph.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(parse_edge_list(encode_edge_list(doc.graph, "p3")) == path(3));

  const auto many = read_edge_list_json(R"([{"n":2,"edges":[[0,1]]},{"n":1,"edges":[]}])");
  CHECK(many.size() == 2);
}

TEST_CASE("report writer") {
  ReportRow row;
  row.id = "Dhc";
  row.n = 5;
  row.m = 5;
  row.nu = 2;
  row.nu0 = 1;
  row.mm = 2;
  row.cochord = 2;
  row.regs = {{2, 3}, {0, 3}};
  row.verdict = "true/true";
  const std::string csv = write_report({row}, ReportFormat::Csv);
  CHECK(csv == "id,n,m,nu,nu0,mm,cochord,reg_char0,reg_char2,verdict\r\nDhc,5,5,2,1,2,2,3,3,true/true\r\n");
  CHECK(write_report({}, ReportFormat::Csv) == "id,n,m,nu,nu0,mm,cochord,verdict\r\n");

  const auto parsed = nlohmann::json::parse(write_report({row}, ReportFormat::Json));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  for (const char* key : {"id", "n", "m", "nu", "nu0", "mm", "cochord", "reg_char0", "reg_char2", "verdict",
                          "certificate"}) {
    CHECK(parsed[0].contains(key));
  }
  CHECK(nlohmann::json::parse(write_report({}, ReportFormat::Json)).empty());

  ReportRow sparse;
  sparse.id = "odd,\"id\"";
  const std::string line = write_report({sparse}, ReportFormat::Csv);
  CHECK(line == "id,n,m,nu,nu0,mm,cochord,verdict\r\n\"odd,\"\"id\"\"\",0,0,,,,,\r\n");
  CHECK(csv_escape("a\nb") == "\"a\nb\"");
}
