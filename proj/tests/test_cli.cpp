#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "eilab/cli.hpp"
#include "json.hpp"

using eilab::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("reg over two characteristics from stdin") {
  const auto r = cli({"reg", "--g6", "-", "--char", "0", "--char", "2"}, "Dhc\n");
  CHECK(r.code == 0);
  const auto rows = json::parse(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["id"] == "Dhc");
  CHECK(rows[0]["reg_char0"] == 3);
  CHECK(rows[0]["reg_char2"] == 3);
}

TEST_CASE("stdin is the default input") {
  const auto r = cli({"reg", "--format", "csv"}, "A_\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("A_,2,1,") != std::string::npos);
}

TEST_CASE("classify a pentagon from JSON") {
  const auto r = cli({"classify", "--json", EILAB_FIXTURES "/pentagon.json"});
  CHECK(r.code == 0);
  const auto rows = json::parse(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["verdict"] == "true/true");
  CHECK(rows[0]["certificate"] == "Pentagon");
}

TEST_CASE("classify a hexagon: both sides false, still agreement") {
  const auto r = cli({"classify", "--g6", "-", "--format", "csv"}, "EhEG\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("false/false") != std::string::npos);
}

TEST_CASE("invariants and bounds") {
  const auto inv = cli({"invariants"}, "Dhc\n");
  CHECK(inv.code == 0);
  const auto rows = json::parse(inv.out);
  CHECK(rows[0]["nu"] == 2);
  CHECK(rows[0]["nu0"] == 1);
  CHECK(rows[0]["mm"] == 2);
  CHECK(rows[0]["cochord"] == 2);

  const auto b = cli({"bounds", "--refine"}, "Dhc\n");
  CHECK(b.code == 0);
  CHECK(json::parse(b.out)[0]["verdict"] == "[3,3]");

  // edgeless input is an error for bounds, reported per row
  const auto e = cli({"bounds"}, "B?\n");
  CHECK(e.code == 1);
  CHECK(e.err.find("NotApplicable") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = cli({"verify", "--max-n", "3", "--lemmas", "FL2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS FL2 char 0") != std::string::npos);
  CHECK(r.out.find("PASS FL2 char 2") != std::string::npos);

  const auto t = cli({"verify", "--max-n", "4", "--chars", "3", "--format", "json"});
  CHECK(t.code == 0);
  const auto doc = json::parse(t.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["property"] == "Theorem char 3");
  CHECK(doc[0]["passed"] == true);

  const auto g6 = cli({"verify", "--g6", EILAB_FIXTURES "/networkx_n8.g6", "--lemmas", "Theorem,CaWa",
                       "--no-unions", "--chars", "0"});
  CHECK(g6.code == 0);

  const auto capped = cli({"verify", "--min-n", "5", "--max-n", "4"});
  CHECK(capped.code == 2);
}

TEST_CASE("enumerate") {
  const auto r = cli({"enumerate", "--n", "4", "--connected"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  const auto j = cli({"enumerate", "--n", "3", "--format", "json"});
  CHECK(json::parse(j.out).size() == 4);
  CHECK(cli({"enumerate", "--n", "9"}).code == 2);
}

TEST_CASE("malformed input reports the line and flushes earlier rows") {
  const auto r = cli({"reg", "--g6", EILAB_FIXTURES "/malformed.g6"});
  CHECK(r.code == 2);
  CHECK(r.err.find(":3:") != std::string::npos);
  const auto rows = json::parse(r.out);
  CHECK(rows.size() == 2);

  const auto piped = cli({"reg", "--format", "csv"}, "Dhc\nD?\n");
  CHECK(piped.code == 2);
  CHECK(piped.out.find("Dhc,5,5") != std::string::npos);
  CHECK(piped.err.find(":2:") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"reg", "--char", "4"}, "Dhc\n").code == 2);
  CHECK(cli({"verify", "--lemmas", "Nope"}).code == 2);
  CHECK(cli({"reg", "--g6", "/nonexistent/file.g6"}).code == 2);
  CHECK(cli({"reg", "--format", "xml"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
