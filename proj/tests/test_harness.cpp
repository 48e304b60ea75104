#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <set>

#include "eilab/formats.hpp"
#include "eilab/harness.hpp"
#include "support.hpp"

using namespace eilab;
using namespace testsupport;

namespace {

// Isomorphism classes of labeled graphs on n vertices, each class keyed by
// its lex-min adjacency bit string over all permutations.
std::size_t labeled_class_count(int n, bool connected_only) {
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1U) adj[slots[i].first][slots[i].second] = adj[slots[i].second][slots[i].first] = true;
    }
    if (connected_only && n > 0) {
      std::vector<bool> seen(n);
      std::vector<int> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
          if (adj[v][u] && !seen[u]) seen[u] = true, stack.push_back(u);
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) continue;
    }
    std::uint32_t best = ~0U;
    for (const auto& q : perms) {
      std::uint32_t code = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) code |= std::uint32_t{adj[q[slots[i].first]][q[slots[i].second]]} << i;
      best = std::min(best, code);
    }
    classes.insert(best);
  }
  return classes.size();
}

}  // namespace

TEST_CASE("connected counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_connected(n).graphs.size() == expected[n - 1]);
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n, false).graphs.size() == all[n - 1]);
  CHECK(enumerate_graphs(0, false).graphs.size() == 1);
  CHECK(enumerate_range(1, 7, true).graphs.size() == 996);
}

TEST_CASE("enumeration matches labeled enumeration with dedup") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_connected(n).graphs.size() == labeled_class_count(n, true));
    CHECK(enumerate_graphs(n, false).graphs.size() == labeled_class_count(n, false));
  }
}

TEST_CASE("enumeration matches the networkx atlas") {
  std::ifstream in(EILAB_FIXTURES "/atlas_n1to7.g6");
  REQUIRE(in);
  std::set<std::string> atlas;
  for (const auto& d : read_graph6_stream(in)) atlas.insert(canonical_form(d.graph));
  CHECK(atlas.size() == 1252);
  std::set<std::string> ours;
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_graphs(n, false).graphs) ours.insert(encode_graph6(g));
  CHECK(ours == atlas);
}

TEST_CASE("corpus invariants") {
  const auto c = enumerate_connected(6);
  std::set<std::string> forms;
  for (const auto& g : c.graphs) {
    CHECK(forms.insert(canonical_form(g)).second);
    CHECK(canonical_form(g) == encode_graph6(g));
  }
  CHECK(std::is_sorted(c.graphs.begin(), c.graphs.end(),
                       [](const Graph& a, const Graph& b) { return encode_graph6(a) < encode_graph6(b); }));

  auto code_of = [](int n) {
    try {
      enumerate_connected(n);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  CHECK(code_of(9) == ErrorCode::TooLarge);
}

TEST_CASE("documents dedup up to isomorphism") {
  std::istringstream in("Dhc\nDUW\nA_\nDhc\n");
  const auto c = corpus_from_documents(read_graph6_stream(in), "memory");
  CHECK(c.graphs.size() == 2);
  CHECK(c.source == CorpusSource::External);
  CHECK(c.min_n == 2);
  CHECK(c.max_n == 5);
}

TEST_CASE("union pairs") {
  const auto c = enumerate_range(1, 3, true);  // 1 + 1 + 2 graphs, orders 1, 2, 3, 3
  std::size_t expected = 0;
  for (std::size_t i = 0; i < c.graphs.size(); ++i)
    for (std::size_t j = i; j < c.graphs.size(); ++j) expected += c.graphs[i].order() + c.graphs[j].order() <= 5;
  const auto u = union_pairs(c, 5);
  CHECK(u.size() == expected);
  for (const auto& g : u) {
    CHECK(g.order() <= 5);
    CHECK(components(g).size() == 2);
  }
}

TEST_CASE("theorem sweep examples") {
  const auto small = verify_theorem(enumerate_range(1, 6, true), {FieldSpec(0), FieldSpec(2)});
  CHECK(small.passed());
  CHECK(small.checked > 0);

  std::istringstream c5("Dhc\n");
  const auto only = verify_theorem(corpus_from_documents(read_graph6_stream(c5), "c5"), {FieldSpec(0)},
                                   {.include_unions = false});
  CHECK(only.passed());
  CHECK(only.checked == 1);

  std::istringstream c6("EhEG\n");
  const auto six = corpus_from_documents(read_graph6_stream(c6), "c6");
  REQUIRE(six.graphs.size() == 1);
  CHECK(brute_isomorphic(six.graphs[0], cycle(6)));
  CHECK(verify_theorem(six, {FieldSpec(0)}).passed());
}

TEST_CASE("oracle caps become skips") {
  SweepOptions opts;
  opts.include_unions = false;
  opts.oracle.max_vertices = 4;
  const auto r = verify_theorem(enumerate_connected(5), {FieldSpec(0)}, opts);
  CHECK(r.violations.empty());
  CHECK(r.skips.size() == 21);
  CHECK_FALSE(r.passed());
  CHECK(r.passed(true));
}

TEST_CASE("lemma suite examples") {
  const auto six = enumerate_range(1, 6, true);
  for (const auto& report : verify_lemma_suite(six, {"FL2", "C1", "C1a", "C2"})) {
    CHECK_MESSAGE(report.passed(), report.property);
  }
  const auto five = enumerate_range(1, 5, true);
  const auto comp = verify_lemma_suite(five, {"Comp"});
  REQUIRE(comp.size() == 1);
  CHECK(comp[0].passed());
  CHECK(comp[0].checked > 0);

  try {
    verify_lemma_suite(five, {"FL2", "Nope"});
    FAIL("expected UnknownProperty");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownProperty);
  }
  CHECK(lemma_tags().size() == 15);
}

TEST_CASE("every lemma tag passes on graphs up to 5 vertices") {
  const auto corpus = enumerate_range(1, 5, false);
  const auto reports = verify_lemma_suite(corpus, lemma_tags());
  REQUIRE(reports.size() == lemma_tags().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].property == lemma_tags()[i]);
    CHECK_MESSAGE(reports[i].passed(), reports[i].property);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  const auto corpus = enumerate_range(1, 6, true);
  auto run = [&](const char* threads) {
    setenv("EILAB_THREADS", threads, 1);
    CHECK(worker_threads() == std::atoi(threads));
    auto reports = verify_lemma_suite(corpus, {"FL2", "Squeeze", "Bounds"});
    reports.push_back(verify_theorem(corpus, {FieldSpec(2)}));
    return reports;
  };
  const auto one = run("1");
  const auto four = run("4");
  unsetenv("EILAB_THREADS");
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].property == four[i].property);
    CHECK(one[i].checked == four[i].checked);
    CHECK(one[i].note == four[i].note);
    CHECK(one[i].violations.size() == four[i].violations.size());
  }
  setenv("EILAB_THREADS", "zero", 1);
  CHECK(worker_threads() >= 1);
  unsetenv("EILAB_THREADS");
}
