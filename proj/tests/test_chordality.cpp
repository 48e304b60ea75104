#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eilab/chordality.hpp"
#include "eilab/harness.hpp"
#include "eilab/matchings.hpp"
#include "support.hpp"

using namespace eilab;
using namespace testsupport;

TEST_CASE("chordality examples") {
  const auto c4 = is_chordal(cycle(4));
  CHECK_FALSE(c4.chordal);
  CHECK(c4.chordless_cycle.size() == 4);
  CHECK(is_chordless_cycle(cycle(4), c4.chordless_cycle));

  CHECK(is_chordal(path(6)).chordal);
  CHECK(is_chordal(star(4)).chordal);
  CHECK(is_chordal(complete(5)).chordal);
  CHECK(is_chordal(Graph::edgeless(0)).chordal);

  // A chord from 0 to 2 leaves the 4-cycle 0-2-3-4 chordless.
  const Graph chorded = with_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  const auto cert = is_chordal(chorded);
  CHECK_FALSE(cert.chordal);
  CHECK(cert.chordless_cycle.size() == 4);
  CHECK(is_chordless_cycle(chorded, cert.chordless_cycle));
}

TEST_CASE("co-chordality and the reg-two criterion") {
  CHECK_FALSE(is_cochordal(cycle(5)).chordal);
  CHECK(is_cochordal(path(4)).chordal);
  CHECK(is_cochordal(complete(6)).chordal);
  CHECK(froberg_reg_two(complete(2)));
  CHECK_FALSE(froberg_reg_two(cycle(5)));
  CHECK(froberg_reg_two(with_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})));
  CHECK_THROWS_AS(froberg_reg_two(Graph::edgeless(3)), Error);
}

TEST_CASE("verdicts and witnesses agree with induced-cycle enumeration") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n, false).graphs) {
      const auto cert = is_chordal(g);
      REQUIRE(cert.chordal == brute_chordal(g));
      if (cert.chordal) {
        CHECK(is_perfect_elimination_order(g, cert.elimination_order));
      } else {
        CHECK(is_chordless_cycle(g, cert.chordless_cycle));
      }
    }
  }
}

TEST_CASE("witness checkers reject bad input") {
  const Graph c5 = cycle(5);
  CHECK_FALSE(is_chordless_cycle(c5, {0, 1, 2}));
  CHECK_FALSE(is_chordless_cycle(c5, {0, 1, 2, 3}));
  CHECK(is_chordless_cycle(c5, {0, 1, 2, 3, 4}));
  CHECK_FALSE(is_chordless_cycle(c5, {0, 1, 2, 3, 3}));
  CHECK_FALSE(is_perfect_elimination_order(cycle(4), {0, 1, 2, 3}));
  CHECK_FALSE(is_perfect_elimination_order(path(3), {0, 1}));
  CHECK(is_perfect_elimination_order(path(3), {0, 1, 2}));
}

TEST_CASE("lex BFS visits every vertex once") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 1 + trial % 12, 0.3);
    auto order = lex_bfs(g);
    std::sort(order.begin(), order.end());
    std::vector<Vertex> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    CHECK(order == all);
  }
}

TEST_CASE("co-chordal cover examples") {
  CHECK(cochord_number(complete(2)).k == 1);
  CHECK(cochord_number(cycle(5)).k == 2);
  CHECK(cochord_number(with_edges(4, {{0, 1}, {2, 3}})).k == 2);
  CHECK_THROWS_AS(cochord_number(Graph::edgeless(2)), Error);
  CHECK_THROWS_AS(cochord_number(cycle(11)), Error);

  // Four disjoint edges need four parts.
  const Graph four_k2 = with_edges(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(cochord_number(four_k2).k == 4);
  try {
    cochord_number(four_k2, {.cap = 3});
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    REQUIRE(e.upper_bound().has_value());
    CHECK(*e.upper_bound() >= 4);
  }
}

TEST_CASE("co-chordal cover number agrees with exhaustive search") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n, false).graphs) {
      if (g.edgeless() || g.size() > 10) continue;
      const auto cover = cochord_number(g);
      CHECK(validate(g, cover).empty());
      CHECK(cover.k == brute_cochord(g));
      CHECK(cover.k <= min_maximal_matching(g).size);
      CHECK(cover.k >= induced_matching_number(g).size);
    }
  }
}

TEST_CASE("cover validation rejects bad covers") {
  const Graph c5 = cycle(5);
  CochordCover missing{1, {{Edge::of(0, 1)}}};
  CHECK_FALSE(validate(c5, missing).empty());
  CochordCover whole{1, {c5.edges()}};
  CHECK_FALSE(validate(c5, whole).empty());
  CochordCover foreign{2, {{Edge::of(0, 2)}, c5.edges()}};
  CHECK_FALSE(validate(c5, foreign).empty());
}
