#pragma once

#include <string>
#include <vector>

#include "eilab/graph.hpp"

namespace eilab {

/// Verdict plus witness: a perfect elimination order when chordal, otherwise a
/// chordless cycle of length >= 4 (listed in cyclic order).
struct ChordalityCertificate {
  bool chordal = false;
  std::vector<Vertex> elimination_order;
  std::vector<Vertex> chordless_cycle;
};

ChordalityCertificate is_chordal(const Graph& g);
/// Chordality of the complement; witness vertices are g's vertices.
ChordalityCertificate is_cochordal(const Graph& g);

/// For a graph with at least one edge, reg I(G) = 2 exactly when the
/// complement is chordal. Throws NotApplicable on an edgeless graph.
bool froberg_reg_two(const Graph& g);

/// Lexicographic BFS visit order.
std::vector<Vertex> lex_bfs(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order);
bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// k co-chordal subgraphs (each on the full vertex set) covering E(G).
struct CochordCover {
  int k = 0;
  std::vector<std::vector<Edge>> parts;
};

struct CochordOptions {
  int cap = 4;
  int max_vertices = 10;
};

/// Exact co-chordal cover number. Every co-chordal subgraph H of G has
/// complement H^c, a chordal supergraph of G^c, which contains the fill graph
/// of G^c under some elimination order. So minimal covers are found among the
/// complements of elimination fill sets, and cochord(G) is the fewest fill sets
/// with empty common intersection.
///
/// Throws NotApplicable on an edgeless graph, TooLarge above max_vertices and
/// CapExceeded (carrying the min(mm, ...) upper bound) when the minimum exceeds
/// the cap.
CochordCover cochord_number(const Graph& g, const CochordOptions& options = {});

/// Empty when valid; otherwise a description of the first problem.
std::string validate(const Graph& g, const CochordCover& cover);

}  // namespace eilab
