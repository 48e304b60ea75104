#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "eilab/graph.hpp"
#include "eilab/matchings.hpp"

namespace eilab {

struct Triangle {
  Vertex anchor;
  Vertex a;
  Vertex b;
  auto operator<=>(const Triangle&) const = default;
};

/// Every edge meets the center. A single vertex is the degenerate star.
struct StarShape {
  Vertex center;
};
/// Triangles pairwise sharing only the common vertex.
struct StarTriangleShape {
  Vertex common;
  std::vector<std::pair<Vertex, Vertex>> triangles;
};
/// Connected bipartite core (X, Y); every x in X carries at least one leaf,
/// pendant triangles hang only off Y.
struct BipartitePendantShape {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  std::vector<Edge> core_edges;
  std::map<Vertex, std::vector<Vertex>> leaves;
  std::map<Vertex, std::vector<std::pair<Vertex, Vertex>>> triangles;
};
/// nu != nu0, witnessed by both certificates.
struct NotCameronWalker {
  MatchingCertificate maximum;
  MatchingCertificate induced;
};

using CWShape = std::variant<StarShape, StarTriangleShape, BipartitePendantShape, NotCameronWalker>;

struct CWDecomposition {
  bool verdict = false;
  CWShape shape;
};

struct CWInvariantVerdict {
  bool verdict = false;
  MatchingCertificate maximum;
  MatchingCertificate induced;
};

/// nu(g) == nu0(g), with both certificates.
CWInvariantVerdict cw_by_invariants(const Graph& g);

/// Structural trichotomy for a connected graph; throws NotConnected otherwise.
CWDecomposition recognize_structural(const Graph& g);

/// Re-checks a shape certificate against g from scratch. Empty when valid.
std::string validate(const Graph& g, const CWDecomposition& d);

std::string describe(const CWShape& shape);

}  // namespace eilab
