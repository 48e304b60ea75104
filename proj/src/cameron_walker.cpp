#include "eilab/cameron_walker.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace eilab {

CWInvariantVerdict cw_by_invariants(const Graph& g) {
  CWInvariantVerdict out;
  out.maximum = max_matching(g);
  out.induced = induced_matching_number(g);
  out.verdict = out.maximum.size == out.induced.size;
  return out;
}

namespace {

std::optional<StarShape> as_star(const Graph& g) {
  if (g.order() == 1) return StarShape{0};
  for (Vertex c = 0; c < g.order(); ++c) {
    if (g.degree(c) == g.size() && g.size() > 0) return StarShape{c};
  }
  return std::nullopt;
}

std::optional<StarTriangleShape> as_star_triangle(const Graph& g) {
  const int n = g.order();
  if (n < 3 || n % 2 == 0 || g.size() != 3 * (n - 1) / 2) return std::nullopt;
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    StarTriangleShape shape{c, {}};
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (v == c) continue;
      const VertexSet rest = g.neighbors(v) & ~bit(c);
      if (g.degree(v) != 2 || popcount(rest) != 1) ok = false;
      else if (v < lowest(rest)) shape.triangles.emplace_back(v, lowest(rest));
    }
    if (ok) return shape;
  }
  return std::nullopt;
}

// Free vertices of pendant triangles come off first (pairs of adjacent
// degree-2 vertices with one common neighbour), then degree-1 vertices are
// leaves. What remains must be a connected bipartite core whose leaf anchors
// form one whole side and whose triangle anchors sit on the other.
std::optional<BipartitePendantShape> as_bipartite_pendant(const Graph& g) {
  const int n = g.order();
  VertexSet free_vertices = 0;
  std::map<Vertex, std::vector<std::pair<Vertex, Vertex>>> triangles;
  for (const auto& e : g.edges()) {
    if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
    const VertexSet cu = g.neighbors(e.u) & ~bit(e.v);
    const VertexSet cv = g.neighbors(e.v) & ~bit(e.u);
    if (cu != cv || popcount(cu) != 1) continue;
    triangles[lowest(cu)].emplace_back(e.u, e.v);
    free_vertices |= e.ends();
  }
  std::map<Vertex, std::vector<Vertex>> leaves;
  VertexSet leaf_vertices = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1 && !(free_vertices & bit(v))) {
      const Vertex anchor = lowest(g.neighbors(v));
      if (g.degree(anchor) == 1) return std::nullopt;
      leaves[anchor].push_back(v);
      leaf_vertices |= bit(v);
    }
  }
  const VertexSet core = g.vertices() & ~free_vertices & ~leaf_vertices;
  if (core == 0) return std::nullopt;
  for (const auto& [anchor, _] : triangles) {
    if (!(core & bit(anchor))) return std::nullopt;
  }

  // Two-colour the core, which must be connected.
  std::vector<int> colour(n, -1);
  const Vertex root = lowest(core);
  colour[root] = 0;
  std::vector<Vertex> stack{root};
  VertexSet reached = bit(root);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (VertexSet s = g.neighbors(v) & core; s; s &= s - 1) {
      const Vertex w = lowest(s);
      if (colour[w] == -1) {
        colour[w] = 1 - colour[v];
        reached |= bit(w);
        stack.push_back(w);
      } else if (colour[w] == colour[v]) {
        return std::nullopt;
      }
    }
  }
  if (reached != core) return std::nullopt;

  VertexSet side[2] = {0, 0};
  for (VertexSet s = core; s; s &= s - 1) side[colour[lowest(s)]] |= bit(lowest(s));
  VertexSet leaf_anchors = 0;
  for (const auto& [anchor, _] : leaves) leaf_anchors |= bit(anchor);
  VertexSet triangle_anchors = 0;
  for (const auto& [anchor, _] : triangles) triangle_anchors |= bit(anchor);

  std::optional<BipartitePendantShape> best;
  for (int xs = 0; xs < 2; ++xs) {
    const VertexSet x = side[xs];
    const VertexSet y = side[1 - xs];
    if (leaf_anchors != x || (triangle_anchors & ~y)) continue;
    BipartitePendantShape shape;
    shape.x = members(x);
    shape.y = members(y);
    if (best && !(shape.x < best->x)) continue;
    for (const auto& e : g.edges()) {
      if ((e.ends() & core) == e.ends()) shape.core_edges.push_back(e);
    }
    shape.leaves = leaves;
    shape.triangles = triangles;
    best = std::move(shape);
  }
  return best;
}

}  // namespace

CWDecomposition recognize_structural(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::NotApplicable, "empty graph has no components");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "structural recognizer needs a connected graph");
  if (auto star = as_star(g)) return {true, *star};
  if (auto st = as_star_triangle(g)) return {true, *st};
  if (auto bp = as_bipartite_pendant(g)) return {true, *bp};
  return {false, NotCameronWalker{max_matching(g), induced_matching_number(g)}};
}

std::string validate(const Graph& g, const CWDecomposition& d) {
  const int n = g.order();
  auto in_range = [&](Vertex v) { return v >= 0 && v < n; };
  return std::visit(
      [&](const auto& shape) -> std::string {
        using S = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<S, NotCameronWalker>) {
          if (d.verdict) return "NotCW shape with a positive verdict";
          if (shape.maximum.kind != MatchingKind::Maximum ||
              shape.induced.kind != MatchingKind::MaximumInduced) {
            return "witness kinds";
          }
          if (auto e = validate(g, shape.maximum); !e.empty()) return e;
          if (auto e = validate(g, shape.induced); !e.empty()) return e;
          if (shape.maximum.size == shape.induced.size) return "witness sizes agree";
          return {};
        } else {
          if (!d.verdict) return "shape certificate with a negative verdict";
          if (!is_connected(g)) return "graph not connected";
          if constexpr (std::is_same_v<S, StarShape>) {
            if (!in_range(shape.center)) return "center out of range";
            for (const auto& e : g.edges()) {
              if (e.u != shape.center && e.v != shape.center) return "edge misses the center";
            }
            return {};
          } else if constexpr (std::is_same_v<S, StarTriangleShape>) {
            if (!in_range(shape.common) || shape.triangles.empty()) return "bad common vertex";
            VertexSet seen = bit(shape.common);
            for (auto [a, b] : shape.triangles) {
              if (!in_range(a) || !in_range(b) || (seen & (bit(a) | bit(b))) || a == b) {
                return "triangles overlap";
              }
              seen |= bit(a) | bit(b);
              if (!g.adjacent(a, b) || !g.adjacent(a, shape.common) || !g.adjacent(b, shape.common)) {
                return "triangle edge missing";
              }
            }
            if (seen != g.vertices()) return "vertices outside the triangles";
            if (g.size() != 3 * static_cast<int>(shape.triangles.size())) return "extra edges";
            return {};
          } else {
            VertexSet x = 0, y = 0, seen = 0;
            auto claim = [&](Vertex v) {
              if (!in_range(v) || (seen & bit(v))) return false;
              seen |= bit(v);
              return true;
            };
            for (Vertex v : shape.x) {
              if (!claim(v)) return std::string("X overlaps");
              x |= bit(v);
            }
            for (Vertex v : shape.y) {
              if (!claim(v)) return std::string("Y overlaps");
              y |= bit(v);
            }
            int expected_edges = static_cast<int>(shape.core_edges.size());
            for (const auto& e : shape.core_edges) {
              if (!g.has_edge(e)) return std::string("core edge missing");
              if (!(((x & bit(e.u)) && (y & bit(e.v))) || ((y & bit(e.u)) && (x & bit(e.v))))) {
                return std::string("core edge not between X and Y");
              }
            }
            const VertexSet core = x | y;
            for (const auto& e : g.edges()) {
              if ((e.ends() & core) == e.ends() &&
                  std::find(shape.core_edges.begin(), shape.core_edges.end(), e) == shape.core_edges.end()) {
                return std::string("core edge not listed");
              }
            }
            if (!is_connected(induced_subgraph(g, core).graph)) return std::string("core not connected");
            for (Vertex v : shape.x) {
              auto it = shape.leaves.find(v);
              if (it == shape.leaves.end() || it->second.empty()) return std::string("X vertex without a leaf");
            }
            for (const auto& [anchor, ls] : shape.leaves) {
              if (!(x & bit(anchor))) return std::string("leaf anchored outside X");
              for (Vertex l : ls) {
                if (!claim(l)) return std::string("leaf overlaps");
                if (g.neighbors(l) != bit(anchor)) return std::string("leaf is not a pendant vertex");
                ++expected_edges;
              }
            }
            for (const auto& [anchor, ts] : shape.triangles) {
              if (!(y & bit(anchor))) return std::string("triangle anchored outside Y");
              for (auto [a, b] : ts) {
                if (!claim(a) || !claim(b)) return std::string("triangle overlaps");
                if (g.neighbors(a) != (bit(b) | bit(anchor)) || g.neighbors(b) != (bit(a) | bit(anchor))) {
                  return std::string("triangle is not pendant");
                }
                expected_edges += 3;
              }
            }
            if (seen != g.vertices()) return std::string("vertices unaccounted for");
            if (expected_edges != g.size()) return std::string("edge count mismatch");
            return {};
          }
        }
      },
      d.shape);
}

std::string describe(const CWShape& shape) {
  std::ostringstream ss;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, StarShape>) {
          ss << "Star(" << s.center << ")";
        } else if constexpr (std::is_same_v<S, StarTriangleShape>) {
          ss << "StarTriangle(" << s.common << ";" << s.triangles.size() << ")";
        } else if constexpr (std::is_same_v<S, BipartitePendantShape>) {
          std::size_t tri = 0;
          for (const auto& [_, ts] : s.triangles) tri += ts.size();
          ss << "BipartitePendant(X=" << s.x.size() << ",Y=" << s.y.size() << ",triangles=" << tri << ")";
        } else {
          ss << "NotCW(nu=" << s.maximum.size << ",nu0=" << s.induced.size << ")";
        }
      },
      shape);
  return ss.str();
}

}  // namespace eilab
