#include "eilab/chordality.hpp"

#include <algorithm>
#include <deque>

#include "eilab/matchings.hpp"

namespace eilab {

std::vector<Vertex> lex_bfs(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(n);
  std::vector<Vertex> order;
  VertexSet unvisited = g.vertices();
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (VertexSet s = unvisited; s; s &= s - 1) {
      const Vertex v = lowest(s);
      if (pick == -1 || label[v] > label[pick]) pick = v;
    }
    order.push_back(pick);
    unvisited &= ~bit(pick);
    for (VertexSet s = g.neighbors(pick) & unvisited; s; s &= s - 1) label[lowest(s)].push_back(n - step);
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != g.order()) return false;
  VertexSet later = g.vertices();
  for (Vertex v : order) {
    later &= ~bit(v);
    const VertexSet higher = g.neighbors(v) & later;
    for (VertexSet s = higher; s; s &= s - 1) {
      const Vertex u = lowest(s);
      if ((higher & ~bit(u) & ~g.neighbors(u)) != 0) return false;
    }
  }
  return later == 0;
}

bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 4) return false;
  VertexSet seen = 0;
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

// Shortest a-b path inside `allowed`, lowest-index parents; empty if none.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b, VertexSet allowed) {
  std::vector<Vertex> parent(g.order(), -1);
  VertexSet seen = bit(a);
  std::deque<Vertex> queue{a};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (VertexSet s = g.neighbors(x) & allowed & ~seen; s; s &= s - 1) {
      const Vertex y = lowest(s);
      seen |= bit(y);
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!(seen & bit(b))) return {};
  std::vector<Vertex> path;
  for (Vertex x = b; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// A graph is not chordal iff some vertex v has nonadjacent neighbours a, b
// joined by a path avoiding the rest of N[v]; the shortest such path closes a
// chordless cycle through v.
std::vector<Vertex> find_chordless_cycle(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = members(g.neighbors(v));
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex a = nbrs[i];
        const Vertex b = nbrs[j];
        if (g.adjacent(a, b)) continue;
        const VertexSet allowed = (g.vertices() & ~g.closed_neighborhood(v)) | bit(a) | bit(b);
        auto path = shortest_path(g, a, b, allowed);
        if (path.empty()) continue;
        std::vector<Vertex> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityCertificate is_chordal(const Graph& g) {
  ChordalityCertificate cert;
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_order(g, order)) {
    cert.chordal = true;
    cert.elimination_order = std::move(order);
    return cert;
  }
  cert.chordless_cycle = find_chordless_cycle(g);
  if (!is_chordless_cycle(g, cert.chordless_cycle)) {
    throw Error(ErrorCode::InternalInconsistency, "LexBFS order failed but no chordless cycle found");
  }
  return cert;
}

ChordalityCertificate is_cochordal(const Graph& g) { return is_chordal(complement(g)); }

bool froberg_reg_two(const Graph& g) {
  if (g.edgeless()) throw Error(ErrorCode::NotApplicable, "Froberg criterion needs at least one edge");
  return is_cochordal(g).chordal;
}

namespace {

using EdgeMask = std::uint64_t;

// Enumerates the fill-in edge sets of the elimination game on g^c over all
// vertex orders, keeping only inclusion-minimal ones. A partial fill that
// already contains a finished set cannot lead to a new minimal set.
class FillEnumerator {
 public:
  FillEnumerator(const Graph& g) : n_(g.order()), index_(n_, std::vector<int>(n_, -1)) {
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      index_[edges[i].u][edges[i].v] = index_[edges[i].v][edges[i].u] = static_cast<int>(i);
    }
    start_ = complement(g).adjacency();
  }

  std::vector<EdgeMask> run() {
    dfs(start_, first_n(n_), 0);
    std::vector<EdgeMask> minimal;
    std::sort(found_.begin(), found_.end(), [](EdgeMask a, EdgeMask b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    for (EdgeMask f : found_) {
      bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                   [&](EdgeMask m) { return (m & ~f) == 0; });
      if (!dominated) minimal.push_back(f);
    }
    return minimal;
  }

 private:
  bool dominated(EdgeMask fill) const {
    return std::any_of(found_.begin(), found_.end(), [&](EdgeMask m) { return (m & ~fill) == 0; });
  }

  void dfs(const std::vector<VertexSet>& adj, VertexSet remaining, EdgeMask fill) {
    if (dominated(fill)) return;
    if (remaining == 0) {
      found_.push_back(fill);
      return;
    }
    for (VertexSet s = remaining; s; s &= s - 1) {
      const Vertex v = lowest(s);
      const VertexSet nb = adj[v] & remaining & ~bit(v);
      std::vector<VertexSet> next = adj;
      EdgeMask next_fill = fill;
      for (VertexSet a = nb; a; a &= a - 1) {
        const Vertex x = lowest(a);
        const VertexSet missing = nb & ~next[x] & ~bit(x) & ~first_n(x + 1);
        for (VertexSet b = missing; b; b &= b - 1) {
          const Vertex y = lowest(b);
          next[x] |= bit(y);
          next[y] |= bit(x);
          next_fill |= EdgeMask{1} << index_[x][y];
        }
      }
      dfs(next, remaining & ~bit(v), next_fill);
    }
  }

  int n_;
  std::vector<std::vector<int>> index_;
  std::vector<VertexSet> start_;
  std::vector<EdgeMask> found_;
};

bool cover_search(const std::vector<EdgeMask>& fills, EdgeMask common, int left, std::vector<int>& chosen) {
  if (common == 0) return true;
  if (left == 0) return false;
  const EdgeMask e = common & (~common + 1);
  for (std::size_t i = 0; i < fills.size(); ++i) {
    if (fills[i] & e) continue;
    chosen.push_back(static_cast<int>(i));
    if (cover_search(fills, common & fills[i], left - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

CochordCover cochord_number(const Graph& g, const CochordOptions& options) {
  if (g.edgeless()) throw Error(ErrorCode::NotApplicable, "co-chordal cover needs at least one edge");
  if (g.order() > options.max_vertices) {
    throw Error(ErrorCode::TooLarge, "co-chordal cover search limited to " +
                                         std::to_string(options.max_vertices) + " vertices");
  }
  const auto fills = FillEnumerator(g).run();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const EdgeMask all = m == 64 ? ~EdgeMask{0} : ((EdgeMask{1} << m) - 1);
  for (int k = 1; k <= options.cap; ++k) {
    std::vector<int> chosen;
    if (!cover_search(fills, all, k, chosen)) continue;
    CochordCover cover;
    cover.k = static_cast<int>(chosen.size());
    for (int idx : chosen) {
      std::vector<Edge> part;
      for (int i = 0; i < m; ++i) {
        if (!((fills[idx] >> i) & 1U)) part.push_back(edges[i]);
      }
      cover.parts.push_back(std::move(part));
    }
    return cover;
  }
  throw CapExceeded("co-chordal cover number exceeds cap " + std::to_string(options.cap),
                    min_maximal_matching(g).size);
}

std::string validate(const Graph& g, const CochordCover& cover) {
  if (cover.k != static_cast<int>(cover.parts.size())) return "k disagrees with part count";
  std::vector<Edge> covered;
  for (const auto& part : cover.parts) {
    for (const auto& e : part) {
      if (e.u < 0 || e.v >= g.order() || !g.has_edge(e)) return "part edge not in graph";
    }
    if (!is_cochordal(Graph::from_edges(g.order(), part)).chordal) return "part is not co-chordal";
    covered.insert(covered.end(), part.begin(), part.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (covered != g.edges()) return "parts do not cover every edge";
  return {};
}

}  // namespace eilab
