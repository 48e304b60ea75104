#include "eilab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace eilab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::SelfLoopRejected: return "SelfLoopRejected";
    case ErrorCode::InvalidSurgery: return "InvalidSurgery";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::TooLarge, "vertex count " + std::to_string(n) + " outside 0..64");
  }
  std::vector<VertexSet> adj(n, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::InvalidVertex, "edge {" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + "} on " +
                                                std::to_string(n) + " vertices");
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoopRejected, "loop at " + std::to_string(e.u));
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back(Edge{std::min(a, b), std::max(a, b)});
  return from_edges(n, edges);
}

Graph Graph::edgeless(int n) { return from_adjacency(std::vector<VertexSet>(n, 0)); }

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
  Graph g;
  g.n_ = static_cast<int>(adj.size());
  int twice = 0;
  for (auto a : adj) twice += popcount(a);
  g.m_ = twice / 2;
  g.adj_ = std::move(adj);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (VertexSet s = adj_[u] & ~first_n(u + 1); s; s &= s - 1) out.push_back(Edge{u, lowest(s)});
  }
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw Error(ErrorCode::InvalidVertex, "label count does not match vertex count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = ~g.neighbors(v) & first_n(n) & ~bit(v);
  return Graph::from_adjacency(std::move(adj));
}

Subgraph induced_subgraph(const Graph& g, VertexSet w) {
  if (w & ~g.vertices()) throw Error(ErrorCode::InvalidVertex, "subset exceeds vertex set");
  Subgraph out;
  out.source = members(w);
  const int k = static_cast<int>(out.source.size());
  std::vector<VertexSet> adj(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(out.source[i], out.source[j])) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : out.source) labels.push_back(g.labels()[v]);
    out.graph = out.graph.with_labels(std::move(labels));
  }
  return out;
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (e.u < 0 || e.v >= g.order() || !g.has_edge(e)) {
    throw Error(ErrorCode::InvalidSurgery, "edge not present");
  }
  auto adj = g.adjacency();
  adj[e.u] &= ~bit(e.v);
  adj[e.v] &= ~bit(e.u);
  return Graph::from_adjacency(std::move(adj)).with_labels(g.labels());
}

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorCode::InvalidSurgery, "no vertex " + std::to_string(v));
}

void require_edge(const Graph& g, const Edge& e) {
  require_vertex(g, e.u);
  require_vertex(g, e.v);
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::InvalidSurgery,
                "no edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  }
}

}  // namespace

Subgraph apply_surgery(const Graph& g, const Surgery& s) {
  return std::visit(
      [&](const auto& op) -> Subgraph {
        using Op = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<Op, DeleteVertex>) {
          require_vertex(g, op.v);
          return induced_subgraph(g, g.vertices() & ~bit(op.v));
        } else if constexpr (std::is_same_v<Op, CloseVertex>) {
          require_vertex(g, op.v);
          return induced_subgraph(g, g.vertices() & ~g.closed_neighborhood(op.v));
        } else if constexpr (std::is_same_v<Op, DeleteEdge>) {
          require_edge(g, op.e);
          Subgraph out{delete_edge(g, op.e), {}};
          out.source.resize(g.order());
          std::iota(out.source.begin(), out.source.end(), 0);
          return out;
        } else {
          require_edge(g, op.e);
          VertexSet gone = g.closed_neighborhood(op.e.u) | g.closed_neighborhood(op.e.v);
          return induced_subgraph(g, g.vertices() & ~gone);
        }
      },
      s);
}

std::vector<Subgraph> components(const Graph& g) {
  std::vector<Subgraph> out;
  VertexSet remaining = g.vertices();
  while (remaining) {
    VertexSet comp = bit(lowest(remaining));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(induced_subgraph(g, comp));
    remaining &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  if (na + b.order() > kMaxVertices) throw Error(ErrorCode::TooLarge, "union exceeds 64 vertices");
  std::vector<VertexSet> adj = a.adjacency();
  for (Vertex v = 0; v < b.order(); ++v) adj.push_back(b.neighbors(v) << na);
  return Graph::from_adjacency(std::move(adj));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorCode::InvalidVertex, "permutation size");
  VertexSet image = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || (image & bit(p))) throw Error(ErrorCode::InvalidVertex, "not a permutation");
    image |= bit(p);
  }
  std::vector<VertexSet> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) adj[perm[v]] |= bit(perm[lowest(s)]);
  }
  return Graph::from_adjacency(std::move(adj));
}

namespace detail {

std::string pack_graph6(int n, const std::vector<bool>& bits) {
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int chunk = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      chunk <<= 1;
      if (i + j < bits.size() && bits[i + j]) chunk |= 1;
    }
    out.push_back(static_cast<char>(chunk + 63));
  }
  return out;
}

}  // namespace detail

namespace {

// Branch-and-bound over vertex placements. Column k of the upper triangle is
// fixed once positions 0..k are filled, so a prefix that already compares
// greater than the best string is cut. Twins (N(u)-w == N(w)-u) are
// interchangeable by an automorphism fixing the placed prefix, so only one of
// them is tried at each position.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.order()), perm_(n_), cur_(n_, 0), best_(n_, 0), best_perm_(n_) {}

  std::string run() {
    if (n_ > 0) dfs(0, 0);
    std::vector<bool> bits;
    for (int k = 1; k < n_; ++k) {
      for (int i = k - 1; i >= 0; --i) bits.push_back((best_[k] >> i) & 1U);
    }
    return detail::pack_graph6(n_, bits);
  }

 private:
  bool twins(Vertex u, Vertex w) const {
    return (g_.neighbors(u) & ~bit(w)) == (g_.neighbors(w) & ~bit(u));
  }

  // <0, 0, >0 comparing cur_[1..k] against best_[1..k].
  int compare_prefix(int k) const {
    for (int i = 1; i <= k; ++i) {
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void dfs(int k, VertexSet used) {
    if (k == n_) {
      if (!have_best_ || compare_prefix(n_ - 1) < 0) {
        best_ = cur_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    std::vector<Vertex> tried;
    for (VertexSet s = g_.vertices() & ~used; s; s &= s - 1) {
      const Vertex v = lowest(s);
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::uint64_t word = 0;
      for (int i = 0; i < k; ++i) word = (word << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
      cur_[k] = word;
      perm_[k] = v;
      if (have_best_ && compare_prefix(k) > 0) continue;
      dfs(k + 1, used | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> perm_;
  std::vector<std::uint64_t> cur_;
  std::vector<std::uint64_t> best_;
  std::vector<Vertex> best_perm_;
  bool have_best_ = false;
};

bool five_cycle_from(const Graph& g, Vertex start, Vertex at, int depth, VertexSet used) {
  if (depth == 4) return g.adjacent(at, start);
  VertexSet next = g.neighbors(at) & ~used & ~first_n(start + 1);
  for (; next; next &= next - 1) {
    Vertex v = lowest(next);
    if (five_cycle_from(g, start, v, depth + 1, used | bit(v))) return true;
  }
  return false;
}

}  // namespace

std::string canonical_form(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw Error(ErrorCode::TooLarge, "canonical form limited to " + std::to_string(limit) + " vertices");
  }
  return CanonicalSearch(g).run();
}

bool contains_five_cycle(const Graph& g) {
  for (Vertex s = 0; s < g.order(); ++s) {
    if (five_cycle_from(g, s, s, 0, bit(s))) return true;
  }
  return false;
}

}  // namespace eilab
