#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "eilab/error.hpp"

namespace eilab {

using Vertex = int;
// Bit v is set iff vertex v belongs to the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : (bit(n) - 1); }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<Vertex> members(VertexSet s);

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  VertexSet ends() const { return bit(u) | bit(v); }

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple graph on the dense vertex range 0..n-1.
///
/// Adjacency is held as one neighbour bitset per vertex, so graphs are
/// limited to 64 vertices. Optional labels are carried as metadata and never
/// affect equality.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidVertex for an endpoint >= n and SelfLoopRejected for (v,v).
  /// Duplicate pairs collapse.
  static Graph from_edges(int n, const std::vector<Edge>& edges);
  static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static Graph edgeless(int n);
  /// Trusted constructor for already-symmetric adjacency.
  static Graph from_adjacency(std::vector<VertexSet> adj);

  int order() const { return n_; }
  int size() const { return m_; }
  bool empty() const { return n_ == 0; }
  bool edgeless() const { return m_ == 0; }

  VertexSet vertices() const { return first_n(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighborhood(Vertex v) const { return adj_[v] | bit(v); }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
  const std::vector<VertexSet>& adjacency() const { return adj_; }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

struct DeleteVertex {
  Vertex v;
};
/// G_v: remove the closed neighbourhood N[v].
struct CloseVertex {
  Vertex v;
};
/// G \ e: drop the edge, keep both endpoints.
struct DeleteEdge {
  Edge e;
};
/// G_e: remove N[u] and N[v].
struct CloseEdge {
  Edge e;
};
using Surgery = std::variant<DeleteVertex, CloseVertex, DeleteEdge, CloseEdge>;

/// A graph derived from a parent, with source[i] naming the parent vertex
/// that became vertex i.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> source;
};

Graph complement(const Graph& g);
Subgraph induced_subgraph(const Graph& g, VertexSet w);
Subgraph apply_surgery(const Graph& g, const Surgery& s);
Graph delete_edge(const Graph& g, const Edge& e);

/// Connected components in order of their smallest vertex.
std::vector<Subgraph> components(const Graph& g);
bool is_connected(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
/// perm[v] is the new name of vertex v.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

/// Isomorphism-invariant byte string: the graph6 encoding of the relabelling
/// whose upper-triangle bit string (graph6 column order) is lexicographically
/// minimal over all vertex permutations. Throws TooLarge above `limit`.
std::string canonical_form(const Graph& g, int limit = 10);

/// True iff g contains a 5-cycle as a (not necessarily induced) subgraph.
bool contains_five_cycle(const Graph& g);

namespace detail {
/// Packs upper-triangle bits in graph6 column order into graph6 text.
std::string pack_graph6(int n, const std::vector<bool>& bits);
}  // namespace detail

}  // namespace eilab
