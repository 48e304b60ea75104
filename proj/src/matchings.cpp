#include "eilab/matchings.hpp"

#include <algorithm>
#include <deque>

namespace eilab {

const char* to_string(MatchingKind kind) {
  switch (kind) {
    case MatchingKind::Maximum: return "Maximum";
    case MatchingKind::MaximumInduced: return "MaximumInduced";
    case MatchingKind::MinimumMaximal: return "MinimumMaximal";
  }
  return "?";
}

namespace {

// Edmonds' blossom algorithm, BFS formulation with explicit blossom bases.
class Blossom {
 public:
  Blossom(const Graph& g, VertexSet within)
      : n_(g.order()), adj_(g.adjacency()), match_(n_, -1), parent_(n_), base_(n_),
        used_(n_), in_blossom_(n_) {
    for (auto& a : adj_) a &= within;
    for (Vertex v = 0; v < n_; ++v) {
      if (!((within >> v) & 1U)) adj_[v] = 0;
    }
  }

  int solve() {
    int size = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != -1 || adj_[v] == 0) continue;
      Vertex end = find_augmenting_path(v);
      if (end == -1) continue;
      ++size;
      while (end != -1) {
        Vertex pv = parent_[end];
        Vertex ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return size;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (VertexSet s = adj_[v]; s; s &= s - 1) {
        const Vertex to = lowest(s);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<VertexSet> adj_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

void check_caps(const Graph& g, const SearchCaps& caps, const char* what) {
  if (g.order() > caps.max_vertices || g.size() > caps.max_edges || g.size() > 64) {
    throw CapExceeded(std::string(what) + " search refuses n=" + std::to_string(g.order()) +
                      ", |E|=" + std::to_string(g.size()));
  }
}

// Maximum independent set in the edge-conflict graph. Candidates are visited
// in index order, so the first optimum found is the lexicographically
// smallest; later ties never replace it.
class InducedMatchingSearch {
 public:
  explicit InducedMatchingSearch(const Graph& g) : edges_(g.edges()) {
    const int m = static_cast<int>(edges_.size());
    conflict_.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      VertexSet reach = g.closed_neighborhood(edges_[i].u) | g.closed_neighborhood(edges_[i].v);
      for (int j = 0; j < m; ++j) {
        if (edges_[j].ends() & reach) conflict_[i] |= std::uint64_t{1} << j;
      }
    }
  }

  std::vector<Edge> run() {
    const int m = static_cast<int>(edges_.size());
    std::uint64_t all = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    dfs(all, 0);
    std::vector<Edge> out;
    for (int i : best_) out.push_back(edges_[i]);
    return out;
  }

 private:
  void dfs(std::uint64_t cand, int depth) {
    if (depth > static_cast<int>(best_.size())) best_.assign(chosen_.begin(), chosen_.end());
    for (std::uint64_t s = cand; s; s &= s - 1) {
      if (depth + std::popcount(s) <= static_cast<int>(best_.size())) return;
      const int i = std::countr_zero(s);
      chosen_.push_back(i);
      std::uint64_t later = (s & (s - 1));
      dfs(later & ~conflict_[i], depth + 1);
      chosen_.pop_back();
    }
  }

  std::vector<Edge> edges_;
  std::vector<std::uint64_t> conflict_;
  std::vector<int> chosen_;
  std::vector<int> best_;
};

// Is there a maximal matching of g[within] with at most `budget` edges?
// Any maximal matching must cover the first uncovered edge uv, so branch on
// the edges at u or v.
bool maximal_matching_at_most(const Graph& g, VertexSet within, int budget) {
  Vertex u = -1;
  for (VertexSet s = within; s; s &= s - 1) {
    if (g.neighbors(lowest(s)) & within) {
      u = lowest(s);
      break;
    }
  }
  if (u == -1) return true;
  if (budget == 0) return false;
  const Vertex v = lowest(g.neighbors(u) & within);
  for (Vertex a : {u, v}) {
    for (VertexSet s = g.neighbors(a) & within; s; s &= s - 1) {
      const Vertex b = lowest(s);
      if (a == v && b == u) continue;
      if (maximal_matching_at_most(g, within & ~bit(a) & ~bit(b), budget - 1)) return true;
    }
  }
  return false;
}

int min_maximal_size(const Graph& g, VertexSet within) {
  const int nu = matching_number(g, within);
  for (int k = (nu + 1) / 2; k <= nu; ++k) {
    if (maximal_matching_at_most(g, within, k)) return k;
  }
  return nu;
}

}  // namespace

int matching_number(const Graph& g, VertexSet within) { return Blossom(g, within).solve(); }

MatchingCertificate max_matching(const Graph& g) {
  MatchingCertificate cert{MatchingKind::Maximum, {}, 0};
  const int target = matching_number(g);
  VertexSet avail = g.vertices();
  for (const auto& e : g.edges()) {
    const int need = target - static_cast<int>(cert.edges.size());
    if (need == 0) break;
    if ((e.ends() & avail) != e.ends()) continue;
    if (1 + matching_number(g, avail & ~e.ends()) == need) {
      cert.edges.push_back(e);
      avail &= ~e.ends();
    }
  }
  cert.size = static_cast<int>(cert.edges.size());
  return cert;
}

MatchingCertificate induced_matching_number(const Graph& g, const SearchCaps& caps) {
  check_caps(g, caps, "induced matching");
  MatchingCertificate cert{MatchingKind::MaximumInduced, InducedMatchingSearch(g).run(), 0};
  cert.size = static_cast<int>(cert.edges.size());
  return cert;
}

MatchingCertificate min_maximal_matching(const Graph& g, const SearchCaps& caps) {
  check_caps(g, caps, "minimum maximal matching");
  MatchingCertificate cert{MatchingKind::MinimumMaximal, {}, 0};
  const int target = min_maximal_size(g, g.vertices());
  VertexSet avail = g.vertices();
  for (const auto& e : g.edges()) {
    const int need = target - static_cast<int>(cert.edges.size());
    if (need == 0) break;
    if ((e.ends() & avail) != e.ends()) continue;
    if (maximal_matching_at_most(g, avail & ~e.ends(), need - 1)) {
      cert.edges.push_back(e);
      avail &= ~e.ends();
    }
  }
  cert.size = static_cast<int>(cert.edges.size());
  return cert;
}

std::string validate(const Graph& g, const MatchingCertificate& cert) {
  if (cert.size != static_cast<int>(cert.edges.size())) return "size field disagrees with edge list";
  VertexSet covered = 0;
  for (const auto& e : cert.edges) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e)) return "certificate edge not in graph";
    if (covered & e.ends()) return "certificate edges share a vertex";
    covered |= e.ends();
  }
  if (cert.kind == MatchingKind::MaximumInduced) {
    for (std::size_t i = 0; i < cert.edges.size(); ++i) {
      for (std::size_t j = i + 1; j < cert.edges.size(); ++j) {
        for (Vertex a : {cert.edges[i].u, cert.edges[i].v}) {
          for (Vertex b : {cert.edges[j].u, cert.edges[j].v}) {
            if (g.adjacent(a, b)) return "certificate edges joined by a graph edge";
          }
        }
      }
    }
  }
  if (cert.kind == MatchingKind::MinimumMaximal) {
    for (const auto& e : g.edges()) {
      if (!(e.ends() & covered)) return "matching is not maximal";
    }
  }
  return {};
}

}  // namespace eilab
