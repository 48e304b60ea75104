#pragma once

// Small graph families and brute-force oracles shared by the unit tests.
// Nothing here calls into the library's algorithms beyond Graph itself.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "eilab/graph.hpp"

namespace testsupport {

using eilab::Edge;
using eilab::Graph;
using eilab::Vertex;
using eilab::VertexSet;

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(Edge::of(i, (i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back(Edge::of(i, i + 1));
  return Graph::from_edges(n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back(Edge::of(0, i));
  return Graph::from_edges(leaves + 1, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back(Edge::of(i, j));
  return Graph::from_edges(n, e);
}

inline Graph with_edges(int n, std::vector<std::pair<int, int>> pairs) { return Graph::from_pairs(n, pairs); }

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back(Edge::of(i, j));
  return Graph::from_edges(n, e);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.push_back(Edge::of(perm[x.u], perm[x.v]));
  return Graph::from_edges(g.order(), e);
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (permuted(a, p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// ---- matchings by edge-subset enumeration ----

struct BruteMatchings {
  int nu = 0;
  int nu0 = 0;
  int mm = 0;
  std::vector<Edge> nu_cert, nu0_cert, mm_cert;
};

inline BruteMatchings brute_matchings(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  BruteMatchings out;
  out.mm = m + 1;
  auto better = [](std::vector<Edge>& best, const std::vector<Edge>& cand, bool strictly, bool& set) {
    if (strictly || !set || cand < best) {
      best = cand;
      set = true;
    }
  };
  bool s1 = false, s2 = false, s3 = false;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    VertexSet covered = 0;
    bool matching = true;
    std::vector<Edge> chosen;
    for (int i = 0; i < m && matching; ++i) {
      if (!(mask >> i & 1U)) continue;
      if (covered & edges[i].ends()) matching = false;
      covered |= edges[i].ends();
      chosen.push_back(edges[i]);
    }
    if (!matching) continue;
    const int k = static_cast<int>(chosen.size());
    int spanned = 0;
    for (const auto& e : edges) spanned += (e.ends() & covered) == e.ends();
    bool maximal = true;
    for (const auto& e : edges) maximal = maximal && (e.ends() & covered);
    if (k > out.nu) better(out.nu_cert, chosen, true, s1), out.nu = k;
    else if (k == out.nu) better(out.nu_cert, chosen, false, s1);
    if (spanned == k) {
      if (k > out.nu0) better(out.nu0_cert, chosen, true, s2), out.nu0 = k;
      else if (k == out.nu0) better(out.nu0_cert, chosen, false, s2);
    }
    if (maximal) {
      if (k < out.mm) better(out.mm_cert, chosen, true, s3), out.mm = k;
      else if (k == out.mm) better(out.mm_cert, chosen, false, s3);
    }
  }
  return out;
}

// ---- chordality by induced-cycle enumeration ----

inline bool induces_cycle(const Graph& g, VertexSet w) {
  const int k = eilab::popcount(w);
  if (k < 4) return false;
  for (VertexSet s = w; s; s &= s - 1) {
    if (eilab::popcount(g.neighbors(eilab::lowest(s)) & w) != 2) return false;
  }
  // 2-regular and connected means a single cycle.
  VertexSet seen = w & (~w + 1), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(eilab::lowest(s)) & w;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == w;
}

inline bool brute_chordal(const Graph& g) {
  for (VertexSet w = 0; w < (VertexSet{1} << g.order()); ++w) {
    if (induces_cycle(g, w)) return false;
  }
  return true;
}

inline Graph complement_of(const Graph& g) {
  std::vector<Edge> e;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) e.push_back(Edge::of(i, j));
  return Graph::from_edges(g.order(), e);
}

// Minimum number of co-chordal spanning subgraphs covering E(G), by BFS over
// edge masks using every co-chordal edge subset.
inline int brute_cochord(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<std::uint32_t> good;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<Edge> part;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1U) part.push_back(edges[i]);
    if (brute_chordal(complement_of(Graph::from_edges(g.order(), part)))) good.push_back(mask);
  }
  const std::uint32_t full = (1U << m) - 1;
  std::vector<int> dist(full + 1, -1);
  dist[0] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto cur = queue[head];
    if (cur == full) return dist[cur];
    for (auto s : good) {
      const auto nxt = cur | s;
      if (dist[nxt] < 0) {
        dist[nxt] = dist[cur] + 1;
        queue.push_back(nxt);
      }
    }
  }
  return -1;
}

// ---- reduced homology by dense elimination on brute-force faces ----

inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t dense_rank_mod(std::vector<std::vector<long long>> a, long long p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const long long iv = inv(a[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const long long f = a[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// faces[k] = faces with k vertices. Returns dims[t+1] = dim H~_t.
inline std::vector<long long> brute_homology(const std::vector<std::vector<VertexSet>>& faces, int p) {
  const int top = static_cast<int>(faces.size()) - 1;
  // rank of boundary from k-vertex faces to (k-1)-vertex faces
  std::vector<std::size_t> rk(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& hi = faces[k];
    const auto& lo = faces[k - 1];
    if (hi.empty() || lo.empty()) continue;
    std::vector<std::vector<long long>> mat(lo.size(), std::vector<long long>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      int sign = 1;
      for (VertexSet s = hi[j]; s; s &= s - 1) {
        const VertexSet face = hi[j] & ~(s & (~s + 1));
        const auto i = std::lower_bound(lo.begin(), lo.end(), face) - lo.begin();
        mat[i][j] = sign;
        sign = -sign;
      }
    }
    if (p == 0) {
      std::vector<std::vector<mpq_class>> q(mat.size(), std::vector<mpq_class>(hi.size()));
      for (std::size_t r = 0; r < mat.size(); ++r)
        for (std::size_t c = 0; c < hi.size(); ++c) q[r][c] = static_cast<long>(mat[r][c]);
      rk[k] = dense_rank(std::move(q));
    } else {
      rk[k] = dense_rank_mod(std::move(mat), p);
    }
  }
  std::vector<long long> dims(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    dims[k] = static_cast<long long>(faces[k].size()) - static_cast<long long>(rk[k]) -
              static_cast<long long>(k + 1 <= top ? rk[k + 1] : 0);
  }
  return dims;
}

inline std::vector<std::vector<VertexSet>> brute_independent_faces(const Graph& g, VertexSet within) {
  std::vector<std::vector<VertexSet>> faces(eilab::popcount(within) + 1);
  for (VertexSet s = within;; s = (s - 1) & within) {
    bool independent = true;
    for (VertexSet t = s; t && independent; t &= t - 1) independent = !(g.neighbors(eilab::lowest(t)) & s);
    if (independent) faces[eilab::popcount(s)].push_back(s);
    if (s == 0) break;
  }
  while (faces.size() > 1 && faces.back().empty()) faces.pop_back();
  for (auto& f : faces) std::sort(f.begin(), f.end());
  return faces;
}

// reg I(G) by Hochster with no pruning; 1 for edgeless, 0 for the empty graph.
inline int brute_reg(const Graph& g, int p) {
  if (g.order() == 0) return 0;
  if (g.size() == 0) return 1;
  int best = -1;
  for (VertexSet w = 1; w < (VertexSet{1} << g.order()); ++w) {
    const auto dims = brute_homology(brute_independent_faces(g, w), p);
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      if (dims[k] != 0) {
        best = std::max(best, k - 1);
        break;
      }
    }
  }
  return best + 2;
}

}  // namespace testsupport
