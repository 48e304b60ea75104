#include "eilab/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

namespace eilab {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(int characteristic) : p_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw Error(ErrorCode::NotApplicable, "characteristic " + std::to_string(characteristic) +
                                              " is neither 0 nor prime");
  }
}

namespace {

// Bron-Kerbosch with pivoting on the complement: maximal cliques of g^c are
// the maximal independent sets of g.
void maximal_independent(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const VertexSet all = g.vertices();
  auto non_nbrs = [&](Vertex v) { return all & ~g.closed_neighborhood(v); };
  Vertex pivot = lowest(p | x);
  int best = -1;
  for (VertexSet s = p | x; s; s &= s - 1) {
    const int c = popcount(p & non_nbrs(lowest(s)));
    if (c > best) {
      best = c;
      pivot = lowest(s);
    }
  }
  for (VertexSet s = p & ~non_nbrs(pivot); s; s &= s - 1) {
    const Vertex v = lowest(s);
    maximal_independent(g, r | bit(v), p & non_nbrs(v), x & non_nbrs(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

void collect_independent(const Graph& g, VertexSet cand, VertexSet cur, std::vector<std::vector<VertexSet>>& out) {
  const int k = popcount(cur);
  if (static_cast<int>(out.size()) <= k) out.resize(k + 1);
  out[k].push_back(cur);
  for (VertexSet s = cand; s; s &= s - 1) {
    const Vertex v = lowest(s);
    collect_independent(g, (s & (s - 1)) & ~g.neighbors(v), cur | bit(v), out);
  }
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
  SimplicialComplex c;
  c.vertex_count = g.order();
  maximal_independent(g, 0, g.vertices(), 0, c.facets);
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

FaceLattice face_lattice(const SimplicialComplex& c) {
  FaceLattice out;
  out.faces.resize(1);
  out.faces[0].push_back(0);
  for (VertexSet facet : c.facets) {
    // Every subset of the facet, including itself.
    for (VertexSet sub = facet;; sub = (sub - 1) & facet) {
      const int k = popcount(sub);
      if (static_cast<int>(out.faces.size()) <= k) out.faces.resize(k + 1);
      if (k > 0) out.faces[k].push_back(sub);
      if (sub == 0) break;
    }
  }
  for (auto& group : out.faces) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
  return out;
}

FaceLattice independent_set_lattice(const Graph& g, VertexSet within) {
  FaceLattice out;
  collect_independent(g, within, 0, out.faces);
  for (auto& group : out.faces) std::sort(group.begin(), group.end());
  return out;
}

std::vector<std::int64_t> independent_set_census(const Graph& g, VertexSet within) {
  if (within == 0) return {1};
  Vertex v = lowest(within);
  int deg = -1;
  for (VertexSet s = within; s; s &= s - 1) {
    const int d = popcount(g.neighbors(lowest(s)) & within);
    if (d > deg) {
      deg = d;
      v = lowest(s);
    }
  }
  auto without = independent_set_census(g, within & ~bit(v));
  auto closed = independent_set_census(g, within & ~g.closed_neighborhood(v));
  std::vector<std::int64_t> out(std::max(without.size(), closed.size() + 1), 0);
  for (std::size_t i = 0; i < without.size(); ++i) out[i] += without[i];
  for (std::size_t i = 0; i < closed.size(); ++i) out[i + 1] += closed[i];
  return out;
}

std::int64_t reduced_euler_characteristic(const std::vector<std::int64_t>& face_counts) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < face_counts.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * face_counts[k];
  return chi;
}

namespace detail {

SparseSignMatrix boundary_matrix(const FaceLattice& lattice, int dim) {
  SparseSignMatrix m;
  const int k = dim + 1;
  if (dim < 0 || k >= static_cast<int>(lattice.faces.size())) return m;
  const auto& lower = lattice.faces[k - 1];
  m.cols = lower.size();
  m.rows.reserve(lattice.faces[k].size());
  for (VertexSet face : lattice.faces[k]) {
    std::vector<std::pair<std::uint32_t, std::int8_t>> row;
    row.reserve(k);
    int i = 0;
    for (VertexSet s = face; s; s &= s - 1, ++i) {
      const VertexSet facet = face & ~(s & (~s + 1));
      const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      row.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), i % 2 == 0 ? 1 : -1);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

struct Overflow {};

inline std::int64_t checked_mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t ab, cd, out;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
      __builtin_sub_overflow(ab, cd, &out)) {
    throw Overflow{};
  }
  return out;
}

inline mpz_class checked_mul_sub(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d) {
  return a * b - c * d;
}

inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }
inline mpz_class abs_value(const mpz_class& a) { return abs(a); }
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline mpz_class gcd_of(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }

// Fraction-free Gaussian elimination over the integers: pivot on the entry of
// least absolute value, cross-multiply, then divide each row by its content.
template <class Int>
std::size_t fraction_free_rank(const SparseSignMatrix& m) {
  const std::size_t cols = m.cols;
  std::vector<std::vector<Int>> a(m.rows.size(), std::vector<Int>(cols, Int(0)));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (auto [c, s] : m.rows[r]) a[r][c] = Int(static_cast<int>(s));
  }
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      if (piv == rows || abs_value(a[r][c]) < abs_value(a[piv][c])) piv = r;
      if (abs_value(a[piv][c]) == 1) break;
    }
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    const Int p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Int g = gcd_of(p, a[r][c]);
      const Int mp = p / g;
      const Int mx = a[r][c] / g;
      Int content(0);
      a[r][c] = 0;
      for (std::size_t k = c + 1; k < cols; ++k) {
        if (a[r][k] == 0 && a[rank][k] == 0) continue;
        a[r][k] = checked_mul_sub(mp, a[r][k], mx, a[rank][k]);
        if (a[r][k] != 0) content = gcd_of(content, a[r][k]);
      }
      if (content > 1) {
        for (std::size_t k = c + 1; k < cols; ++k) a[r][k] /= content;
      }
    }
    ++rank;
  }
  return rank;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

std::size_t rank_gf2(const SparseSignMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> a(m.rows.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (auto [c, s] : m.rows[r]) a[r][c / 64] ^= std::uint64_t{1} << (c % 64);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < a.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < a.size() && !(a[piv][w] & mask)) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][w] & mask) {
        for (std::size_t k = w; k < words; ++k) a[r][k] ^= a[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_rational(const SparseSignMatrix& m) {
  try {
    return fraction_free_rank<std::int64_t>(m);
  } catch (const Overflow&) {
    return fraction_free_rank<mpz_class>(m);
  }
}

std::size_t rank_rational_gmp(const SparseSignMatrix& m) { return fraction_free_rank<mpz_class>(m); }

std::size_t rank_mod_p(const SparseSignMatrix& m, std::uint32_t p) {
  if (p == 2) return rank_gf2(m);
  const std::size_t cols = m.cols;
  std::vector<std::vector<std::uint32_t>> a(m.rows.size(), std::vector<std::uint32_t>(cols, 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (auto [c, s] : m.rows[r]) a[r][c] = s > 0 ? 1U : p - 1U;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t factor = a[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) {
        if (a[rank][k] == 0) continue;
        a[r][k] = static_cast<std::uint32_t>((a[r][k] + (p - factor) * a[rank][k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

std::size_t boundary_rank(const FaceLattice& lattice, int dim, const FieldSpec& field) {
  const auto m = detail::boundary_matrix(lattice, dim);
  if (m.rows.empty() || m.cols == 0) return 0;
  return field.characteristic() == 0 ? detail::rank_rational(m)
                                     : detail::rank_mod_p(m, static_cast<std::uint32_t>(field.characteristic()));
}

std::vector<std::int64_t> reduced_homology(const FaceLattice& lattice, const FieldSpec& field) {
  const int top = static_cast<int>(lattice.faces.size()) - 1;
  // rank[k]: boundary from k-vertex faces down to (k-1)-vertex faces.
  std::vector<std::int64_t> rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) rank[k] = static_cast<std::int64_t>(boundary_rank(lattice, k - 1, field));
  std::vector<std::int64_t> dims(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    dims[k] = static_cast<std::int64_t>(lattice.faces[k].size()) - rank[k] - rank[k + 1];
  }
  return dims;
}

std::map<int, std::int64_t> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field) {
  const auto dims = reduced_homology(face_lattice(c), field);
  std::map<int, std::int64_t> out;
  for (std::size_t k = 0; k < dims.size(); ++k) out[static_cast<int>(k) - 1] = dims[k];
  return out;
}

}  // namespace eilab
