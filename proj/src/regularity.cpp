#include "eilab/regularity.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <exception>
#include <limits>

namespace eilab {

namespace {

constexpr int kSubsetTableMax = 20;

bool lex_less_same_size(VertexSet a, VertexSet b) {
  if (a == b) return false;
  return (a & ((a ^ b) & (~(a ^ b) + 1))) != 0;
}

void check_cap(const Graph& g, int max_vertices) {
  if (g.order() > max_vertices || g.order() > kSubsetTableMax) {
    throw CapExceeded("regularity sweep refuses n=" + std::to_string(g.order()) + " (cap " +
                      std::to_string(std::min(max_vertices, kSubsetTableMax)) + ")");
  }
}

bool has_isolated_vertex(const Graph& g, VertexSet w) {
  for (VertexSet s = w; s; s &= s - 1) {
    if ((g.neighbors(lowest(s)) & w) == 0) return true;
  }
  return false;
}

constexpr int kNone = std::numeric_limits<int>::min();

void check_euler(const Graph& g, VertexSet w, const FaceLattice& lattice, const std::vector<std::int64_t>& dims) {
  const auto census = independent_set_census(g, w);
  std::int64_t alternating = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) alternating += (k % 2 == 1 ? 1 : -1) * dims[k];
  bool counts_agree = census.size() == lattice.faces.size();
  for (std::size_t k = 0; counts_agree && k < census.size(); ++k) {
    counts_agree = census[k] == static_cast<std::int64_t>(lattice.faces[k].size());
  }
  const bool nonnegative = std::all_of(dims.begin(), dims.end(), [](std::int64_t d) { return d >= 0; });
  if (!counts_agree || !nonnegative || alternating != reduced_euler_characteristic(census)) {
    throw Error(ErrorCode::InternalInconsistency,
                "Euler characteristic check failed on subset " + std::to_string(w));
  }
}

// Highest degree t > floor with nonzero reduced homology of Ind(g[w]), or
// kNone. Works downward from the top dimension so the search stops at the
// first nonzero group.
int top_degree_above(const Graph& g, VertexSet w, const FieldSpec& field, int floor, bool self_check) {
  if (has_isolated_vertex(g, w)) return kNone;
  const FaceLattice lattice = independent_set_lattice(g, w);
  if (self_check) {
    const auto dims = reduced_homology(lattice, field);
    check_euler(g, w, lattice, dims);
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      if (dims[k] > 0) return k - 1 > floor ? k - 1 : kNone;
    }
    return kNone;
  }
  const int dim = lattice.dimension();
  std::int64_t rank_above = 0;
  for (int t = dim; t > floor; --t) {
    const auto r = static_cast<std::int64_t>(boundary_rank(lattice, t, field));
    if (static_cast<std::int64_t>(lattice.count(t)) - r - rank_above > 0) return t;
    rank_above = r;
  }
  return kNone;
}

}  // namespace

const std::vector<VertexSet>& subsets_by_size_then_lex(int n) {
  static const std::array<std::vector<VertexSet>, kSubsetTableMax + 1> tables = [] {
    std::array<std::vector<VertexSet>, kSubsetTableMax + 1> out;
    for (int k = 0; k <= kSubsetTableMax; ++k) {
      auto& v = out[k];
      v.resize(std::size_t{1} << k);
      for (std::size_t s = 0; s < v.size(); ++s) v[s] = s;
      std::stable_sort(v.begin(), v.end(), [](VertexSet a, VertexSet b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return lex_less_same_size(a, b);
      });
    }
    return out;
  }();
  if (n < 0 || n > kSubsetTableMax) throw Error(ErrorCode::TooLarge, "subset table limited to 20");
  return tables[n];
}

RegularityResult regularity(const Graph& g, const FieldSpec& field, const RegularityOptions& options) {
  check_cap(g, options.max_vertices);
  RegularityResult out;
  out.field = field;
  if (g.edgeless()) {
    out.reg_star = g.empty() ? 0 : 1;
    return out;
  }
  const auto& order = subsets_by_size_then_lex(g.order());
  const int n = g.order();
  int best_t = -1;
  std::size_t best_index = 0;
  std::exception_ptr failure;

  std::size_t begin = 0;
  for (int k = 0; k <= n; ++k) {
    std::size_t end = begin;
    while (end < order.size() && popcount(order[end]) == k) ++end;
    // Without isolated vertices an independent set of a k-subset has at most
    // k-1 vertices, so the complex has dimension at most k-2.
    const bool hopeless = k < 2 || (!options.self_check && k - 2 <= best_t);
    if (!hopeless) {
      int class_t = kNone;
      std::size_t class_index = end;
      const int floor = options.self_check ? -1 : best_t;
#pragma omp parallel
      {
        int local_t = floor;
        std::size_t local_index = end;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::size_t i = begin; i < end; ++i) {
          try {
            const int t = top_degree_above(g, order[i], field, options.self_check ? -1 : local_t,
                                           options.self_check);
            if (t != kNone && t > local_t) {
              local_t = t;
              local_index = i;
            }
          } catch (...) {
#pragma omp critical(eilab_regularity_error)
            if (!failure) failure = std::current_exception();
          }
        }
#pragma omp critical(eilab_regularity_reduce)
        if (local_index != end && (local_t > class_t || (local_t == class_t && local_index < class_index))) {
          class_t = local_t;
          class_index = local_index;
        }
      }
      if (failure) std::rethrow_exception(failure);
      if (class_index != end && class_t > best_t) {
        best_t = class_t;
        best_index = class_index;
      }
    }
    begin = end;
  }
  out.reg_ideal = best_t + 2;
  out.reg_star = best_t + 2;
  out.witness = RegularityWitness{order[best_index], best_t};
  return out;
}

int reg_recursive(const Graph& g, const FieldSpec& field, const RegularityOptions& options) {
  return g.empty() ? 1 : regularity(g, field, options).reg_star;
}

std::int64_t BettiTable::quotient_betti(int i, int j) const {
  auto it = quotient.find({i, j});
  return it == quotient.end() ? 0 : it->second;
}

int BettiTable::max_ideal_shift() const {
  int best = 0;
  for (const auto& [ij, value] : quotient) {
    if (ij.first >= 1 && value > 0) best = std::max(best, ij.second - ij.first + 1);
  }
  return best;
}

BettiTable betti_table(const Graph& g, const FieldSpec& field, const RegularityOptions& options) {
  check_cap(g, options.max_vertices);
  if (g.edgeless()) throw Error(ErrorCode::NotApplicable, "Betti table needs at least one edge");
  BettiTable table;
  table.field = field;
  table.quotient[{0, 0}] = 1;
  const auto& order = subsets_by_size_then_lex(g.order());
  std::exception_ptr failure;
#pragma omp parallel
  {
    std::map<std::pair<int, int>, std::int64_t> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::size_t i = 1; i < order.size(); ++i) {
      const VertexSet w = order[i];
      if (has_isolated_vertex(g, w)) continue;
      try {
        const FaceLattice lattice = independent_set_lattice(g, w);
        const auto dims = reduced_homology(lattice, field);
        if (options.self_check) check_euler(g, w, lattice, dims);
        const int j = popcount(w);
        for (std::size_t k = 0; k < dims.size(); ++k) {
          if (dims[k] == 0) continue;
          const int t = static_cast<int>(k) - 1;
          local[{j - t - 1, j}] += dims[k];
        }
      } catch (...) {
#pragma omp critical(eilab_betti_error)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(eilab_betti_merge)
    for (const auto& [ij, value] : local) table.quotient[ij] += value;
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

std::string validate(const Graph& g, const RegularityResult& r) {
  if (g.edgeless()) {
    if (r.reg_star != (g.empty() ? 0 : 1)) return "edgeless convention violated";
    if (r.witness || r.reg_ideal) return "edgeless graph with a witness";
    return {};
  }
  if (!r.witness || !r.reg_ideal) return "missing witness";
  if (*r.reg_ideal != r.reg_star) return "reg_ideal and reg_star differ";
  const auto& w = *r.witness;
  if (w.subset & ~g.vertices()) return "witness subset outside the graph";
  if (w.degree + 2 != r.reg_star) return "witness degree does not give the regularity";
  const auto dims = reduced_homology(independent_set_lattice(g, w.subset), r.field);
  const int k = w.degree + 1;
  if (k < 0 || k >= static_cast<int>(dims.size()) || dims[k] <= 0) return "witness homology vanishes";
  return {};
}

}  // namespace eilab
