#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eilab/graph.hpp"
#include "eilab/homology.hpp"

namespace eilab {

/// A vertex subset W and homology degree t with H_t(Ind(G[W])) != 0 and
/// reg I(G) = t + 2.
struct RegularityWitness {
  VertexSet subset = 0;
  int degree = -1;
};

/// reg_star follows the total convention: 0 for the graph on no vertices, 1
/// for an edgeless graph, reg I(G) otherwise. reg_ideal is set only when the
/// graph has an edge, and then equals reg_star.
struct RegularityResult {
  int reg_star = 0;
  std::optional<int> reg_ideal;
  FieldSpec field;
  std::optional<RegularityWitness> witness;
};

struct RegularityOptions {
  int max_vertices = 16;
  /// Evaluate every non-cone subcomplex in full and compare its Euler
  /// characteristic with an independent face census; throws
  /// InternalInconsistency on mismatch.
  bool self_check = false;
};

/// Hochster sweep, reg I(G) = 2 + max{t : H_t(Ind(G[W])) != 0}. Subsets are
/// visited by size then lexicographically; each size class is swept in
/// parallel with OpenMP. Subsets whose induced graph has an isolated vertex are
/// cones and are skipped, as are subsets whose complex has dimension no larger
/// than the best degree found so far. Throws CapExceeded above max_vertices.
RegularityResult regularity(const Graph& g, const FieldSpec& field, const RegularityOptions& options = {});

/// reg(R/I(G)) + 1. Equal to reg_star except on the graph with no vertices,
/// where it is 1 rather than 0; the deletion and link recursions hold for
/// this value only.
int reg_recursive(const Graph& g, const FieldSpec& field, const RegularityOptions& options = {});

/// Serial reference: full homology of every induced subcomplex, no pruning.
RegularityResult regularity_reference(const Graph& g, const FieldSpec& field, int max_vertices = 16);

/// Graded Betti numbers of R/I(G), beta_{i,j} = sum_{|W|=j} dim H_{j-i-1}(Ind(G[W])).
struct BettiTable {
  FieldSpec field;
  std::map<std::pair<int, int>, std::int64_t> quotient;

  std::int64_t quotient_betti(int i, int j) const;
  /// beta_{i,j}(I(G)) = beta_{i+1,j}(R/I(G)).
  std::int64_t ideal_betti(int i, int j) const { return quotient_betti(i + 1, j); }
  /// max{j - i : beta_{i,j}(I(G)) != 0}, which is reg I(G); 0 when I = 0.
  int max_ideal_shift() const;
};

/// Throws NotApplicable on an edgeless graph, CapExceeded above max_vertices.
BettiTable betti_table(const Graph& g, const FieldSpec& field, const RegularityOptions& options = {});

/// Re-checks the witness against g from scratch. Empty when valid.
std::string validate(const Graph& g, const RegularityResult& r);

/// All subsets of an n-set ordered by size, then lexicographically by sorted
/// member list. Cached per n.
const std::vector<VertexSet>& subsets_by_size_then_lex(int n);

}  // namespace eilab
