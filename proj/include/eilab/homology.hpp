#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "eilab/graph.hpp"

namespace eilab {

/// Coefficient field: characteristic 0 (the rationals) or a prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws NotApplicable unless p == 0 or p is prime.
  explicit FieldSpec(int characteristic);

  static FieldSpec rationals() { return FieldSpec(0); }

  int characteristic() const { return p_; }
  bool operator==(const FieldSpec&) const = default;

 private:
  int p_ = 0;
};

/// Downward-closed family given by its facets. An empty facet list (or the
/// single empty facet) is the complex whose only face is the empty set.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<VertexSet> facets;
};

/// Faces grouped by size: faces[k] holds the faces with k vertices
/// (dimension k-1), each group sorted ascending.
struct FaceLattice {
  std::vector<std::vector<VertexSet>> faces;

  int dimension() const { return static_cast<int>(faces.size()) - 2; }
  std::size_t count(int dim) const {
    const int k = dim + 1;
    return k >= 0 && k < static_cast<int>(faces.size()) ? faces[k].size() : 0;
  }
};

/// Facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

FaceLattice face_lattice(const SimplicialComplex& c);
/// Faces of Ind(g[within]), i.e. the independent subsets of `within`.
FaceLattice independent_set_lattice(const Graph& g, VertexSet within);

/// Counts of independent subsets of `within` by size, via the vertex
/// recursion i(G) = i(G - v) + x i(G - N[v]); shares no code with the face
/// enumeration.
std::vector<std::int64_t> independent_set_census(const Graph& g, VertexSet within);

/// Rank of the boundary map from dim-faces to (dim-1)-faces, dim >= 0.
/// Zero when either side is empty.
std::size_t boundary_rank(const FaceLattice& lattice, int dim, const FieldSpec& field);

/// dims[t + 1] = dim of reduced homology in degree t, for t = -1..dimension.
std::vector<std::int64_t> reduced_homology(const FaceLattice& lattice, const FieldSpec& field);
std::map<int, std::int64_t> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field);

/// Reduced Euler characteristic sum_k (-1)^(k-1) counts[k].
std::int64_t reduced_euler_characteristic(const std::vector<std::int64_t>& face_counts);

namespace detail {
/// Sparse integer matrix in row form: row i lists (column, +-1) pairs.
struct SparseSignMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> rows;
};
SparseSignMatrix boundary_matrix(const FaceLattice& lattice, int dim);
std::size_t rank_rational(const SparseSignMatrix& m);
std::size_t rank_mod_p(const SparseSignMatrix& m, std::uint32_t p);
/// Exact rational rank via GMP only; the reference for the int64 fast path.
std::size_t rank_rational_gmp(const SparseSignMatrix& m);
}  // namespace detail

}  // namespace eilab
