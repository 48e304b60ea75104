#pragma once

#include <string>
#include <vector>

#include "eilab/graph.hpp"

namespace eilab {

enum class MatchingKind { Maximum, MaximumInduced, MinimumMaximal };

const char* to_string(MatchingKind kind);

/// An explicit edge set witnessing nu, nu0 or mm. Among optimal edge sets the
/// lexicographically smallest sorted edge list is reported.
struct MatchingCertificate {
  MatchingKind kind = MatchingKind::Maximum;
  std::vector<Edge> edges;
  int size = 0;
};

/// Limits for the exhaustive searches; beyond them the operations throw
/// CapExceeded instead of approximating.
struct SearchCaps {
  int max_vertices = 24;
  int max_edges = 60;
};

MatchingCertificate max_matching(const Graph& g);
MatchingCertificate induced_matching_number(const Graph& g, const SearchCaps& caps = {});
MatchingCertificate min_maximal_matching(const Graph& g, const SearchCaps& caps = {});

/// Size of a maximum matching of g restricted to the vertex set `within`.
int matching_number(const Graph& g, VertexSet within);
inline int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

/// Structural check of a certificate against g, independent of how it was
/// found: edges exist and are disjoint, plus the induced or maximal condition
/// for those kinds. Optimality is not checked. Returns an empty string when
/// valid, otherwise the first problem found.
std::string validate(const Graph& g, const MatchingCertificate& cert);

}  // namespace eilab
