#pragma once

#include <string>
#include <vector>

#include "eilab/cameron_walker.hpp"
#include "eilab/graph.hpp"
#include "eilab/homology.hpp"
#include "eilab/matchings.hpp"
#include "eilab/regularity.hpp"

namespace eilab {

struct ComponentShape {
  std::vector<Vertex> vertices;  // in the host graph
  bool pentagon = false;
  CWDecomposition cameron_walker;
  std::string description;
};

struct StructuralSide {
  bool verdict = false;  // every component is C5 or Cameron-Walker
  std::vector<ComponentShape> components;
};

struct ClassificationVerdict {
  StructuralSide structural;
  bool numeric = false;  // reg_star == nu + 1
  FieldSpec field;
  RegularityResult regularity;
  MatchingCertificate maximum;
  bool agreement = false;
};

/// Field-free side: components, the exact pentagon test and the structural
/// Cameron-Walker recognizer. Throws NotApplicable on the graph with no
/// vertices.
StructuralSide classify_structural(const Graph& g);

/// Both sides of the equivalence, computed independently. Throws
/// NotApplicable on the graph with no vertices; CapExceeded from the oracle
/// propagates (classify_structural still answers for such graphs).
ClassificationVerdict classify(const Graph& g, const FieldSpec& field, const RegularityOptions& options = {});

/// Exactly 5 vertices, 5 edges, 2-regular. Throws NotConnected on a
/// disconnected graph.
bool pentagon_test(const Graph& g);

}  // namespace eilab
