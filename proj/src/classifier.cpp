#include "eilab/classifier.hpp"

namespace eilab {

bool pentagon_test(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "pentagon test needs a connected graph");
  if (g.order() != 5 || g.size() != 5) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

StructuralSide classify_structural(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::NotApplicable, "graph has no vertices");
  StructuralSide out;
  out.verdict = true;
  for (auto& part : components(g)) {
    ComponentShape shape;
    shape.vertices = part.source;
    shape.pentagon = pentagon_test(part.graph);
    if (shape.pentagon) {
      shape.cameron_walker.verdict = false;
      shape.cameron_walker.shape = NotCameronWalker{max_matching(part.graph), induced_matching_number(part.graph)};
      shape.description = "Pentagon";
    } else {
      shape.cameron_walker = recognize_structural(part.graph);
      shape.description = describe(shape.cameron_walker.shape);
    }
    out.verdict = out.verdict && (shape.pentagon || shape.cameron_walker.verdict);
    out.components.push_back(std::move(shape));
  }
  return out;
}

ClassificationVerdict classify(const Graph& g, const FieldSpec& field, const RegularityOptions& options) {
  ClassificationVerdict out;
  out.structural = classify_structural(g);
  out.field = field;
  out.maximum = max_matching(g);
  out.regularity = regularity(g, field, options);
  out.numeric = out.regularity.reg_star == out.maximum.size + 1;
  out.agreement = out.numeric == out.structural.verdict;
  return out;
}

}  // namespace eilab
