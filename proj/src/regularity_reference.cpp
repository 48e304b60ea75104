#include "eilab/regularity.hpp"

namespace eilab {

RegularityResult regularity_reference(const Graph& g, const FieldSpec& field, int max_vertices) {
  if (g.order() > max_vertices) {
    throw CapExceeded("reference sweep refuses n=" + std::to_string(g.order()));
  }
  RegularityResult out;
  out.field = field;
  if (g.empty()) return out;
  int best_t = -2;
  VertexSet best_w = 0;
  for (VertexSet w : subsets_by_size_then_lex(g.order())) {
    const auto dims = reduced_homology(independent_set_lattice(g, w), field);
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      if (dims[k] == 0) continue;
      if (k - 1 > best_t) {
        best_t = k - 1;
        best_w = w;
      }
      break;
    }
  }
  // Only the empty subset contributes when there are no edges.
  if (best_t < 0) {
    out.reg_star = 1;
    return out;
  }
  out.reg_star = best_t + 2;
  out.reg_ideal = best_t + 2;
  out.witness = RegularityWitness{best_w, best_t};
  return out;
}

}  // namespace eilab
