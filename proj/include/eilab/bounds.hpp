#pragma once

#include <string>
#include <vector>

#include "eilab/graph.hpp"

namespace eilab {

enum class BoundRule { Katzman, HaVanTuyl, Woodroofe, MMBound, Froberg, CompSplit, FL2, FL3 };
const char* to_string(BoundRule rule);

/// One tightening step: the rule, the subgraph it was applied to, and the
/// interval in force after the step.
struct BoundStep {
  BoundRule rule = BoundRule::Katzman;
  std::string subgraph;
  int lo = 0;
  int hi = 0;
};

struct BoundsInterval {
  int lo = 0;
  int hi = 0;
  std::vector<BoundStep> trace;
  /// Set when refine_bounds ran out of budget before finishing.
  bool budget_exhausted = false;

  bool exact() const { return lo == hi; }
  bool contains(int value) const { return lo <= value && value <= hi; }
};

/// Interval for reg I(G) from matching numbers and co-chordality alone:
/// lo = nu0 + 1 (raised to 3 when G is not co-chordal), hi = min(nu + 1,
/// mm + 1, cochord + 1); co-chordal graphs get [2, 2]. The cochord term is
/// dropped when the cover search refuses the graph. Throws NotApplicable on
/// an edgeless graph.
BoundsInterval static_bounds(const Graph& g);

/// Recursive tightening of static_bounds by component splitting, the vertex
/// recursion reg in {reg(G\x), reg(G_x)+1} (as the hull of the two branch
/// intervals) and the edge recursion reg <= max(reg(G\e), reg(G_e)+1).
/// Subresults are memoized on canonical form for graphs of order <= 10.
/// budget caps the number of recursion nodes; on exhaustion the best
/// interval so far is returned with budget_exhausted set. Never widens the
/// static interval. Throws NotApplicable on an edgeless graph.
BoundsInterval refine_bounds(const Graph& g, int budget = 20000);

}  // namespace eilab
