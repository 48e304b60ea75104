#include "eilab/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "eilab/chordality.hpp"
#include "eilab/formats.hpp"
#include "eilab/matchings.hpp"

namespace eilab {

const char* to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::Katzman: return "Katzman";
    case BoundRule::HaVanTuyl: return "HaVanTuyl";
    case BoundRule::Woodroofe: return "Woodroofe";
    case BoundRule::MMBound: return "MMBound";
    case BoundRule::Froberg: return "Froberg";
    case BoundRule::CompSplit: return "CompSplit";
    case BoundRule::FL2: return "FL2";
    case BoundRule::FL3: return "FL3";
  }
  return "?";
}

BoundsInterval static_bounds(const Graph& g) {
  if (g.edgeless()) throw Error(ErrorCode::NotApplicable, "bounds need at least one edge");
  BoundsInterval out;
  auto step = [&](BoundRule rule) { out.trace.push_back({rule, "G", out.lo, out.hi}); };

  out.lo = 2;
  out.hi = max_matching(g).size + 1;
  step(BoundRule::HaVanTuyl);
  out.lo = std::max(out.lo, induced_matching_number(g).size + 1);
  step(BoundRule::Katzman);
  out.hi = std::min(out.hi, min_maximal_matching(g).size + 1);
  step(BoundRule::MMBound);
  try {
    out.hi = std::min(out.hi, cochord_number(g).k + 1);
    step(BoundRule::Woodroofe);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded && e.code() != ErrorCode::TooLarge) throw;
  }
  if (froberg_reg_two(g)) {
    out.lo = 2;
    out.hi = 2;
  } else {
    out.lo = std::max(out.lo, 3);
  }
  step(BoundRule::Froberg);
  if (out.lo > out.hi) {
    throw Error(ErrorCode::InternalInconsistency, "static bounds crossed: [" + std::to_string(out.lo) + "," +
                                                      std::to_string(out.hi) + "]");
  }
  return out;
}

namespace {

struct Range {
  int lo;
  int hi;
};

std::string vertex_tag(const char* op, Vertex x) { return std::string("G") + op + "x" + std::to_string(x); }
std::string edge_tag(const char* op, const Edge& e) {
  return std::string("G") + op + "e(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Works with reg(R/I)+1 throughout, so that the empty graph is worth 1 and
// every subgraph produced by the recursions has a value.
class Refiner {
 public:
  explicit Refiner(int budget) : budget_(budget) {}

  bool exhausted() const { return exhausted_; }

  Range value(const Graph& g, std::vector<BoundStep>* trace) {
    if (g.edgeless()) return {1, 1};
    const auto parts = components(g);
    if (parts.size() > 1) {
      Range sum{1, 1};
      for (const auto& part : parts) {
        const Range r = value(part.graph, nullptr);
        sum.lo += r.lo - 1;
        sum.hi += r.hi - 1;
      }
      if (trace) trace->push_back({BoundRule::CompSplit, "G", sum.lo, sum.hi});
      return sum;
    }
    const bool memoize = g.order() <= 10;
    std::string key;
    if (memoize) {
      key = canonical_form(g);
      if (auto it = memo_.find(key); it != memo_.end() && !trace) return it->second;
    }
    const BoundsInterval base = static_bounds(g);
    if (trace) *trace = base.trace;
    Range r{base.lo, base.hi};
    if (r.lo == r.hi) {
      if (memoize) memo_[key] = r;
      return r;
    }
    if (budget_ <= 0) {
      exhausted_ = true;
      return r;
    }
    --budget_;

    std::vector<Vertex> by_degree(g.order());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex x : by_degree) {
      if (r.lo == r.hi) break;
      const Range del = value(apply_surgery(g, DeleteVertex{x}).graph, nullptr);
      const Range link = value(apply_surgery(g, CloseVertex{x}).graph, nullptr);
      const Range hull{std::min(del.lo, link.lo + 1), std::max(del.hi, link.hi + 1)};
      if (hull.lo > r.lo || hull.hi < r.hi) {
        r.lo = std::max(r.lo, hull.lo);
        r.hi = std::min(r.hi, hull.hi);
        if (trace) trace->push_back({BoundRule::FL2, vertex_tag("\\", x) + "|" + vertex_tag("_", x), r.lo, r.hi});
      }
    }
    for (const auto& e : g.edges()) {
      if (r.lo == r.hi) break;
      const Range del = value(delete_edge(g, e), nullptr);
      const Range link = value(apply_surgery(g, CloseEdge{e}).graph, nullptr);
      const int cap = std::max(del.hi, link.hi + 1);
      if (cap < r.hi) {
        r.hi = cap;
        if (trace) trace->push_back({BoundRule::FL3, edge_tag("\\", e) + "|" + edge_tag("_", e), r.lo, r.hi});
      }
    }
    if (r.lo > r.hi) {
      throw Error(ErrorCode::InternalInconsistency, "refined bounds crossed on " + encode_graph6(g));
    }
    if (memoize && !exhausted_) memo_[key] = r;
    return r;
  }

 private:
  int budget_;
  bool exhausted_ = false;
  std::unordered_map<std::string, Range> memo_;
};

}  // namespace

BoundsInterval refine_bounds(const Graph& g, int budget) {
  if (g.edgeless()) throw Error(ErrorCode::NotApplicable, "bounds need at least one edge");
  Refiner refiner(budget);
  BoundsInterval out;
  const Range r = refiner.value(g, &out.trace);
  out.lo = r.lo;
  out.hi = r.hi;
  out.budget_exhausted = refiner.exhausted();
  return out;
}

}  // namespace eilab
