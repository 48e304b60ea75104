#include "eilab/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "eilab/bounds.hpp"
#include "eilab/cameron_walker.hpp"
#include "eilab/chordality.hpp"
#include "eilab/classifier.hpp"
#include "eilab/matchings.hpp"

namespace eilab {

int worker_threads() {
  if (const char* env = std::getenv("EILAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 1024));
  }
  return omp_get_max_threads();
}

namespace {

Graph add_vertex(const Graph& g, VertexSet neighbours) {
  std::vector<VertexSet> adj = g.adjacency();
  const Vertex v = g.order();
  for (VertexSet s = neighbours; s; s &= s - 1) adj[lowest(s)] |= bit(v);
  adj.push_back(neighbours);
  return Graph::from_adjacency(std::move(adj));
}

// Canonical graph6 strings of all graphs on n vertices, ascending.
const std::vector<std::string>& all_graphs(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::string>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::string> out;
  if (n == 0) {
    out.push_back(encode_graph6(Graph::edgeless(0)));
  } else {
    const auto& smaller = all_graphs(n - 1);
    const std::size_t per = std::size_t{1} << (n - 1);
    std::vector<std::string> forms(smaller.size() * per);
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_threads())
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const Graph base = parse_graph6(smaller[i / per]);
      forms[i] = canonical_form(add_vertex(base, static_cast<VertexSet>(i % per)));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    out = std::move(forms);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(out)).first->second;
}

std::string g6(const Graph& g) { return encode_graph6(g); }

template <typename T>
void sort_by_graph6(std::vector<T>& items) {
  std::stable_sort(items.begin(), items.end(), [](const T& a, const T& b) { return a.graph6 < b.graph6; });
}

struct Outcome {
  std::vector<std::string> violations;
  std::optional<std::string> skip;
};

using Check = std::function<void(const Graph&, Outcome&)>;

// Runs check on every graph in parallel and aggregates in graph6 order.
// CapExceeded and TooLarge become skips; any other error is a violation.
SweepReport sweep(const std::string& property, const std::vector<Graph>& graphs, const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(graphs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_threads())
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    try {
      check(graphs[i], outcomes[i]);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CapExceeded || e.code() == ErrorCode::TooLarge) {
        outcomes[i].skip = e.what();
      } else {
        outcomes[i].violations.push_back(e.what());
      }
    } catch (const std::exception& e) {
      outcomes[i].violations.push_back(e.what());
    }
  }
  SweepReport report;
  report.property = property;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string id = g6(graphs[i]);
    if (outcomes[i].skip) {
      report.skips.push_back({id, *outcomes[i].skip});
    } else {
      ++report.checked;
    }
    for (auto& v : outcomes[i].violations) report.violations.push_back({id, std::move(v)});
  }
  sort_by_graph6(report.violations);
  sort_by_graph6(report.skips);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string join(const std::vector<int>& values) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < values.size(); ++i) ss << (i ? "," : "") << values[i];
  return ss.str();
}

bool middle_of_three_path(const Graph& g, const Edge& e) {
  const VertexSet left = g.neighbors(e.u) & ~bit(e.v);
  const VertexSet right = g.neighbors(e.v) & ~bit(e.u);
  if (!left || !right) return false;
  return !(left == right && popcount(left) == 1);
}

}  // namespace

Corpus enumerate_graphs(int n, bool connected_only) {
  if (n < 0) throw Error(ErrorCode::InvalidVertex, "negative order");
  if (n > kMaxInternalOrder) {
    throw Error(ErrorCode::TooLarge, "internal enumeration stops at n=8; pass a graph6 corpus with --g6 FILE");
  }
  Corpus c;
  c.min_n = c.max_n = n;
  c.connected_only = connected_only;
  c.origin = "internal";
  for (const auto& s : all_graphs(n)) {
    Graph g = parse_graph6(s);
    if (!connected_only || is_connected(g)) c.graphs.push_back(std::move(g));
  }
  return c;
}

Corpus enumerate_range(int lo, int hi, bool connected_only) {
  Corpus c;
  c.min_n = lo;
  c.max_n = hi;
  c.connected_only = connected_only;
  c.origin = "internal";
  for (int n = lo; n <= hi; ++n) {
    auto part = enumerate_graphs(n, connected_only);
    for (auto& g : part.graphs) c.graphs.push_back(std::move(g));
  }
  return c;
}

Corpus corpus_from_documents(const std::vector<GraphDocument>& docs, std::string origin) {
  Corpus c;
  c.source = CorpusSource::External;
  c.origin = std::move(origin);
  c.connected_only = true;
  c.min_n = docs.empty() ? 0 : kMaxVertices;
  std::set<std::string> seen;
  for (const auto& d : docs) {
    const Graph& g = d.graph;
    const std::string key = g.order() <= 10 ? canonical_form(g) : encode_graph6(g);
    if (!seen.insert(key).second) continue;
    c.graphs.push_back(g.order() <= 10 ? parse_graph6(key) : g);
    c.min_n = std::min(c.min_n, g.order());
    c.max_n = std::max(c.max_n, g.order());
    c.connected_only = c.connected_only && is_connected(g);
  }
  std::stable_sort(c.graphs.begin(), c.graphs.end(),
                   [](const Graph& a, const Graph& b) { return encode_graph6(a) < encode_graph6(b); });
  return c;
}

std::vector<Graph> union_pairs(const Corpus& corpus, int max_total) {
  std::vector<Graph> out;
  const auto& gs = corpus.graphs;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i; j < gs.size(); ++j) {
      if (gs[i].order() + gs[j].order() <= max_total) out.push_back(disjoint_union(gs[i], gs[j]));
    }
  }
  return out;
}

SweepReport verify_theorem(const Corpus& corpus, const std::vector<FieldSpec>& fields, const SweepOptions& options) {
  std::vector<Graph> graphs = corpus.graphs;
  std::size_t union_count = 0;
  if (options.include_unions) {
    auto unions = union_pairs(corpus, options.union_max_total);
    union_count = unions.size();
    graphs.insert(graphs.end(), unions.begin(), unions.end());
  }
  const auto oracle = options.oracle;
  auto report = sweep("Theorem", graphs, [&](const Graph& g, Outcome& out) {
    const StructuralSide structural = classify_structural(g);
    for (const auto& part : structural.components) {
      if (part.pentagon) continue;
      const Graph comp = induced_subgraph(g, [&] {
                           VertexSet s = 0;
                           for (Vertex v : part.vertices) s |= bit(v);
                           return s;
                         }()).graph;
      if (auto err = validate(comp, part.cameron_walker); !err.empty()) {
        out.violations.push_back("component certificate: " + err);
      }
    }
    const int nu = max_matching(g).size;
    for (const auto& f : fields) {
      const RegularityResult r = regularity(g, f, oracle);
      if (auto err = validate(g, r); !err.empty()) out.violations.push_back("witness: " + err);
      const bool numeric = r.reg_star == nu + 1;
      if (numeric != structural.verdict) {
        std::ostringstream ss;
        ss << "char " << f.characteristic() << ": structural=" << structural.verdict << " numeric=" << numeric
           << " reg=" << r.reg_star << " nu=" << nu;
        out.violations.push_back(ss.str());
      }
    }
  });
  std::ostringstream note;
  note << corpus.graphs.size() << " corpus graphs, " << union_count << " unions";
  report.note = note.str();
  return report;
}

const std::vector<std::string>& lemma_tags() {
  static const std::vector<std::string> tags{"FL1",     "FL2",    "FL3",   "FL4",   "Comp",
                                             "UB",      "C1",     "C1a",   "C2",    "CaWa",
                                             "Squeeze", "Bounds", "Euler", "Betti", "Fields"};
  return tags;
}

std::vector<SweepReport> verify_lemma_suite(const Corpus& corpus, const std::vector<std::string>& tags,
                                            const SweepOptions& options) {
  for (const auto& t : tags) {
    if (std::find(lemma_tags().begin(), lemma_tags().end(), t) == lemma_tags().end()) {
      throw Error(ErrorCode::UnknownProperty, "unknown property tag '" + t + "'");
    }
  }
  const FieldSpec f = options.field;
  const RegularityOptions oracle = options.oracle;
  auto reg = [&](const Graph& g) { return regularity(g, f, oracle).reg_star; };
  auto reg_rec = [&](const Graph& g) { return reg_recursive(g, f, oracle); };
  const auto& graphs = corpus.graphs;

  std::vector<SweepReport> reports;
  for (const auto& tag : tags) {
    SweepReport report;
    if (tag == "FL1") {
      // Index of each graph fixes its random stream, so results do not depend
      // on scheduling.
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < graphs.size(); ++i) index[g6(graphs[i])] = i;
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        if (g.order() < 2) return;
        std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + index.at(g6(g)));
        std::uniform_int_distribution<VertexSet> pick(1, first_n(g.order()) - 1);
        const int whole = reg(g);
        for (int s = 0; s < options.induced_samples; ++s) {
          const VertexSet w = pick(rng);
          const int part = reg(induced_subgraph(g, w).graph);
          if (part > whole) {
            out.violations.push_back("subset " + join(members(w)) + ": " + std::to_string(part) + " > " +
                                     std::to_string(whole));
          }
        }
      });
    } else if (tag == "FL2") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        const int r = reg_rec(g);
        for (Vertex x = 0; x < g.order(); ++x) {
          const int del = reg_rec(apply_surgery(g, DeleteVertex{x}).graph);
          const int link = reg_rec(apply_surgery(g, CloseVertex{x}).graph) + 1;
          if (r != del && r != link) {
            out.violations.push_back("x=" + std::to_string(x) + ": reg " + std::to_string(r) + " not in {" +
                                     std::to_string(del) + "," + std::to_string(link) + "}");
          }
        }
      });
    } else if (tag == "FL3") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        const int r = reg_rec(g);
        for (const auto& e : g.edges()) {
          const int del = reg_rec(delete_edge(g, e));
          const int link = reg_rec(apply_surgery(g, CloseEdge{e}).graph) + 1;
          if (r > std::max(del, link)) {
            out.violations.push_back("e=" + std::to_string(e.u) + "-" + std::to_string(e.v) + ": reg " +
                                     std::to_string(r) + " > max(" + std::to_string(del) + "," +
                                     std::to_string(link) + ")");
          }
        }
      });
    } else if (tag == "FL4") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        if (g.edgeless()) return;
        const bool two = reg(g) == 2;
        if (two != is_cochordal(g).chordal || two != froberg_reg_two(g)) {
          out.violations.push_back("reg==2 is " + std::to_string(two) + " but co-chordality disagrees");
        }
      });
    } else if (tag == "Comp") {
      std::vector<Graph> items;
      for (const auto& g : graphs) {
        if (components(g).size() > 1) items.push_back(g);
      }
      if (options.include_unions) {
        auto unions = union_pairs(corpus, options.union_max_total);
        items.insert(items.end(), unions.begin(), unions.end());
      }
      report = sweep(tag, items, [&](const Graph& g, Outcome& out) {
        int reg_sum = 1, nu_sum = 0, nu0_sum = 0;
        for (const auto& part : components(g)) {
          reg_sum += reg(part.graph) - 1;
          nu_sum += max_matching(part.graph).size;
          nu0_sum += induced_matching_number(part.graph).size;
        }
        const int r = reg(g);
        const int nu = max_matching(g).size;
        const int nu0 = induced_matching_number(g).size;
        if (r != reg_sum) out.violations.push_back("reg " + std::to_string(r) + " != " + std::to_string(reg_sum));
        if (nu != nu_sum) out.violations.push_back("nu " + std::to_string(nu) + " != " + std::to_string(nu_sum));
        if (nu0 != nu0_sum) {
          out.violations.push_back("nu0 " + std::to_string(nu0) + " != " + std::to_string(nu0_sum));
        }
      });
    } else if (tag == "UB") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        if (g.edgeless()) return;
        const int r = reg(g);
        const int mm = min_maximal_matching(g).size;
        if (r > mm + 1) out.violations.push_back("reg " + std::to_string(r) + " > mm+1 = " + std::to_string(mm + 1));
      });
    } else if (tag == "Squeeze") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        if (g.edgeless()) return;
        const int r = reg(g);
        const int nu = max_matching(g).size;
        const int nu0 = induced_matching_number(g).size;
        const int mm = min_maximal_matching(g).size;
        const int cochord = cochord_number(g).k;
        std::ostringstream ss;
        ss << "nu0=" << nu0 << " reg=" << r << " mm=" << mm << " nu=" << nu << " cochord=" << cochord;
        if (!(nu0 + 1 <= r && r <= mm + 1 && mm + 1 <= nu + 1 && r <= cochord + 1 && nu0 <= cochord &&
              cochord <= mm)) {
          out.violations.push_back("chain broken: " + ss.str());
        }
      });
    } else if (tag == "C1") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        if (contains_five_cycle(g)) return;
        const int nu = max_matching(g).size;
        if (reg(g) != nu + 1) return;
        const int nu0 = induced_matching_number(g).size;
        if (nu != nu0) out.violations.push_back("nu " + std::to_string(nu) + " != nu0 " + std::to_string(nu0));
      });
    } else if (tag == "C1a") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        const int nu = max_matching(g).size;
        const int r = reg(g);
        if (r != nu + 1) return;
        for (const auto& e : g.edges()) {
          if (!middle_of_three_path(g, e)) continue;
          const Graph h = delete_edge(g, e);
          const int rh = reg(h);
          const int nuh = max_matching(h).size;
          if (rh != r || nuh != nu || rh != nuh + 1) {
            out.violations.push_back("e=" + std::to_string(e.u) + "-" + std::to_string(e.v) + ": reg(G\\e)=" +
                                     std::to_string(rh) + " nu(G\\e)=" + std::to_string(nuh) + " reg=" +
                                     std::to_string(r) + " nu=" + std::to_string(nu));
          }
        }
      });
    } else if (tag == "C2") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        if (!is_connected(g) || !contains_five_cycle(g)) return;
        if (reg(g) != max_matching(g).size + 1) return;
        if (!pentagon_test(g)) out.violations.push_back("reg = nu+1 on a graph with a 5-cycle other than C5");
      });
    } else if (tag == "CaWa") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        if (!is_connected(g)) return;
        const auto by_invariants = cw_by_invariants(g);
        const auto structural = recognize_structural(g);
        if (by_invariants.verdict != structural.verdict) {
          out.violations.push_back("nu==nu0 is " + std::to_string(by_invariants.verdict) +
                                   " but recognizer says " + describe(structural.shape));
        }
        if (auto err = validate(g, structural); !err.empty()) out.violations.push_back("certificate: " + err);
      });
    } else if (tag == "Bounds") {
      std::vector<char> exact(graphs.size(), 0);
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < graphs.size(); ++i) index[g6(graphs[i])] = i;
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        if (g.edgeless()) return;
        const int r = reg(g);
        const auto check = [&](const char* which, const BoundsInterval& b) {
          for (const auto& s : b.trace) {
            if (r < s.lo || r > s.hi) {
              out.violations.push_back(std::string(which) + " step " + to_string(s.rule) + " on " + s.subgraph +
                                       " gives [" + std::to_string(s.lo) + "," + std::to_string(s.hi) +
                                       "] excluding " + std::to_string(r));
            }
          }
          if (!b.contains(r)) {
            out.violations.push_back(std::string(which) + " interval excludes " + std::to_string(r));
          }
        };
        const auto st = static_bounds(g);
        const auto refined = refine_bounds(g, options.refine_budget);
        check("static", st);
        check("refined", refined);
        if (refined.lo < st.lo || refined.hi > st.hi) out.violations.push_back("refinement widened the interval");
        exact[index.at(g6(g))] = refined.exact() ? 1 : 0;
      });
      std::size_t with_edges = 0, collapsed = 0;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        with_edges += graphs[i].edgeless() ? 0 : 1;
        collapsed += exact[i];
      }
      report.note = "refined interval exact on " + std::to_string(collapsed) + "/" + std::to_string(with_edges) +
                    " graphs with an edge";
    } else if (tag == "Euler") {
      RegularityOptions checked = oracle;
      checked.self_check = true;
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        const auto fast = regularity(g, f, oracle);
        const auto slow = regularity(g, f, checked);
        const auto ref = regularity_reference(g, f, oracle.max_vertices);
        if (fast.reg_star != slow.reg_star || fast.reg_star != ref.reg_star) {
          out.violations.push_back("kernel " + std::to_string(fast.reg_star) + ", self-checked " +
                                   std::to_string(slow.reg_star) + ", reference " + std::to_string(ref.reg_star));
        }
        if (fast.witness && ref.witness && fast.witness->subset != ref.witness->subset) {
          out.violations.push_back("witness differs from the reference");
        }
      });
    } else if (tag == "Betti") {
      std::vector<Graph> sample;
      for (const auto& g : graphs) {
        if (!g.edgeless()) sample.push_back(g);
      }
      if (sample.size() > options.betti_samples) {
        std::mt19937_64 rng(options.seed);
        std::shuffle(sample.begin(), sample.end(), rng);
        sample.resize(options.betti_samples);
      }
      report = sweep(tag, sample, [&](const Graph& g, Outcome& out) {
        const auto table = betti_table(g, f, oracle);
        const int r = reg(g);
        if (table.max_ideal_shift() != r) {
          out.violations.push_back("max j-i " + std::to_string(table.max_ideal_shift()) + " != reg " +
                                   std::to_string(r));
        }
        if (table.quotient_betti(0, 0) != 1) out.violations.push_back("beta_{0,0} != 1");
        for (const auto& [ij, value] : table.quotient) {
          if (ij.first == 1 && ij.second != 2 && value != 0) out.violations.push_back("linear strand off degree 2");
        }
        if (table.quotient_betti(1, 2) != g.size()) out.violations.push_back("beta_{1,2} != number of edges");
      });
    } else if (tag == "Fields") {
      report = sweep(tag, graphs, [&](const Graph& g, Outcome& out) {
        std::vector<int> values;
        for (int p : {0, 2, 3}) values.push_back(regularity(g, FieldSpec(p), oracle).reg_star);
        if (values[0] != values[1] || values[0] != values[2]) {
          out.violations.push_back("reg over 0,2,3 = " + join(values));
        }
      });
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace eilab
