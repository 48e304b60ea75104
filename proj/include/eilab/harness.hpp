#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eilab/formats.hpp"
#include "eilab/graph.hpp"
#include "eilab/homology.hpp"
#include "eilab/regularity.hpp"

namespace eilab {

enum class CorpusSource { Internal, External };

/// Pairwise non-isomorphic graphs, each stored in canonical labeling and
/// sorted by graph6 text.
struct Corpus {
  int min_n = 0;
  int max_n = 0;
  bool connected_only = true;
  CorpusSource source = CorpusSource::Internal;
  std::string origin;
  std::vector<Graph> graphs;
};

inline constexpr int kMaxInternalOrder = 8;

/// All graphs on n vertices up to isomorphism (connected ones only when
/// asked), by one-vertex extension of every graph on n-1 vertices followed
/// by canonical-form dedup. Throws TooLarge for n > 8.
Corpus enumerate_graphs(int n, bool connected_only);
inline Corpus enumerate_connected(int n) { return enumerate_graphs(n, true); }
Corpus enumerate_range(int lo, int hi, bool connected_only);

/// Dedups by canonical form (order <= 10; larger graphs are kept as given,
/// deduped by their graph6 text).
Corpus corpus_from_documents(const std::vector<GraphDocument>& docs, std::string origin);

/// Disjoint unions of all unordered pairs of corpus members with total order
/// at most max_total.
std::vector<Graph> union_pairs(const Corpus& corpus, int max_total);

struct Violation {
  std::string graph6;
  std::string details;
};

struct Skip {
  std::string graph6;
  std::string reason;
};

struct SweepReport {
  std::string property;
  std::size_t checked = 0;
  std::vector<Violation> violations;  // sorted by graph6
  std::vector<Skip> skips;            // sorted by graph6
  std::string note;
  double seconds = 0;

  /// Skips count as failures unless explicitly allowed.
  bool passed(bool allow_skips = false) const { return violations.empty() && (allow_skips || skips.empty()); }
};

struct SweepOptions {
  FieldSpec field;
  int union_max_total = 9;
  bool include_unions = true;
  std::size_t betti_samples = 200;
  int induced_samples = 4;
  std::uint64_t seed = 1;
  int refine_budget = 20000;
  RegularityOptions oracle;
};

/// Classifier on every corpus graph and, when enabled, on every pairwise
/// union, once per field. Disagreements between the two sides are violations.
SweepReport verify_theorem(const Corpus& corpus, const std::vector<FieldSpec>& fields,
                           const SweepOptions& options = {});

/// One report per tag, in the order given. Throws UnknownProperty on a tag
/// outside lemma_tags().
std::vector<SweepReport> verify_lemma_suite(const Corpus& corpus, const std::vector<std::string>& tags,
                                            const SweepOptions& options = {});
const std::vector<std::string>& lemma_tags();

/// Worker count for corpus sweeps: EILAB_THREADS when set to a positive
/// integer, else the OpenMP default.
int worker_threads();

}  // namespace eilab
