#include "eilab/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eilab/bounds.hpp"
#include "eilab/chordality.hpp"
#include "eilab/classifier.hpp"
#include "eilab/formats.hpp"
#include "eilab/harness.hpp"
#include "eilab/matchings.hpp"
#include "eilab/regularity.hpp"
#include "json.hpp"

namespace eilab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::string g6;
  std::string json_path;
};

struct Loaded {
  std::vector<GraphDocument> docs;
  std::string error;  // set when input stopped early; docs holds what parsed before it
};

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load_graph6(std::istream& in, const std::string& source) {
  Loaded out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      GraphDocument doc;
      doc.graph = parse_graph6(line);
      doc.raw = line.substr(0, line.find_last_not_of(" \t\r") + 1);
      doc.line = lineno;
      out.docs.push_back(std::move(doc));
    } catch (const Error& e) {
      out.error = source + ":" + std::to_string(lineno) + ": " + e.what();
      break;
    }
  }
  return out;
}

Loaded load_inputs(const InputOptions& opts, std::istream& in) {
  if (!opts.g6.empty() && !opts.json_path.empty()) {
    Loaded out;
    out.error = "give either --g6 or --json, not both";
    return out;
  }
  if (!opts.json_path.empty()) {
    Loaded out;
    try {
      if (opts.json_path == "-") {
        out.docs = read_edge_list_json(slurp(in));
      } else {
        std::ifstream f(opts.json_path);
        if (!f) {
          out.error = "cannot open " + opts.json_path;
          return out;
        }
        out.docs = read_edge_list_json(slurp(f));
      }
    } catch (const Error& e) {
      out.error = opts.json_path + ": " + e.what();
    }
    return out;
  }
  if (opts.g6.empty() || opts.g6 == "-") return load_graph6(in, "<stdin>");
  std::ifstream f(opts.g6);
  if (!f) {
    Loaded out;
    out.error = "cannot open " + opts.g6;
    return out;
  }
  return load_graph6(f, opts.g6);
}

std::string row_id(const GraphDocument& d) {
  if (d.name) return *d.name;
  if (!d.raw.empty() && d.format == SourceFormat::Graph6) return d.raw;
  return encode_graph6(d.graph);
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::ostringstream ss;
  ss << "{";
  for (std::size_t i = 0; i < edges.size(); ++i) ss << (i ? "," : "") << edges[i].u << "-" << edges[i].v;
  ss << "}";
  return ss.str();
}

std::string subset_text(VertexSet s) {
  std::ostringstream ss;
  ss << "{";
  bool first = true;
  for (Vertex v : members(s)) {
    ss << (first ? "" : ",") << v;
    first = false;
  }
  ss << "}";
  return ss.str();
}

std::vector<FieldSpec> fields_from(const std::vector<int>& chars, std::vector<int> fallback) {
  std::vector<int> ps = chars.empty() ? std::move(fallback) : chars;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::vector<FieldSpec> out;
  for (int p : ps) out.emplace_back(p);
  return out;
}

ReportFormat report_format(const std::string& name) { return name == "csv" ? ReportFormat::Csv : ReportFormat::Json; }

// Each row command shares this loop: load, compute per graph, emit all rows
// computed so far, then report the first input error if any.
template <typename RowFn>
int run_rows(const InputOptions& inputs, const std::string& format, std::istream& in, std::ostream& out,
             std::ostream& err, RowFn&& fn) {
  const Loaded loaded = load_inputs(inputs, in);
  std::vector<ReportRow> rows;
  int status = kExitOk;
  for (const auto& doc : loaded.docs) {
    ReportRow row;
    row.id = row_id(doc);
    row.n = doc.graph.order();
    row.m = doc.graph.size();
    try {
      status = std::max(status, fn(doc.graph, row));
    } catch (const Error& e) {
      err << row.id << ": " << e.what() << "\n";
      status = std::max(status, kExitViolation);
    }
    rows.push_back(std::move(row));
  }
  out << write_report(rows, report_format(format));
  out.flush();
  if (!loaded.error.empty()) {
    err << "error: " << loaded.error << "\n";
    return kExitUsage;
  }
  return status;
}

void add_inputs(CLI::App* cmd, InputOptions& inputs, std::string& format) {
  cmd->add_option("--g6", inputs.g6, "graph6 file, one graph per line ('-' for stdin)");
  cmd->add_option("--json", inputs.json_path, "edge-list JSON file ('-' for stdin)");
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

std::string sweep_text(const SweepReport& r, bool allow_skips) {
  std::ostringstream ss;
  ss << (r.passed(allow_skips) ? "PASS " : "FAIL ") << r.property << " checked=" << r.checked
     << " violations=" << r.violations.size() << " skips=" << r.skips.size();
  ss.setf(std::ios::fixed);
  ss.precision(2);
  ss << " time=" << r.seconds << "s";
  if (!r.note.empty()) ss << " (" << r.note << ")";
  ss << "\n";
  for (const auto& v : r.violations) ss << "  violation " << v.graph6 << ": " << v.details << "\n";
  for (const auto& s : r.skips) ss << "  skip " << s.graph6 << ": " << s.reason << "\n";
  return ss.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  omp_set_num_threads(worker_threads());

  CLI::App app{"Edge-ideal regularity toolkit"};
  app.name("eilab");
  app.require_subcommand(1);

  InputOptions inputs;
  std::string format = "json";
  std::vector<int> chars;

  auto* invariants = app.add_subcommand("invariants", "nu, nu0, mm and cochord per input graph");
  add_inputs(invariants, inputs, format);

  auto* reg = app.add_subcommand("reg", "regularity of the edge ideal via Hochster's formula");
  add_inputs(reg, inputs, format);
  reg->add_option("--char", chars, "field characteristic, repeatable (default 0)");

  auto* classify_cmd = app.add_subcommand("classify", "both sides of reg = nu + 1 <=> C5 or Cameron-Walker");
  add_inputs(classify_cmd, inputs, format);
  classify_cmd->add_option("--char", chars, "field characteristic, repeatable (default 0)");

  auto* bounds = app.add_subcommand("bounds", "certified interval for reg without homology");
  add_inputs(bounds, inputs, format);
  bool refine = false;
  int budget = 20000;
  bounds->add_flag("--refine", refine, "apply the recursive refinement");
  bounds->add_option("--budget", budget, "recursion node budget for --refine")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "exhaustive theorem and lemma sweeps");
  int max_n = 6;
  int min_n = 1;
  std::vector<std::string> lemmas;
  bool allow_skips = false;
  bool no_unions = false;
  int union_max = 9;
  std::string verify_format = "text";
  std::string corpus_file;
  verify->add_option("--max-n", max_n, "largest order in the internal corpus")->check(CLI::Range(0, 8));
  verify->add_option("--min-n", min_n, "smallest order in the internal corpus")->check(CLI::Range(0, 8));
  verify->add_option("--lemmas", lemmas, "property tags (Theorem plus the lemma tags)")->delimiter(',');
  verify->add_option("--chars", chars, "field characteristics (default 0,2)")->delimiter(',');
  verify->add_flag("--allow-skips", allow_skips, "do not fail the sweep on cap breaches");
  verify->add_flag("--no-unions", no_unions, "skip the pairwise disjoint unions");
  verify->add_option("--union-max", union_max, "largest total order of pairwise unions");
  verify->add_option("--g6", corpus_file, "use the graphs in this graph6 file as the corpus");
  verify->add_option("--format", verify_format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* enumerate = app.add_subcommand("enumerate", "graphs on n vertices up to isomorphism");
  int enum_n = 0;
  bool connected = false;
  std::string enum_format = "g6";
  enumerate->add_option("--n", enum_n, "order")->required()->check(CLI::Range(0, kMaxInternalOrder));
  enumerate->add_flag("--connected", connected, "connected graphs only");
  enumerate->add_option("--format", enum_format, "output format")->check(CLI::IsMember({"g6", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (int p : chars) {
    try {
      FieldSpec{p};
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  try {
    if (invariants->parsed()) {
      return run_rows(inputs, format, in, out, err, [](const Graph& g, ReportRow& row) {
        std::ostringstream cert;
        const auto nu = max_matching(g);
        const auto nu0 = induced_matching_number(g);
        const auto mm = min_maximal_matching(g);
        row.nu = nu.size;
        row.nu0 = nu0.size;
        row.mm = mm.size;
        cert << "nu:" << edges_text(nu.edges) << ";nu0:" << edges_text(nu0.edges) << ";mm:" << edges_text(mm.edges);
        if (!g.edgeless()) {
          try {
            const auto cover = cochord_number(g);
            row.cochord = cover.k;
            cert << ";cochord:";
            for (std::size_t i = 0; i < cover.parts.size(); ++i) cert << (i ? "|" : "") << edges_text(cover.parts[i]);
          } catch (const Error& e) {
            cert << ";cochord:skipped(" << to_string(e.code()) << ")";
          }
        }
        row.certificate = cert.str();
        return kExitOk;
      });
    }
    if (reg->parsed()) {
      const auto fields = fields_from(chars, {0});
      return run_rows(inputs, format, in, out, err, [&](const Graph& g, ReportRow& row) {
        std::ostringstream cert;
        for (const auto& f : fields) {
          const auto r = regularity(g, f);
          row.regs.push_back({f.characteristic(), r.reg_star});
          cert << (cert.tellp() > 0 ? ";" : "") << "char" << f.characteristic() << ":";
          if (r.witness) {
            cert << "W=" << subset_text(r.witness->subset) << ",t=" << r.witness->degree;
          } else {
            cert << "edgeless";
          }
        }
        row.certificate = cert.str();
        return kExitOk;
      });
    }
    if (classify_cmd->parsed()) {
      const auto fields = fields_from(chars, {0});
      return run_rows(inputs, format, in, out, err, [&](const Graph& g, ReportRow& row) {
        const StructuralSide structural = classify_structural(g);
        std::ostringstream cert;
        for (std::size_t i = 0; i < structural.components.size(); ++i) {
          cert << (i ? "+" : "") << structural.components[i].description;
        }
        row.certificate = cert.str();
        row.verdict = std::string(structural.verdict ? "true" : "false") + "/?";
        const int nu = max_matching(g).size;
        row.nu = nu;
        bool numeric_all = true;
        bool agree = true;
        for (const auto& f : fields) {
          const auto r = regularity(g, f);
          row.regs.push_back({f.characteristic(), r.reg_star});
          const bool numeric = r.reg_star == nu + 1;
          numeric_all = numeric_all && numeric;
          agree = agree && numeric == structural.verdict;
        }
        row.verdict = std::string(structural.verdict ? "true" : "false") + "/" + (numeric_all ? "true" : "false");
        return agree ? kExitOk : kExitViolation;
      });
    }
    if (bounds->parsed()) {
      return run_rows(inputs, format, in, out, err, [&](const Graph& g, ReportRow& row) {
        const BoundsInterval b = refine ? refine_bounds(g, budget) : static_bounds(g);
        row.verdict = "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]";
        std::ostringstream cert;
        for (std::size_t i = 0; i < b.trace.size(); ++i) {
          const auto& s = b.trace[i];
          cert << (i ? ";" : "") << to_string(s.rule) << "@" << s.subgraph << "=[" << s.lo << "," << s.hi << "]";
        }
        if (b.budget_exhausted) cert << ";budget exhausted";
        row.certificate = cert.str();
        return kExitOk;
      });
    }
    if (enumerate->parsed()) {
      const Corpus corpus = enumerate_graphs(enum_n, connected);
      if (enum_format == "json") {
        out << "[";
        for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
          out << (i ? ",\n" : "\n") << encode_edge_list(corpus.graphs[i]);
        }
        out << "\n]\n";
      } else {
        for (const auto& g : corpus.graphs) out << encode_graph6(g) << "\n";
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      if (min_n > max_n) {
        err << "error: --min-n exceeds --max-n\n";
        return kExitUsage;
      }
      Corpus corpus;
      if (!corpus_file.empty()) {
        const Loaded loaded = load_inputs({corpus_file, ""}, in);
        if (!loaded.error.empty()) {
          err << "error: " << loaded.error << "\n";
          return kExitUsage;
        }
        corpus = corpus_from_documents(loaded.docs, corpus_file);
      } else {
        corpus = enumerate_range(min_n, max_n, true);
      }
      std::vector<std::string> tags = lemmas.empty() ? std::vector<std::string>{"Theorem"} : lemmas;
      for (const auto& t : tags) {
        if (t != "Theorem" && std::find(lemma_tags().begin(), lemma_tags().end(), t) == lemma_tags().end()) {
          err << "error: unknown property tag '" << t << "'\n";
          return kExitUsage;
        }
      }
      const auto fields = fields_from(chars, {0, 2});
      SweepOptions options;
      options.include_unions = !no_unions;
      options.union_max_total = union_max;
      std::vector<SweepReport> reports;
      for (const auto& f : fields) {
        options.field = f;
        const std::string suffix = " char " + std::to_string(f.characteristic());
        for (const auto& t : tags) {
          SweepReport r = t == "Theorem" ? verify_theorem(corpus, {f}, options)
                                         : verify_lemma_suite(corpus, {t}, options).front();
          r.property += suffix;
          if (verify_format == "text") {
            out << sweep_text(r, allow_skips);
            out.flush();
          }
          reports.push_back(std::move(r));
        }
      }
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [&](const SweepReport& r) { return r.passed(allow_skips); });
      if (verify_format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
          nlohmann::ordered_json j;
          j["property"] = r.property;
          j["passed"] = r.passed(allow_skips);
          j["checked"] = r.checked;
          j["seconds"] = r.seconds;
          j["note"] = r.note;
          j["violations"] = nlohmann::ordered_json::array();
          for (const auto& v : r.violations) j["violations"].push_back({{"graph6", v.graph6}, {"details", v.details}});
          j["skips"] = nlohmann::ordered_json::array();
          for (const auto& s : r.skips) j["skips"].push_back({{"graph6", s.graph6}, {"reason", s.reason}});
          doc.push_back(std::move(j));
        }
        out << doc.dump(2) << "\n";
      } else if (verify_format == "csv") {
        out << "property,checked,violations,skips,seconds,status\r\n";
        for (const auto& r : reports) {
          out << csv_escape(r.property) << "," << r.checked << "," << r.violations.size() << "," << r.skips.size()
              << "," << r.seconds << "," << (r.passed(allow_skips) ? "pass" : "fail") << "\r\n";
        }
      }
      return ok ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::UnknownProperty ? kExitUsage : kExitViolation;
  }
  return kExitUsage;
}

}  // namespace eilab
