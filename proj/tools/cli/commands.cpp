// Copyright 2026 The graphsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphsum/analysis.hpp"
#include "graphsum/baselines.hpp"
#include "graphsum/config.hpp"
#include "graphsum/corpus.hpp"
#include "graphsum/correlation.hpp"
#include "graphsum/error.hpp"
#include "graphsum/graph.hpp"
#include "graphsum/parallel.hpp"
#include "graphsum/pipeline.hpp"
#include "graphsum/prompting.hpp"
#include "graphsum/selection_io.hpp"
#include "json.hpp"

namespace graphsum::cli {
namespace {

namespace fs = std::filesystem;

struct SharedFlags {
  std::string corpus;
  std::string config;
  std::optional<std::string> profile;
  std::optional<int> k;
  std::optional<double> theta;
  std::optional<double> rho;
  std::optional<std::string> strategy;
  std::optional<std::string> provider;
  std::optional<std::string> llm_url;
  std::optional<std::string> model;
  std::optional<std::string> embedding;
  std::optional<std::string> embedding_url;
  std::optional<std::uint64_t> seed;
  bool audit = false;
  int jobs = 1;

  RunConfig resolve() const {
    ConfigOverrides o;
    o.profile = profile;
    o.k = k;
    o.theta = theta;
    o.rho = rho;
    o.strategy = strategy;
    o.llm_provider = provider;
    o.llm_url = llm_url;
    o.model = model;
    o.embedding_provider = embedding;
    o.embedding_url = embedding_url;
    o.seed = seed;
    if (audit) o.audit = true;
    std::optional<fs::path> file;
    if (!config.empty()) file = config;
    return load_config(file, o);
  }
};

void add_corpus_flag(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--corpus", f.corpus, "JSONL corpus file")->required();
}

void add_config_flags(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--config", f.config, "JSON config file");
  cmd->add_option("--profile", f.profile, "dataset profile: pubmed|arxiv|multinews");
  cmd->add_option("--k", f.k, "number of sentences to select");
  cmd->add_option("--theta", f.theta, "edge threshold in [0,1)");
  cmd->add_option("--rho", f.rho, "CGM coverage in (0,1]");
  cmd->add_option("--seed", f.seed, "seed for permutation tests");
  cmd->add_option("--embedding", f.embedding, "embedding provider: hash|http");
  cmd->add_option("--embedding-url", f.embedding_url, "embedding endpoint");
  cmd->add_option("--jobs", f.jobs, "documents processed concurrently")
      ->check(CLI::PositiveNumber);
}

void add_llm_flags(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--strategy", f.strategy, "vanilla|nap|cap|cgm|tnl|nam|bam");
  cmd->add_option("--provider", f.provider,
                  "mock:first-k|mock:top-centrality|openai-chat|plain");
  cmd->add_option("--llm-url", f.llm_url, "completion endpoint");
  cmd->add_option("--model", f.model, "model id sent to the endpoint");
}

std::string sanitize(std::string_view id) {
  std::string out;
  for (char c : id) {
    const bool safe = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
                      c == '.';
    out.push_back(safe ? c : '_');
  }
  if (out.empty() || out[0] == '.') out.insert(out.begin(), '_');
  return out;
}

void write_file(const fs::path& path, std::string_view contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << contents;
  if (!f) throw Error("write failed for " + path.string());
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  return f;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::vector<double> parse_number_list(std::string_view text) {
  if (text.find(':') != std::string_view::npos) return parse_range(text);
  std::vector<double> values;
  std::stringstream ss{std::string(text)};
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) {
      throw InvalidArgument("\"" + std::string(text) + "\" is not a number list or range");
    }
    values.push_back(v);
  }
  if (values.empty()) throw InvalidArgument("empty number list");
  return values;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (double v : parse_number_list(text)) {
    if (v != std::round(v)) throw InvalidArgument("\"" + std::string(text) + "\" must hold integers");
    out.push_back(static_cast<int>(std::lround(v)));
  }
  return out;
}

std::vector<Strategy> parse_strategies(std::string_view csv) {
  std::vector<Strategy> out;
  std::stringstream ss{std::string(csv)};
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const Strategy s = parse_strategy(piece);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  if (out.empty()) throw InvalidArgument("no strategies given");
  return out;
}

// Similarity matrices for every document, embedded in parallel.
std::vector<SimilarityMatrix> embed_corpus(std::span<const Document> corpus,
                                           EmbeddingProvider& provider, int jobs) {
  std::vector<SimilarityMatrix> sims(corpus.size());
  std::vector<std::string> errors(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    try {
      sims[i] = similarity_matrix(embed(corpus[i].sentences, provider));
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!errors[i].empty()) throw StageError("embed", corpus[i].id, errors[i]);
  }
  return sims;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

fs::path fresh_run_dir(const fs::path& root, const RunConfig& config) {
  const std::string base = utc_timestamp() + "-" + config_hash(config);
  fs::path dir = root / base;
  for (int suffix = 2; fs::exists(dir); ++suffix) {
    dir = root / (base + "-" + std::to_string(suffix));
  }
  return dir;
}

std::vector<SelectionRecord> selections_from(const std::string& selections,
                                             const std::string& run_dir) {
  if (!selections.empty()) return read_selections(fs::path(selections));
  if (!run_dir.empty()) return read_selections(fs::path(run_dir) / "selections.jsonl");
  throw InvalidArgument("pass --selections or --run-dir");
}

// ---------------------------------------------------------------------------

int cmd_ingest(const SharedFlags& f, const std::string& out_path, std::ostream& out) {
  const auto corpus = load_corpus(f.corpus);
  const auto stats = corpus_stats(corpus);
  std::size_t sentences = 0;
  for (const auto& d : corpus) sentences += d.sentences.size();
  out << "documents\t" << stats.doc_count << '\n'
      << "with_reference\t" << stats.docs_with_reference << '\n'
      << "mean_sentences\t"
      << fixed(static_cast<double>(sentences) / static_cast<double>(stats.doc_count), 2) << '\n'
      << "mean_document_words\t" << fixed(stats.mean_doc_words, 2) << '\n'
      << "mean_summary_words\t" << fixed(stats.mean_summary_words, 2) << '\n';
  if (!out_path.empty()) {
    auto file = open_output(out_path);
    write_corpus(file, corpus);
  }
  return 0;
}

int cmd_graph_stats(const SharedFlags& f, const std::string& sweep, const std::string& graph_dir,
                    const std::string& out_path, std::ostream& out) {
  const RunConfig config = f.resolve();
  const auto corpus = load_corpus(f.corpus);
  auto embedder = make_embedding_provider(config.embedding);
  const auto sims = embed_corpus(corpus, *embedder, f.jobs);

  std::vector<double> thetas = sweep.empty() ? std::vector<double>{config.theta}
                                             : parse_range(sweep);
  const auto rows = sparsity_sweep(sims, thetas);
  std::ostringstream table;
  table << "theta\tdocuments\tmean_nodes\tmean_edges\tmean_density\n";
  for (const auto& r : rows) {
    table << fixed(r.theta, 2) << '\t' << r.documents << '\t' << fixed(r.mean_nodes, 2) << '\t'
          << fixed(r.mean_edges, 2) << '\t' << fixed(r.mean_density, 4) << '\n';
  }
  out << table.str();
  if (!out_path.empty()) write_file(out_path, table.str());

  if (!graph_dir.empty()) {
    fs::create_directories(graph_dir);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::ostringstream g;
      write_graph(g, build_tag(sims[i], config.theta));
      write_file(fs::path(graph_dir) / (sanitize(corpus[i].id) + ".graph"), g.str());
    }
  }
  return 0;
}

int cmd_prompt(const SharedFlags& f, const std::string& strategies, const std::string& out_dir,
               std::ostream& out) {
  const RunConfig config = f.resolve();
  const auto corpus = load_corpus(f.corpus);
  const auto chosen = strategies.empty() ? std::vector<Strategy>{config.strategy}
                                         : parse_strategies(strategies);
  auto embedder = make_embedding_provider(config.embedding);
  const auto sims = embed_corpus(corpus, *embedder, f.jobs);

  fs::create_directories(out_dir);
  std::size_t written = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto g = build_tag(sims[i], config.theta);
    const auto scores = degree_centrality(g);
    for (Strategy s : chosen) {
      const auto artifact = render_prompt(corpus[i], sims[i], g, scores, s, config.k, config.rho);
      const std::string stem = sanitize(corpus[i].id) + "." + std::string(to_string(s));
      write_file(fs::path(out_dir) / (stem + ".txt"), artifact.text);
      write_file(fs::path(out_dir) / (stem + ".meta.json"), prompt_metadata_json(artifact) + "\n");
      ++written;
    }
  }
  out << "wrote " << written << " prompts to " << out_dir << '\n';
  return 0;
}

struct RunFlags {
  std::string run_dir;
  std::string out_root = "runs";
  bool tolerate_failures = false;
};

int cmd_run(const SharedFlags& f, const RunFlags& r, std::ostream& out, std::ostream& err) {
  const RunConfig config = f.resolve();
  const auto corpus = load_corpus(f.corpus);
  auto embedder = make_embedding_provider(config.embedding);
  auto llm = make_llm_provider(config.llm);

  fs::path dir;
  if (!r.run_dir.empty()) {
    dir = r.run_dir;
    if (fs::exists(dir) && !fs::is_empty(dir)) {
      throw Error("run directory " + dir.string() + " already exists and is not empty");
    }
  } else {
    dir = fresh_run_dir(r.out_root, config);
  }
  fs::create_directories(dir);
  write_file(dir / "config.json", config_to_json(config));

  std::vector<std::optional<PipelineResult>> results(corpus.size());
  std::vector<std::string> errors(corpus.size());
  parallel_for(corpus.size(), f.jobs, [&](std::size_t i) {
    try {
      results[i] = run_pipeline(corpus[i], config, Providers{*embedder, *llm});
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  const std::string strategy(to_string(config.strategy));
  std::ostringstream selections;
  std::ostringstream failures;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!results[i]) {
      ++failed;
      nlohmann::ordered_json row{{"id", corpus[i].id}, {"error", errors[i]}};
      failures << row.dump() << '\n';
      err << "error: " << errors[i] << '\n';
      continue;
    }
    selections << to_json_line(make_selection_record(corpus[i].id, strategy,
                                                     results[i]->selection, config.audit))
               << '\n';
  }
  write_file(dir / "selections.jsonl", selections.str());
  write_file(dir / "failures.jsonl", failures.str());

  if (config.audit) {
    const fs::path audit = dir / "audit";
    fs::create_directories(audit);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!results[i]) continue;
      const std::string stem = sanitize(corpus[i].id);
      const auto& res = *results[i];
      write_file(audit / (stem + ".prompt.txt"), res.prompt.text);
      write_file(audit / (stem + ".meta.json"), prompt_metadata_json(res.prompt) + "\n");
      if (res.audit) {
        std::ostringstream g;
        write_graph(g, res.audit->graph);
        write_file(audit / (stem + ".graph"), g.str());
        nlohmann::ordered_json c{{"centrality", res.audit->centrality.values}};
        write_file(audit / (stem + ".centrality.json"), c.dump() + "\n");
      }
    }
  }

  out << "run directory\t" << dir.string() << '\n'
      << "documents\t" << corpus.size() << '\n'
      << "succeeded\t" << corpus.size() - failed << '\n'
      << "failed\t" << failed << '\n';
  return failed == 0 || r.tolerate_failures ? 0 : 1;
}

int cmd_baseline(const SharedFlags& f, const std::string& method_name, double threshold,
                 const std::string& out_path, std::ostream& out) {
  const RunConfig config = f.resolve();
  const auto corpus = load_corpus(f.corpus);
  const BaselineMethod method = parse_baseline_method(method_name);
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw InvalidArgument("--threshold must be in [0,1)");
  }

  std::vector<SimilarityMatrix> sims;
  if (method != BaselineMethod::kLead) {
    auto embedder = make_embedding_provider(config.embedding);
    sims = embed_corpus(corpus, *embedder, f.jobs);
  }

  std::ostringstream lines;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    BaselineSelection sel;
    switch (method) {
      case BaselineMethod::kLead:
        sel = lead(corpus[i], config.k);
        break;
      case BaselineMethod::kTextRank:
        sel = textrank(sims[i], config.k);
        break;
      case BaselineMethod::kLexRank:
        sel = lexrank(sims[i], threshold, config.k);
        break;
    }
    SelectionRecord record;
    record.id = corpus[i].id;
    record.strategy = std::string(to_string(method));
    record.indices = sel.indices;
    record.order = sel.indices;
    std::stable_sort(record.order.begin(), record.order.end(), [&](int a, int b) {
      return sel.scores[static_cast<std::size_t>(a - 1)] >
             sel.scores[static_cast<std::size_t>(b - 1)];
    });
    lines << to_json_line(record) << '\n';
  }
  if (out_path.empty()) {
    out << lines.str();
  } else {
    write_file(out_path, lines.str());
  }
  return 0;
}

struct EvaluateFlags {
  std::string selections;
  std::string run_dir;
  std::string metrics = "rouge1,rouge2,rougeL";
  std::string out;
  std::string export_external;
  std::string external_scores;
};

int cmd_evaluate(const SharedFlags& f, const EvaluateFlags& e, std::ostream& out) {
  if (!e.external_scores.empty()) {
    std::ifstream in(e.external_scores);
    if (!in) throw Error("cannot open " + e.external_scores);
    const auto scores = read_external_scores(in);
    out << "metric\tmean\n";
    for (const auto& [metric, mean] : mean_external_scores(scores)) {
      out << metric << '\t' << fixed(mean, 4) << '\n';
    }
    return 0;
  }

  const auto corpus = load_corpus(f.corpus);
  const auto selections = selections_from(e.selections, e.run_dir);
  if (!e.export_external.empty()) {
    auto file = open_output(e.export_external);
    write_external_pairs(file, selections, corpus);
  }
  const auto metrics = parse_metrics(e.metrics);
  const auto report = evaluate_run(selections, corpus, metrics);

  out << "metric\tprecision\trecall\tf1\n";
  for (const auto& m : report.means) {
    out << to_string(m.metric) << '\t' << fixed(m.precision, 2) << '\t' << fixed(m.recall, 2)
        << '\t' << fixed(m.f1, 2) << '\n';
  }
  if (const auto avg = report.rouge_avg()) out << "rouge_avg\t" << fixed(*avg, 2) << '\n';
  out << "scored\t" << report.documents.size() << '\n'
      << "excluded\t" << report.excluded() << '\n';
  if (!e.out.empty()) write_file(e.out, evaluation_report_json(report));
  return report.documents.empty() ? 1 : 0;
}

int cmd_analyze_tokens(const SharedFlags& f, const std::string& strategies, std::ostream& out) {
  const RunConfig config = f.resolve();
  const auto corpus = load_corpus(f.corpus);
  auto chosen = parse_strategies(strategies);
  if (std::find(chosen.begin(), chosen.end(), Strategy::kVanilla) == chosen.end()) {
    chosen.insert(chosen.begin(), Strategy::kVanilla);
  }
  auto embedder = make_embedding_provider(config.embedding);
  const auto sims = embed_corpus(corpus, *embedder, f.jobs);

  std::vector<PromptArtifact> prompts;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto g = build_tag(sims[i], config.theta);
    const auto scores = degree_centrality(g);
    for (Strategy s : chosen) {
      prompts.push_back(render_prompt(corpus[i], sims[i], g, scores, s, config.k, config.rho));
    }
  }
  const auto report = token_usage(prompts);
  out << "strategy\tprompts\tmean_tokens\tratio\n";
  for (Strategy s : chosen) {
    const TokenUsageRow* row = report.find(s);
    out << to_string(s) << '\t' << row->prompts << '\t' << fixed(row->mean_tokens, 2) << '\t'
        << fixed(row->ratio, 4) << '\n';
  }
  return 0;
}

int cmd_analyze_correlation(const SharedFlags& f, const EvaluateFlags& e, std::size_t shuffles,
                            std::ostream& out) {
  const RunConfig config = f.resolve();
  const auto corpus = load_corpus(f.corpus);
  const auto records = selections_from(e.selections, e.run_dir);

  std::vector<Document> docs;
  std::vector<SelectionResult> selections;
  for (const auto& r : records) {
    const auto it = std::find_if(corpus.begin(), corpus.end(),
                                 [&](const Document& d) { return d.id == r.id; });
    if (it == corpus.end()) throw Error("selection for unknown document \"" + r.id + "\"");
    if (r.indices.empty()) continue;
    docs.push_back(*it);
    selections.push_back(to_selection_result(r));
  }
  auto embedder = make_embedding_provider(config.embedding);
  const auto sims = embed_corpus(docs, *embedder, f.jobs);
  std::vector<CentralityScores> scores;
  for (const auto& sim : sims) scores.push_back(degree_centrality(build_tag(sim, config.theta)));

  const auto report = corpus_centrality_selection_correlation(
      scores, selections, PermutationOptions{shuffles, config.seed});
  out << "documents\t" << docs.size() << '\n'
      << "pairs\t" << report.n_pairs << '\n'
      << "spearman\t" << fixed(report.coefficient, 4) << '\n'
      << "p_value\t" << fixed(report.p_value, 4) << '\n';
  return 0;
}

int cmd_analyze_sweep(const SharedFlags& f, const std::string& ks, const std::string& thetas,
                      const std::string& out_path, bool tolerate, std::ostream& out) {
  const RunConfig config = f.resolve();
  const auto corpus = load_corpus(f.corpus);
  auto embedder = make_embedding_provider(config.embedding);
  auto llm = make_llm_provider(config.llm);
  const auto k_values = parse_int_list(ks);
  const auto theta_values = parse_number_list(thetas);
  const auto grid = sensitivity_sweep(corpus, k_values, theta_values, config,
                                      Providers{*embedder, *llm}, f.jobs);
  const std::string json = sweep_json(grid);
  if (out_path.empty()) {
    out << json;
  } else {
    write_file(out_path, json);
    out << "k\\theta";
    for (double t : grid.thetas) out << '\t' << fixed(t, 2);
    out << '\n';
    for (std::size_t a = 0; a < grid.ks.size(); ++a) {
      out << grid.ks[a];
      for (std::size_t b = 0; b < grid.thetas.size(); ++b) {
        const auto& cell = grid.at(a, b);
        out << '\t' << (cell.ok ? fixed(cell.rouge_avg, 2) : std::string("failed"));
      }
      out << '\n';
    }
  }
  const bool all_ok = std::all_of(grid.cells.begin(), grid.cells.end(),
                                  [](const SweepCell& c) { return c.ok; });
  return all_ok || tolerate ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphsum: graph-aware extractive summarization toolkit", "graphsum"};
  app.require_subcommand(1);

  SharedFlags ingest_flags;
  std::string ingest_out;
  auto* ingest = app.add_subcommand("ingest", "validate a corpus and print statistics");
  add_corpus_flag(ingest, ingest_flags);
  ingest->add_option("--out", ingest_out, "write the normalized corpus here");

  SharedFlags graph_flags;
  std::string theta_sweep, graph_dir, graph_out;
  auto* graph = app.add_subcommand("graph-stats", "graph sparsity per threshold");
  add_corpus_flag(graph, graph_flags);
  add_config_flags(graph, graph_flags);
  graph->add_option("--theta-sweep", theta_sweep, "start:stop:step, e.g. 0.4:0.9:0.1");
  graph->add_option("--graph-dir", graph_dir, "export one graph file per document");
  graph->add_option("--out", graph_out, "also write the table here");

  SharedFlags prompt_flags;
  std::string prompt_strategies, prompt_out;
  auto* prompt = app.add_subcommand("prompt", "render prompts without calling a model");
  add_corpus_flag(prompt, prompt_flags);
  add_config_flags(prompt, prompt_flags);
  add_llm_flags(prompt, prompt_flags);
  prompt->add_option("--strategies", prompt_strategies, "comma-separated strategies");
  prompt->add_option("--out", prompt_out, "output directory")->required();

  SharedFlags run_flags;
  RunFlags run_opts;
  auto* run = app.add_subcommand("run", "run the pipeline over a corpus");
  add_corpus_flag(run, run_flags);
  add_config_flags(run, run_flags);
  add_llm_flags(run, run_flags);
  run->add_flag("--audit", run_flags.audit, "keep prompts, graphs and raw responses");
  run->add_option("--run-dir", run_opts.run_dir, "exact output directory (must be empty)");
  run->add_option("--out-root", run_opts.out_root, "parent of timestamped run directories");
  run->add_flag("--tolerate-failures", run_opts.tolerate_failures,
                "exit 0 even if some documents failed");

  SharedFlags baseline_flags;
  std::string method = "lead", baseline_out;
  double threshold = 0.1;
  auto* baseline = app.add_subcommand("baseline", "unsupervised baseline selections");
  add_corpus_flag(baseline, baseline_flags);
  add_config_flags(baseline, baseline_flags);
  baseline->add_option("--method", method, "lead|textrank|lexrank")->required();
  baseline->add_option("--threshold", threshold, "lexrank binarization threshold");
  baseline->add_option("--out", baseline_out, "selections JSONL (default stdout)");

  SharedFlags eval_flags;
  EvaluateFlags eval_opts;
  auto* evaluate = app.add_subcommand("evaluate", "ROUGE scores for a selections file");
  evaluate->add_option("--corpus", eval_flags.corpus, "JSONL corpus file");
  evaluate->add_option("--selections", eval_opts.selections, "selections JSONL");
  evaluate->add_option("--run-dir", eval_opts.run_dir, "run directory with selections.jsonl");
  evaluate->add_option("--metrics", eval_opts.metrics, "comma-separated rouge1,rouge2,rougeL");
  evaluate->add_option("--out", eval_opts.out, "JSON report path");
  evaluate->add_option("--export-external", eval_opts.export_external,
                       "write candidate/reference pairs for an external scorer");
  evaluate->add_option("--external-scores", eval_opts.external_scores,
                       "summarize scores produced by an external scorer");

  auto* analyze = app.add_subcommand("analyze", "token usage, correlation and sweeps");
  analyze->require_subcommand(1);

  SharedFlags tokens_flags;
  std::string token_strategies = "vanilla,nap,cap,cgm";
  auto* tokens = analyze->add_subcommand("tokens", "mean prompt length per strategy");
  add_corpus_flag(tokens, tokens_flags);
  add_config_flags(tokens, tokens_flags);
  tokens->add_option("--strategies", token_strategies, "comma-separated strategies");

  SharedFlags corr_flags;
  EvaluateFlags corr_opts;
  std::size_t shuffles = 10000;
  auto* corr = analyze->add_subcommand("correlation", "centrality vs selection rank");
  add_corpus_flag(corr, corr_flags);
  add_config_flags(corr, corr_flags);
  corr->add_option("--selections", corr_opts.selections, "selections JSONL");
  corr->add_option("--run-dir", corr_opts.run_dir, "run directory with selections.jsonl");
  corr->add_option("--shuffles", shuffles, "permutation count")->check(CLI::PositiveNumber);

  SharedFlags sweep_flags;
  std::string ks = "5,7,9", thetas = "0.6,0.7,0.8", sweep_out;
  bool sweep_tolerate = false;
  auto* sweep = analyze->add_subcommand("sweep", "ROUGE-Avg over a (k, theta) grid");
  add_corpus_flag(sweep, sweep_flags);
  add_config_flags(sweep, sweep_flags);
  add_llm_flags(sweep, sweep_flags);
  sweep->add_option("--ks", ks, "k values: list or start:stop:step");
  sweep->add_option("--thetas", thetas, "theta values: list or start:stop:step");
  sweep->add_option("--out", sweep_out, "grid JSON path (default stdout)");
  sweep->add_flag("--tolerate-failures", sweep_tolerate, "exit 0 even if cells failed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*ingest) return cmd_ingest(ingest_flags, ingest_out, out);
    if (*graph) return cmd_graph_stats(graph_flags, theta_sweep, graph_dir, graph_out, out);
    if (*prompt) return cmd_prompt(prompt_flags, prompt_strategies, prompt_out, out);
    if (*run) return cmd_run(run_flags, run_opts, out, err);
    if (*baseline) return cmd_baseline(baseline_flags, method, threshold, baseline_out, out);
    if (*evaluate) {
      if (eval_opts.external_scores.empty() && eval_flags.corpus.empty()) {
        throw InvalidArgument("--corpus is required");
      }
      return cmd_evaluate(eval_flags, eval_opts, out);
    }
    if (*tokens) return cmd_analyze_tokens(tokens_flags, token_strategies, out);
    if (*corr) return cmd_analyze_correlation(corr_flags, corr_opts, shuffles, out);
    if (*sweep) {
      return cmd_analyze_sweep(sweep_flags, ks, thetas, sweep_out, sweep_tolerate, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace graphsum::cli
