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


#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphsum/config.hpp"
#include "graphsum/corpus.hpp"
#include "graphsum/pipeline.hpp"
#include "graphsum/prompting.hpp"
#include "graphsum/rouge.hpp"
#include "graphsum/selection_io.hpp"

namespace graphsum {

// ---------------------------------------------------------------------------
// Summary scoring

enum class Metric { kRouge1, kRouge2, kRougeL };

std::string_view to_string(Metric metric);
// "rouge1,rouge2,rougeL" -> metrics, in the given order, without repeats.
std::vector<Metric> parse_metrics(std::string_view csv);

RougeScore score(Metric metric, std::string_view candidate, std::string_view reference);

// Selected sentences in document order joined by single spaces. Throws on an
// empty selection or an index outside 1..N.
std::string candidate_summary(const Document& doc, std::span<const int> indices);

struct DocumentScores {
  std::string id;
  std::vector<RougeScore> scores;  // aligned with EvaluationReport::metrics
};

struct DocumentError {
  std::string id;
  std::string message;
};

// Corpus means on the percent scale (0..100), unrounded.
struct MetricMean {
  Metric metric;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvaluationReport {
  std::vector<Metric> metrics;
  std::vector<DocumentScores> documents;
  std::vector<DocumentError> errors;  // excluded documents
  std::vector<MetricMean> means;

  std::size_t excluded() const { return errors.size(); }
  // Mean of the per-metric F1 means; nullopt when nothing was scored.
  std::optional<double> rouge_avg() const;
};

// Scores every selection against its document's reference. Documents with a
// missing reference, unknown id or an empty/invalid selection become
// DocumentErrors and are left out of the means.
EvaluationReport evaluate_run(std::span<const SelectionRecord> selections,
                              std::span<const Document> corpus, std::span<const Metric> metrics);

// Means rounded to 2 decimals (percent scale), per-document rows, errors.
std::string evaluation_report_json(const EvaluationReport& report);

// ---------------------------------------------------------------------------
// External evaluator exchange (BERTScore, SummaC, ... run out of process)

// {"id": ..., "candidate": ..., "reference": ...} per scorable selection.
void write_external_pairs(std::ostream& out, std::span<const SelectionRecord> selections,
                          std::span<const Document> corpus);

struct ExternalScore {
  std::string id;
  std::string metric;
  double score = 0.0;
};

// Reads {"id": ..., "metric": ..., "score": number} lines.
std::vector<ExternalScore> read_external_scores(std::istream& in);

// Mean score per metric name.
std::map<std::string, double> mean_external_scores(std::span<const ExternalScore> scores);

// ---------------------------------------------------------------------------
// Token usage

struct TokenUsageRow {
  Strategy strategy;
  std::size_t prompts = 0;
  double mean_tokens = 0.0;
  double ratio = 0.0;  // mean_tokens / vanilla mean_tokens
};

struct TokenUsageReport {
  std::vector<TokenUsageRow> rows;  // ordered by Strategy

  const TokenUsageRow* find(Strategy strategy) const;
};

// Groups artifacts by strategy. Throws InvalidArgument without vanilla
// prompts.
TokenUsageReport token_usage(std::span<const PromptArtifact> prompts);

// ---------------------------------------------------------------------------
// Graph sparsity

struct SparsityRow {
  double theta = 0.0;
  std::size_t documents = 0;
  double mean_nodes = 0.0;
  double mean_edges = 0.0;
  double mean_density = 0.0;  // mean of per-document densities
};

std::vector<SparsityRow> sparsity_sweep(std::span<const SimilarityMatrix> matrices,
                                        std::span<const double> thetas);

// "start:stop:step", inclusive, e.g. "0.4:0.9:0.1" -> 0.4, 0.5, ..., 0.9.
std::vector<double> parse_range(std::string_view text);

// ---------------------------------------------------------------------------
// Hyperparameter sensitivity

struct SweepCell {
  int k = 0;
  double theta = 0.0;
  bool ok = false;
  double rouge_avg = 0.0;  // mean of ROUGE-1/2/L F1, percent scale
  std::size_t documents = 0;
  std::string error;
};

struct SweepGrid {
  std::vector<int> ks;
  std::vector<double> thetas;
  std::vector<SweepCell> cells;  // row-major: ks outer, thetas inner

  const SweepCell& at(std::size_t k_index, std::size_t theta_index) const {
    return cells[k_index * thetas.size() + theta_index];
  }
};

// One pipeline run per (k, theta) cell over the whole corpus. Embeddings are
// computed once per document. A cell fails if any document fails or none
// can be scored.
SweepGrid sensitivity_sweep(std::span<const Document> corpus, std::span<const int> ks,
                            std::span<const double> thetas, const RunConfig& base,
                            Providers providers, int jobs = 1);

std::string sweep_json(const SweepGrid& grid);

}  // namespace graphsum
