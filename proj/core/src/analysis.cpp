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


#include "graphsum/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <mutex>
#include <ostream>
#include <unordered_map>

#include "graphsum/error.hpp"
#include "graphsum/parallel.hpp"
#include "graphsum/text.hpp"
#include "json.hpp"

namespace graphsum {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::unordered_map<std::string_view, const Document*> index_by_id(std::span<const Document> corpus) {
  std::unordered_map<std::string_view, const Document*> by_id;
  for (const auto& doc : corpus) by_id.emplace(doc.id, &doc);
  return by_id;
}

ordered_json score_json(const RougeScore& s) {
  return ordered_json{{"precision", round2(100.0 * s.precision)},
                      {"recall", round2(100.0 * s.recall)},
                      {"f1", round2(100.0 * s.f1)}};
}

}  // namespace

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::kRouge1:
      return "rouge1";
    case Metric::kRouge2:
      return "rouge2";
    case Metric::kRougeL:
      return "rougeL";
  }
  return "?";
}

std::vector<Metric> parse_metrics(std::string_view csv) {
  std::vector<Metric> metrics;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const std::string_view name = trim(csv.substr(start, comma - start));
    Metric m;
    if (name == "rouge1") {
      m = Metric::kRouge1;
    } else if (name == "rouge2") {
      m = Metric::kRouge2;
    } else if (name == "rougeL") {
      m = Metric::kRougeL;
    } else {
      throw InvalidArgument("unknown metric \"" + std::string(name) +
                            "\" (expected rouge1|rouge2|rougeL)");
    }
    if (std::find(metrics.begin(), metrics.end(), m) == metrics.end()) metrics.push_back(m);
    start = comma + 1;
  }
  return metrics;
}

RougeScore score(Metric metric, std::string_view candidate, std::string_view reference) {
  switch (metric) {
    case Metric::kRouge1:
      return rouge_n(candidate, reference, 1);
    case Metric::kRouge2:
      return rouge_n(candidate, reference, 2);
    case Metric::kRougeL:
      return rouge_l(candidate, reference);
  }
  throw InvalidArgument("unhandled metric");
}

std::string candidate_summary(const Document& doc, std::span<const int> indices) {
  if (indices.empty()) throw InvalidArgument("empty selection");
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::string out;
  for (int i : sorted) {
    if (!out.empty()) out.push_back(' ');
    out += doc.sentence(i).text;
  }
  return out;
}

std::optional<double> EvaluationReport::rouge_avg() const {
  if (means.empty() || documents.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& m : means) sum += m.f1;
  return sum / static_cast<double>(means.size());
}

EvaluationReport evaluate_run(std::span<const SelectionRecord> selections,
                              std::span<const Document> corpus, std::span<const Metric> metrics) {
  if (metrics.empty()) throw InvalidArgument("evaluate_run: no metrics requested");
  EvaluationReport report;
  report.metrics.assign(metrics.begin(), metrics.end());
  const auto by_id = index_by_id(corpus);

  for (const auto& sel : selections) {
    const auto it = by_id.find(sel.id);
    if (it == by_id.end()) {
      report.errors.push_back({sel.id, "document not in corpus"});
      continue;
    }
    const Document& doc = *it->second;
    if (!doc.reference || rouge_tokens(*doc.reference).empty()) {
      report.errors.push_back({sel.id, "missing reference"});
      continue;
    }
    try {
      const std::string candidate = candidate_summary(doc, sel.indices);
      DocumentScores row{sel.id, {}};
      for (Metric m : metrics) row.scores.push_back(score(m, candidate, *doc.reference));
      report.documents.push_back(std::move(row));
    } catch (const Error& e) {
      report.errors.push_back({sel.id, e.what()});
    }
  }

  if (!report.documents.empty()) {
    const double count = static_cast<double>(report.documents.size());
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      MetricMean mean{metrics[m]};
      for (const auto& row : report.documents) {
        mean.precision += row.scores[m].precision;
        mean.recall += row.scores[m].recall;
        mean.f1 += row.scores[m].f1;
      }
      mean.precision = 100.0 * mean.precision / count;
      mean.recall = 100.0 * mean.recall / count;
      mean.f1 = 100.0 * mean.f1 / count;
      report.means.push_back(mean);
    }
  }
  return report;
}

std::string evaluation_report_json(const EvaluationReport& report) {
  ordered_json out;
  out["metrics"] = ordered_json::array();
  for (Metric m : report.metrics) out["metrics"].push_back(to_string(m));
  out["means"] = ordered_json::object();
  for (const auto& mean : report.means) {
    out["means"][std::string(to_string(mean.metric))] = {{"precision", round2(mean.precision)},
                                                         {"recall", round2(mean.recall)},
                                                         {"f1", round2(mean.f1)}};
  }
  if (const auto avg = report.rouge_avg()) {
    out["rouge_avg"] = round2(*avg);
  } else {
    out["rouge_avg"] = nullptr;
  }
  out["scored"] = report.documents.size();
  out["excluded"] = report.excluded();
  out["errors"] = ordered_json::array();
  for (const auto& e : report.errors) {
    out["errors"].push_back({{"id", e.id}, {"message", e.message}});
  }
  out["documents"] = ordered_json::array();
  for (const auto& row : report.documents) {
    ordered_json doc;
    doc["id"] = row.id;
    for (std::size_t m = 0; m < report.metrics.size(); ++m) {
      doc[std::string(to_string(report.metrics[m]))] = score_json(row.scores[m]);
    }
    out["documents"].push_back(std::move(doc));
  }
  return out.dump(2) + "\n";
}

void write_external_pairs(std::ostream& out, std::span<const SelectionRecord> selections,
                          std::span<const Document> corpus) {
  const auto by_id = index_by_id(corpus);
  for (const auto& sel : selections) {
    const auto it = by_id.find(sel.id);
    if (it == by_id.end() || !it->second->reference || sel.indices.empty()) continue;
    ordered_json row;
    row["id"] = sel.id;
    row["candidate"] = candidate_summary(*it->second, sel.indices);
    row["reference"] = *it->second->reference;
    out << row.dump() << '\n';
  }
}

std::vector<ExternalScore> read_external_scores(std::istream& in) {
  std::vector<ExternalScore> scores;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    const json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object() || !row.contains("id") ||
        !row["id"].is_string() || !row.contains("metric") || !row["metric"].is_string() ||
        !row.contains("score") || !row["score"].is_number()) {
      throw ParseError("expected {\"id\", \"metric\", \"score\"}", line_number);
    }
    scores.push_back({row["id"].get<std::string>(), row["metric"].get<std::string>(),
                      row["score"].get<double>()});
  }
  return scores;
}

std::map<std::string, double> mean_external_scores(std::span<const ExternalScore> scores) {
  std::map<std::string, std::pair<double, std::size_t>> sums;
  for (const auto& s : scores) {
    auto& [sum, count] = sums[s.metric];
    sum += s.score;
    ++count;
  }
  std::map<std::string, double> means;
  for (const auto& [metric, acc] : sums) {
    means[metric] = acc.first / static_cast<double>(acc.second);
  }
  return means;
}

const TokenUsageRow* TokenUsageReport::find(Strategy strategy) const {
  for (const auto& row : rows) {
    if (row.strategy == strategy) return &row;
  }
  return nullptr;
}

TokenUsageReport token_usage(std::span<const PromptArtifact> prompts) {
  std::map<Strategy, std::pair<double, std::size_t>> totals;
  for (const auto& p : prompts) {
    auto& [sum, count] = totals[p.strategy];
    sum += p.token_estimate;
    ++count;
  }
  const auto vanilla = totals.find(Strategy::kVanilla);
  if (vanilla == totals.end()) throw InvalidArgument("token_usage: no vanilla prompts");
  const double base = vanilla->second.first / static_cast<double>(vanilla->second.second);
  if (base <= 0.0) throw InvalidArgument("token_usage: vanilla prompts are empty");

  TokenUsageReport report;
  for (const auto& [strategy, acc] : totals) {
    TokenUsageRow row{strategy, acc.second, acc.first / static_cast<double>(acc.second), 0.0};
    row.ratio = strategy == Strategy::kVanilla ? 1.0 : row.mean_tokens / base;
    report.rows.push_back(row);
  }
  return report;
}

std::vector<SparsityRow> sparsity_sweep(std::span<const SimilarityMatrix> matrices,
                                        std::span<const double> thetas) {
  if (matrices.empty()) throw InvalidArgument("sparsity_sweep: no documents");
  std::vector<SparsityRow> rows;
  for (double theta : thetas) {
    SparsityRow row;
    row.theta = theta;
    row.documents = matrices.size();
    for (const auto& sim : matrices) {
      const GraphStats stats = graph_stats(build_tag(sim, theta));
      row.mean_nodes += stats.n;
      row.mean_edges += static_cast<double>(stats.edge_count);
      row.mean_density += stats.density;
    }
    const double count = static_cast<double>(matrices.size());
    row.mean_nodes /= count;
    row.mean_edges /= count;
    row.mean_density /= count;
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> parse_range(std::string_view text) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t colon = std::min(text.find(':', start), text.size());
    const std::string piece(trim(text.substr(start, colon - start)));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) {
      throw InvalidArgument("range \"" + std::string(text) + "\" is not start:stop:step");
    }
    parts.push_back(value);
    start = colon + 1;
  }
  if (parts.size() != 3) {
    throw InvalidArgument("range \"" + std::string(text) + "\" is not start:stop:step");
  }
  const double first = parts[0], last = parts[1], step = parts[2];
  if (!(step > 0.0) || last < first) {
    throw InvalidArgument("range \"" + std::string(text) + "\" needs step > 0 and stop >= start");
  }
  const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = first + static_cast<double>(i) * step;
    values.push_back(std::round(v * 1e12) / 1e12);
  }
  return values;
}

SweepGrid sensitivity_sweep(std::span<const Document> corpus, std::span<const int> ks,
                            std::span<const double> thetas, const RunConfig& base,
                            Providers providers, int jobs) {
  if (corpus.empty() || ks.empty() || thetas.empty()) {
    throw InvalidArgument("sensitivity_sweep: corpus and ranges must be non-empty");
  }
  SweepGrid grid;
  grid.ks.assign(ks.begin(), ks.end());
  grid.thetas.assign(thetas.begin(), thetas.end());

  std::vector<std::optional<SimilarityMatrix>> sims(corpus.size());
  std::vector<std::string> embed_errors(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    try {
      sims[i] = similarity_matrix(embed(corpus[i].sentences, providers.embedding));
    } catch (const std::exception& e) {
      embed_errors[i] = "[" + corpus[i].id + "] embed: " + e.what();
    }
  });
  std::string embed_failure;
  for (const auto& e : embed_errors) {
    if (!e.empty()) {
      embed_failure = e;
      break;
    }
  }

  const std::vector<Metric> metrics = {Metric::kRouge1, Metric::kRouge2, Metric::kRougeL};
  for (int k : ks) {
    for (double theta : thetas) {
      SweepCell cell;
      cell.k = k;
      cell.theta = theta;
      if (!embed_failure.empty()) {
        cell.error = embed_failure;
        grid.cells.push_back(std::move(cell));
        continue;
      }
      RunConfig config = base;
      config.k = k;
      config.theta = theta;
      config.audit = false;
      try {
        config.validate();
      } catch (const Error& e) {
        cell.error = e.what();
        grid.cells.push_back(std::move(cell));
        continue;
      }

      std::vector<std::optional<SelectionRecord>> records(corpus.size());
      std::vector<std::string> errors(corpus.size());
      parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        try {
          auto result = run_pipeline(corpus[i], *sims[i], config, providers.llm);
          records[i] = make_selection_record(corpus[i].id, std::string(to_string(config.strategy)),
                                             result.selection, false);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      });
      std::vector<SelectionRecord> ok;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!errors[i].empty() && cell.error.empty()) cell.error = errors[i];
        if (records[i]) ok.push_back(std::move(*records[i]));
      }
      if (cell.error.empty()) {
        const auto report = evaluate_run(ok, corpus, metrics);
        if (const auto avg = report.rouge_avg()) {
          cell.ok = true;
          cell.rouge_avg = *avg;
          cell.documents = report.documents.size();
        } else {
          cell.error = "no document could be scored";
        }
      }
      grid.cells.push_back(std::move(cell));
    }
  }
  return grid;
}

std::string sweep_json(const SweepGrid& grid) {
  ordered_json out;
  out["ks"] = grid.ks;
  out["thetas"] = grid.thetas;
  out["cells"] = ordered_json::array();
  for (const auto& c : grid.cells) {
    ordered_json cell;
    cell["k"] = c.k;
    cell["theta"] = c.theta;
    cell["ok"] = c.ok;
    if (c.ok) {
      cell["rouge_avg"] = round2(c.rouge_avg);
      cell["documents"] = c.documents;
    } else {
      cell["error"] = c.error;
    }
    out["cells"].push_back(std::move(cell));
  }
  return out.dump(2) + "\n";
}

}  // namespace graphsum
