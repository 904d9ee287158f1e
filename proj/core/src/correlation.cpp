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


#include "graphsum/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "graphsum/error.hpp"

namespace graphsum {
namespace {

constexpr double kTieEpsilon = 1e-12;

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[bounded(rng, i)]);
  }
}

// Centered ranks and their norm; correlation of two such vectors is
// dot / (norm_x * norm_y).
struct Centered {
  std::vector<double> values;
  double norm = 0.0;
};

Centered centered_ranks(std::span<const double> v) {
  Centered c;
  c.values = average_ranks(v);
  const double mean = std::accumulate(c.values.begin(), c.values.end(), 0.0) /
                      static_cast<double>(c.values.size());
  double ss = 0.0;
  for (double& x : c.values) {
    x -= mean;
    ss += x * x;
  }
  c.norm = std::sqrt(ss);
  return c;
}

double centered_corr(const Centered& x, const std::vector<double>& y_values, double y_norm) {
  if (x.norm == 0.0 || y_norm == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < y_values.size(); ++i) dot += x.values[i] * y_values[i];
  return std::clamp(dot / (x.norm * y_norm), -1.0, 1.0);
}

struct DocumentPair {
  Centered centrality;
  Centered selection;
};

DocumentPair make_pair(const CentralityScores& scores, const SelectionResult& selection) {
  const int n = scores.size();
  if (n < 3) throw InvalidArgument("insufficient pairs");
  if (selection.order.empty()) throw InvalidArgument("insufficient pairs: empty selection");
  const auto ys = selection_scores(n, selection.order);
  return DocumentPair{centered_ranks(scores.values), centered_ranks(ys)};
}

}  // namespace

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = rank;
    i = j;
  }
  return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("pearson: length mismatch");
  if (x.empty()) return 0.0;
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("spearman: length mismatch");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

CorrelationReport spearman_permutation_test(std::span<const double> x, std::span<const double> y,
                                            const PermutationOptions& options) {
  if (x.size() != y.size()) throw InvalidArgument("spearman: length mismatch");
  if (x.size() < 3) throw InvalidArgument("insufficient pairs");
  const Centered cx = centered_ranks(x);
  Centered cy = centered_ranks(y);

  CorrelationReport report;
  report.n_pairs = x.size();
  report.coefficient = centered_corr(cx, cy.values, cy.norm);
  if (cx.norm == 0.0 || cy.norm == 0.0) {
    report.p_value = 1.0;
    return report;
  }
  std::mt19937_64 rng(options.seed);
  std::size_t extreme = 0;
  const double observed = std::abs(report.coefficient) - kTieEpsilon;
  for (std::size_t b = 0; b < options.shuffles; ++b) {
    shuffle(cy.values, rng);
    if (std::abs(centered_corr(cx, cy.values, cy.norm)) >= observed) ++extreme;
  }
  report.p_value = static_cast<double>(extreme + 1) / static_cast<double>(options.shuffles + 1);
  return report;
}

std::vector<double> selection_scores(int n, std::span<const int> order) {
  // rank N + 1 for unselected sentences maps to score 0.
  std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
  int rank = 1;
  for (int index : order) {
    if (index < 1 || index > n) {
      throw InvalidArgument("selection index " + std::to_string(index) + " out of range");
    }
    scores[static_cast<std::size_t>(index - 1)] = static_cast<double>(n + 1 - rank);
    ++rank;
  }
  return scores;
}

CorrelationReport centrality_selection_correlation(const CentralityScores& scores,
                                                   const SelectionResult& selection,
                                                   const PermutationOptions& options) {
  if (scores.size() < 3) throw InvalidArgument("insufficient pairs");
  if (selection.order.empty()) throw InvalidArgument("insufficient pairs: empty selection");
  const auto ys = selection_scores(scores.size(), selection.order);
  return spearman_permutation_test(scores.values, ys, options);
}

CorrelationReport corpus_centrality_selection_correlation(
    std::span<const CentralityScores> scores, std::span<const SelectionResult> selections,
    const PermutationOptions& options) {
  if (scores.size() != selections.size()) {
    throw InvalidArgument("corpus correlation: scores and selections differ in length");
  }
  std::vector<DocumentPair> docs;
  CorrelationReport report;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].size() < 3 || selections[i].order.empty()) continue;
    docs.push_back(make_pair(scores[i], selections[i]));
    report.n_pairs += static_cast<std::size_t>(scores[i].size());
  }
  if (docs.empty()) throw InvalidArgument("insufficient pairs");

  auto mean_stat = [&] {
    double sum = 0.0;
    for (const auto& d : docs) sum += centered_corr(d.centrality, d.selection.values, d.selection.norm);
    return sum / static_cast<double>(docs.size());
  };
  report.coefficient = mean_stat();

  std::mt19937_64 rng(options.seed);
  std::size_t extreme = 0;
  const double observed = std::abs(report.coefficient) - kTieEpsilon;
  for (std::size_t b = 0; b < options.shuffles; ++b) {
    for (auto& d : docs) shuffle(d.selection.values, rng);
    if (std::abs(mean_stat()) >= observed) ++extreme;
  }
  report.p_value = static_cast<double>(extreme + 1) / static_cast<double>(options.shuffles + 1);
  return report;
}

}  // namespace graphsum
