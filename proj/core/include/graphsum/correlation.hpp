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

#include <cstdint>
#include <span>
#include <vector>

#include "graphsum/graph.hpp"
#include "graphsum/llm.hpp"

namespace graphsum {

// 1-based ranks with ties sharing their average rank.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation; 0 when either side has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

// Pearson correlation of average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationReport {
  double coefficient = 0.0;
  double p_value = 1.0;
  std::size_t n_pairs = 0;
};

struct PermutationOptions {
  std::size_t shuffles = 10000;
  std::uint64_t seed = 42;
};

// Spearman coefficient with a two-sided permutation p-value
// (count(|r_perm| >= |r_obs|) + 1) / (shuffles + 1). Shuffling uses
// std::mt19937_64 with a portable Fisher-Yates, so p-values are reproducible
// across platforms for a given seed.
CorrelationReport spearman_permutation_test(std::span<const double> x,
                                            std::span<const double> y,
                                            const PermutationOptions& options = {});

// Selection score per sentence: with rank r = position in the model's output
// (1 = first) and N + 1 for unselected sentences, score = N + 1 - r. Higher
// means chosen earlier.
std::vector<double> selection_scores(int n, std::span<const int> order);

// Spearman between centrality and selection score over all N sentences, so a
// positive coefficient means central sentences are chosen, and chosen first.
// Throws InvalidArgument("insufficient pairs") for N < 3 and for an empty
// selection.
CorrelationReport centrality_selection_correlation(const CentralityScores& scores,
                                                   const SelectionResult& selection,
                                                   const PermutationOptions& options = {});

// Corpus-level statistic: mean per-document coefficient. The null
// distribution permutes selection scores within every document at once.
// Documents with N < 3 or an empty selection are skipped; throws when none
// remain.
CorrelationReport corpus_centrality_selection_correlation(
    std::span<const CentralityScores> scores, std::span<const SelectionResult> selections,
    const PermutationOptions& options = {});

}  // namespace graphsum
