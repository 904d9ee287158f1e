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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphsum/correlation.hpp"
#include "graphsum/error.hpp"

namespace graphsum {
namespace {

TEST(RankTest, TiesShareAverageRank) {
  const std::vector<double> v = {3, 1, 3, 2};
  EXPECT_EQ(average_ranks(v), (std::vector<double>{3.5, 1, 3.5, 2}));
  const std::vector<double> same = {5, 5, 5};
  EXPECT_EQ(average_ranks(same), (std::vector<double>{2, 2, 2}));
}

TEST(CorrelationTest, PearsonAndSpearman) {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  const std::vector<double> cubic = {1, 8, 27, 64, 125};
  const std::vector<double> reversed = {5, 4, 3, 2, 1};
  const std::vector<double> flat = {2, 2, 2, 2, 2};
  EXPECT_NEAR(spearman(x, cubic), 1.0, 1e-12);
  EXPECT_LT(pearson(x, cubic), 1.0);
  EXPECT_NEAR(spearman(x, reversed), -1.0, 1e-12);
  EXPECT_EQ(spearman(x, flat), 0.0);
  EXPECT_EQ(pearson(flat, x), 0.0);
  const std::vector<double> y = {2, 1, 4, 3, 5};
  // 1 - 6 * sum(d^2) / (n (n^2 - 1)) with sum(d^2) = 4.
  EXPECT_NEAR(spearman(x, y), 1.0 - 6.0 * 4 / (5 * 24), 1e-12);
  const std::vector<double> short_y = {1, 2};
  EXPECT_THROW(pearson(x, short_y), InvalidArgument);
}

TEST(SelectionScoreTest, EarlierPicksScoreHigher) {
  const std::vector<int> order = {3, 1};
  EXPECT_EQ(selection_scores(5, order), (std::vector<double>{4, 0, 5, 0, 0}));
  EXPECT_THROW(selection_scores(2, std::vector<int>{3}), InvalidArgument);
}

TEST(PermutationTest, DeterministicAndBounded) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> x(12), y(12);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = u(rng);
    y[i] = x[i] + 0.3 * u(rng);
  }
  PermutationOptions options;
  options.shuffles = 2000;
  const auto a = spearman_permutation_test(x, y, options);
  const auto b = spearman_permutation_test(x, y, options);
  EXPECT_EQ(a.p_value, b.p_value);
  EXPECT_EQ(a.coefficient, spearman(x, y));
  EXPECT_EQ(a.n_pairs, 12u);
  EXPECT_GE(a.p_value, 1.0 / 2001);
  EXPECT_LE(a.p_value, 1.0);
  // p-values are multiples of 1 / (shuffles + 1).
  const double count = a.p_value * 2001;
  EXPECT_NEAR(count, std::round(count), 1e-9);
}

TEST(PermutationTest, PerfectMonotoneIsSignificant) {
  const std::vector<double> x = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto r = spearman_permutation_test(x, x);
  EXPECT_DOUBLE_EQ(r.coefficient, 1.0);
  EXPECT_LT(r.p_value, 0.001);
}

TEST(PermutationTest, ConstantSideHasPValueOne) {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> flat = {1, 1, 1, 1};
  PermutationOptions options;
  options.shuffles = 100;
  const auto r = spearman_permutation_test(x, flat, options);
  EXPECT_EQ(r.coefficient, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
}

TEST(CentralityCorrelationTest, CentralPicksCorrelatePositively) {
  CentralityScores scores{{0.8, 0.2, 0.6, 0.0, 0.4}};
  SelectionResult chosen;
  chosen.order = {1, 3, 5};
  chosen.indices = {1, 3, 5};
  PermutationOptions options;
  options.shuffles = 500;
  const auto r = centrality_selection_correlation(scores, chosen, options);
  EXPECT_GT(r.coefficient, 0.8);
  EXPECT_EQ(r.n_pairs, 5u);

  CentralityScores two{{0.5, 0.5}};
  SelectionResult one;
  one.order = one.indices = {1};
  try {
    centrality_selection_correlation(two, one);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "insufficient pairs");
  }
  EXPECT_THROW(centrality_selection_correlation(scores, SelectionResult{}), InvalidArgument);
}

TEST(CentralityCorrelationTest, CorpusStatisticSkipsSmallDocuments) {
  std::vector<CentralityScores> scores = {{{0.8, 0.2, 0.6, 0.0}}, {{0.5, 0.5}},
                                          {{0.1, 0.9, 0.3}}};
  std::vector<SelectionResult> selections(3);
  selections[0].order = selections[0].indices = {1, 3};
  selections[1].order = selections[1].indices = {1};
  selections[2].order = selections[2].indices = {2};
  PermutationOptions options;
  options.shuffles = 300;
  const auto r = corpus_centrality_selection_correlation(scores, selections, options);
  const double first = centrality_selection_correlation(scores[0], selections[0]).coefficient;
  const double third = centrality_selection_correlation(scores[2], selections[2]).coefficient;
  EXPECT_NEAR(r.coefficient, (first + third) / 2, 1e-12);
  std::vector<CentralityScores> tiny = {scores[1]};
  std::vector<SelectionResult> tiny_sel = {selections[1]};
  EXPECT_THROW(corpus_centrality_selection_correlation(tiny, tiny_sel), InvalidArgument);
}

}  // namespace
}  // namespace graphsum
