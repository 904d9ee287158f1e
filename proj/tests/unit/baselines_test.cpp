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

#include <algorithm>
#include <numeric>
#include <random>

#include "graphsum/baselines.hpp"
#include "graphsum/corpus.hpp"
#include "graphsum/error.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace graphsum {
namespace {

SimilarityMatrix star(int n, double weight = 1.0) {
  std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = 1.0;
  for (int i = 1; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = weight;
    v[static_cast<std::size_t>(i * n)] = weight;
  }
  return SimilarityMatrix::from_values(n, v);
}

TEST(BaselineTest, MethodNames) {
  EXPECT_EQ(parse_baseline_method("lead"), BaselineMethod::kLead);
  EXPECT_EQ(parse_baseline_method("textrank"), BaselineMethod::kTextRank);
  EXPECT_EQ(parse_baseline_method("lexrank"), BaselineMethod::kLexRank);
  EXPECT_EQ(to_string(BaselineMethod::kLexRank), "lexrank");
  EXPECT_THROW(parse_baseline_method("random"), InvalidArgument);
}

TEST(LeadTest, TakesFirstSentences) {
  const auto doc = testing::fixed_document();
  EXPECT_EQ(lead(doc, 3).indices, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(lead(doc, 10).indices.size(), 6u);
}

TEST(TopKTest, TiesGoToLowerIndex) {
  const std::vector<double> scores = {0.2, 0.5, 0.5, 0.1, 0.5};
  EXPECT_EQ(top_k(scores, 2), (std::vector<int>{2, 3}));
  EXPECT_EQ(top_k(scores, 4), (std::vector<int>{1, 2, 3, 5}));
  EXPECT_EQ(top_k(scores, 9).size(), 5u);
}

TEST(TextRankTest, StarCenterMatchesClosedForm) {
  const int n = 4;
  const double d = 0.85;
  // c = (1-d)/n + d*(n-1)*l and l = (1-d)/n + d*c/(n-1).
  const double base = (1 - d) / n;
  const double c = (base + d * (n - 1) * base) / (1 - d * d);
  const double l = base + d * c / (n - 1);
  const auto result = textrank(star(n), 1);
  EXPECT_EQ(result.indices, (std::vector<int>{1}));
  EXPECT_NEAR(result.scores[0], c, 1e-5);
  for (int i = 1; i < n; ++i) EXPECT_NEAR(result.scores[static_cast<std::size_t>(i)], l, 1e-5);
}

TEST(TextRankTest, TwoNodesTie) {
  const auto sim = SimilarityMatrix::from_values(2, {1.0, 0.5, 0.5, 1.0});
  const auto result = textrank(sim, 1);
  EXPECT_NEAR(result.scores[0], 0.5, 1e-12);
  EXPECT_NEAR(result.scores[1], 0.5, 1e-12);
  EXPECT_EQ(result.indices, (std::vector<int>{1}));
}

TEST(TextRankTest, NoPositiveWeightIsUniform) {
  const auto sim = SimilarityMatrix::from_values(3, {1, -0.2, 0, -0.2, 1, -0.5, 0, -0.5, 1});
  for (double s : textrank(sim, 1).scores) EXPECT_NEAR(s, 1.0 / 3, 1e-12);
}

TEST(LexRankTest, CompleteGraphIsUniform) {
  std::vector<double> v(25, 0.9);
  for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>(i * 6)] = 1.0;
  const auto result = lexrank(SimilarityMatrix::from_values(5, v), 0.1, 2);
  for (double s : result.scores) EXPECT_NEAR(s, 0.2, 1e-9);
  EXPECT_EQ(result.indices, (std::vector<int>{1, 2}));
}

TEST(LexRankTest, DisjointCliquesShareMassBySize) {
  // Cliques {1,2,3} and {4,5}.
  std::vector<double> v(25, 0.0);
  auto set = [&](int a, int b) {
    v[static_cast<std::size_t>(a * 5 + b)] = 0.9;
    v[static_cast<std::size_t>(b * 5 + a)] = 0.9;
  };
  set(0, 1), set(0, 2), set(1, 2), set(3, 4);
  for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>(i * 6)] = 1.0;
  const auto result = lexrank(SimilarityMatrix::from_values(5, v), 0.5, 2);
  for (double s : result.scores) EXPECT_NEAR(s, 0.2, 1e-6);
}

TEST(LexRankTest, ThresholdIsStrict) {
  const auto sim = star(4, 0.5);
  const auto at = lexrank(sim, 0.5, 1);
  for (double s : at.scores) EXPECT_NEAR(s, 0.25, 1e-12);
  const auto below = lexrank(sim, 0.49, 1);
  EXPECT_GT(below.scores[0], below.scores[1]);
}

TEST(PowerIterationTest, RejectsBadInput) {
  const std::vector<double> bad = {1.0, 0.0, 0.0};
  EXPECT_THROW(power_iteration(bad, 2), InvalidArgument);
}

class BaselineOracleTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(BaselineOracleTest, MatchesDenseEigenSolver) {
  std::mt19937_64 rng(GetParam());
  for (int round = 0; round < 20; ++round) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const auto sim = testing::random_similarity(rng, n);
    PowerIterationOptions tight;
    tight.tolerance = 1e-13;
    tight.max_iterations = 10000;
    const auto tr = textrank(sim, 3, tight);
    const auto tr_oracle = testing::dense_pagerank(testing::textrank_transition(sim), n);
    const auto lr = lexrank(sim, 0.3, 3, tight);
    const auto lr_oracle = testing::dense_pagerank(testing::lexrank_transition(sim, 0.3), n);
    for (int i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      EXPECT_NEAR(tr.scores[u], tr_oracle[u], 1e-9);
      EXPECT_NEAR(lr.scores[u], lr_oracle[u], 1e-9);
    }
    EXPECT_NEAR(std::accumulate(tr.scores.begin(), tr.scores.end(), 0.0), 1.0, 1e-9);
  }
}

TEST_P(BaselineOracleTest, ScoresArePermutationEquivariant) {
  std::mt19937_64 rng(GetParam());
  for (int round = 0; round < 20; ++round) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const auto sim = testing::random_similarity(rng, n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> permuted(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        permuted[static_cast<std::size_t>(i * n + j)] =
            sim(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      }
    }
    const auto psim = SimilarityMatrix::from_values(n, permuted);
    const auto a = textrank(sim, 1);
    const auto b = textrank(psim, 1);
    const auto la = lexrank(sim, 0.4, 1);
    const auto lb = lexrank(psim, 0.4, 1);
    for (int i = 0; i < n; ++i) {
      const auto src = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
      EXPECT_NEAR(b.scores[static_cast<std::size_t>(i)], a.scores[src], 1e-9);
      EXPECT_NEAR(lb.scores[static_cast<std::size_t>(i)], la.scores[src], 1e-9);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, BaselineOracleTest, ::testing::Values(1u, 2u, 3u));

}  // namespace
}  // namespace graphsum
