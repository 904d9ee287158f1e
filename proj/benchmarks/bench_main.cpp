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


#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "graphsum/baselines.hpp"
#include "graphsum/corpus.hpp"
#include "graphsum/embedding.hpp"
#include "graphsum/graph.hpp"
#include "graphsum/prompting.hpp"
#include "graphsum/rouge.hpp"

namespace {

std::vector<std::string> random_sentences(int n, std::uint64_t seed) {
  static const char* words[] = {"graph", "node", "edge", "summary", "sentence", "model",
                                "prompt", "token", "score", "rank", "cluster", "signal"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 11);
  std::uniform_int_distribution<int> length(8, 24);
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    std::string s;
    for (int w = length(rng); w > 0; --w) {
      s += words[pick(rng)];
      s += w == 1 ? "." : " ";
    }
    out.push_back(std::move(s));
  }
  return out;
}

graphsum::SimilarityMatrix similarity_for(int n) {
  graphsum::HashedBagOfTokensProvider provider;
  const auto texts = random_sentences(n, 1);
  return graphsum::similarity_matrix(provider.embed_batch(texts));
}

void BM_SimilarityMatrix(benchmark::State& state) {
  graphsum::HashedBagOfTokensProvider provider;
  const auto vectors = provider.embed_batch(random_sentences(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(graphsum::similarity_matrix(vectors));
}
BENCHMARK(BM_SimilarityMatrix)->Arg(50)->Arg(200)->Arg(400);

void BM_BuildGraph(benchmark::State& state) {
  const auto sim = similarity_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graphsum::build_tag(sim, 0.7));
}
BENCHMARK(BM_BuildGraph)->Arg(50)->Arg(200)->Arg(400);

void BM_RenderCgm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto doc = graphsum::make_document("bench", random_sentences(n, 3));
  const auto sim = similarity_for(n);
  const auto g = graphsum::build_tag(sim, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(graphsum::render_cgm(doc, g, 0.8, 7));
}
BENCHMARK(BM_RenderCgm)->Arg(100)->Arg(400);

void BM_RougeL(benchmark::State& state) {
  const auto texts = random_sentences(40, 4);
  std::string candidate, reference;
  for (int i = 0; i < 20; ++i) {
    candidate += texts[static_cast<std::size_t>(i)] + " ";
    reference += texts[static_cast<std::size_t>(i + 20)] + " ";
  }
  for (auto _ : state) benchmark::DoNotOptimize(graphsum::rouge_l(candidate, reference));
}
BENCHMARK(BM_RougeL);

void BM_TextRank(benchmark::State& state) {
  const auto sim = similarity_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graphsum::textrank(sim, 7));
}
BENCHMARK(BM_TextRank)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
