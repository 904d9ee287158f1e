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

#include <memory>
#include <optional>

#include "graphsum/config.hpp"
#include "graphsum/corpus.hpp"
#include "graphsum/embedding.hpp"
#include "graphsum/graph.hpp"
#include "graphsum/llm.hpp"
#include "graphsum/prompting.hpp"

namespace graphsum {

struct Providers {
  EmbeddingProvider& embedding;
  LlmProvider& llm;
};

// Intermediate artifacts kept when RunConfig::audit is set.
struct PipelineAudit {
  SimilarityMatrix similarity;
  TextAttributedGraph graph;
  CentralityScores centrality;
};

struct PipelineResult {
  SelectionResult selection;
  PromptArtifact prompt;
  std::optional<PipelineAudit> audit;
};

// embed -> similarity_matrix -> build_tag -> render -> complete ->
// parse_selection. Indices the prompt did not show are moved to `dropped`.
// Any failure is rethrown as StageError naming the stage and document.
PipelineResult run_pipeline(const Document& doc, const RunConfig& config, Providers providers);

// Same, starting from a precomputed similarity matrix (embedding skipped).
PipelineResult run_pipeline(const Document& doc, const SimilarityMatrix& sim,
                            const RunConfig& config, LlmProvider& llm);

// Renders the configured strategy for a document.
PromptArtifact render_prompt(const Document& doc, const SimilarityMatrix& sim,
                             const TextAttributedGraph& g, const CentralityScores& scores,
                             Strategy strategy, int k, double rho);

// Providers described by the settings. Remote providers read credentials
// from the environment variable named in the settings.
std::unique_ptr<EmbeddingProvider> make_embedding_provider(const EmbeddingSettings& settings);
std::unique_ptr<LlmProvider> make_llm_provider(const LlmSettings& settings);

RetryPolicy retry_policy(const LlmSettings& settings);

}  // namespace graphsum
