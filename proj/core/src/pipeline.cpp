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


#include "graphsum/pipeline.hpp"

#include <cstdlib>

#include "graphsum/error.hpp"

namespace graphsum {
namespace {

template <typename F>
auto stage(const char* name, const Document& doc, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, doc.id, e.what());
  }
}

std::string env_or_empty(const std::string& name) {
  if (name.empty()) return {};
  const char* value = std::getenv(name.c_str());
  return value == nullptr ? std::string() : std::string(value);
}

}  // namespace

PromptArtifact render_prompt(const Document& doc, const SimilarityMatrix& sim,
                             const TextAttributedGraph& g, const CentralityScores& scores,
                             Strategy strategy, int k, double rho) {
  switch (strategy) {
    case Strategy::kVanilla:
      return render_vanilla(doc, k);
    case Strategy::kNap:
      return render_nap(doc, g, k);
    case Strategy::kCap:
      return render_cap(doc, scores, k);
    case Strategy::kCgm:
      return render_cgm(doc, g, rho, k);
    case Strategy::kTnl:
    case Strategy::kNam:
    case Strategy::kBam:
      return render_structure_only(g, &sim, strategy, k);
  }
  throw InvalidArgument("unhandled strategy");
}

PipelineResult run_pipeline(const Document& doc, const SimilarityMatrix& sim,
                            const RunConfig& config, LlmProvider& llm) {
  auto graph = stage("graph", doc, [&] { return build_tag(sim, config.theta); });
  auto scores = degree_centrality(graph);
  auto prompt = stage("prompt", doc, [&] {
    return render_prompt(doc, sim, graph, scores, config.strategy, config.k, config.rho);
  });

  CompletionRequest request;
  request.prompt = prompt.text;
  request.temperature = config.llm.temperature;
  request.top_p = config.llm.top_p;
  request.max_tokens = config.llm.max_tokens;
  request.model_id = config.llm.model;
  request.hints = PromptHints{config.k, prompt.included_indices, scores.values};

  const std::string raw =
      stage("complete", doc, [&] { return complete(request, llm, retry_policy(config.llm)); });
  auto selection = stage("parse", doc, [&] { return parse_selection(raw, doc.size()); });
  restrict_to_visible(selection, prompt.included_indices);

  PipelineResult result{std::move(selection), std::move(prompt), std::nullopt};
  if (config.audit) {
    result.audit = PipelineAudit{sim, std::move(graph), std::move(scores)};
  }
  return result;
}

PipelineResult run_pipeline(const Document& doc, const RunConfig& config, Providers providers) {
  auto vectors = stage("embed", doc, [&] { return embed(doc.sentences, providers.embedding); });
  auto sim = stage("similarity", doc, [&] { return similarity_matrix(vectors); });
  return run_pipeline(doc, sim, config, providers.llm);
}

RetryPolicy retry_policy(const LlmSettings& settings) {
  RetryPolicy policy;
  policy.max_attempts = settings.max_attempts;
  policy.backoff_base = std::chrono::milliseconds(settings.backoff_ms);
  return policy;
}

std::unique_ptr<EmbeddingProvider> make_embedding_provider(const EmbeddingSettings& settings) {
  if (settings.provider == "hash") return std::make_unique<HashedBagOfTokensProvider>();
  if (settings.provider == "http") {
    HttpEmbeddingConfig config;
    config.url = settings.url;
    config.model = settings.model;
    config.auth_token = env_or_empty(settings.token_env);
    config.batch_size = static_cast<std::size_t>(settings.batch_size);
    config.max_in_flight = static_cast<std::size_t>(settings.max_in_flight);
    return std::make_unique<HttpEmbeddingProvider>(std::move(config), make_http_transport());
  }
  throw InvalidArgument("unknown embedding provider \"" + settings.provider + "\"");
}

std::unique_ptr<LlmProvider> make_llm_provider(const LlmSettings& settings) {
  if (settings.provider == "mock:first-k") {
    return std::make_unique<MockLlmProvider>(MockMode::kFirstK);
  }
  if (settings.provider == "mock:top-centrality") {
    return std::make_unique<MockLlmProvider>(MockMode::kTopCentrality);
  }
  if (settings.provider == "openai-chat" || settings.provider == "plain") {
    HttpLlmConfig config;
    config.url = settings.url;
    config.model = settings.model;
    config.auth_token = env_or_empty(settings.token_env);
    config.wire = settings.provider == "plain" ? WireShape::kPlainCompletion
                                               : WireShape::kOpenAiChat;
    config.max_in_flight = static_cast<std::size_t>(settings.max_in_flight);
    config.per_minute_cap = static_cast<std::size_t>(settings.per_minute_cap);
    if (settings.context_limit > 0) config.context_limit = settings.context_limit;
    return std::make_unique<HttpLlmProvider>(std::move(config), make_http_transport());
  }
  throw InvalidArgument("unknown llm provider \"" + settings.provider + "\"");
}

}  // namespace graphsum
