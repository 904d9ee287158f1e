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

#include <sstream>

#include "graphsum/error.hpp"
#include "graphsum/pipeline.hpp"
#include "graphsum/selection_io.hpp"
#include "synthetic.hpp"

namespace graphsum {
namespace {

class FailingEmbedder : public EmbeddingProvider {
 public:
  std::vector<EmbeddingVector> embed_batch(std::span<const std::string>) override {
    throw TransportError("embedding service down", 503, 3, true);
  }
  std::string name() const override { return "failing"; }
};

class ScriptedLlm : public LlmProvider {
 public:
  explicit ScriptedLlm(std::string reply) : reply_(std::move(reply)) {}
  std::string send(const CompletionRequest& request) override {
    last = request;
    return reply_;
  }
  std::string name() const override { return "scripted"; }
  CompletionRequest last;

 private:
  std::string reply_;
};

TEST(PipelineTest, RunsEveryStageAndKeepsAudit) {
  RunConfig config;
  config.strategy = Strategy::kCap;
  config.theta = 0.5;
  config.k = 2;
  config.audit = true;
  ScriptedLlm llm(R"({"selected_sentences": [3, 1]})");
  const auto result = run_pipeline(testing::fixed_document(), testing::fixed_similarity(),
                                   config, llm);
  EXPECT_EQ(result.selection.order, (std::vector<int>{3, 1}));
  EXPECT_EQ(result.prompt.strategy, Strategy::kCap);
  ASSERT_TRUE(result.audit.has_value());
  EXPECT_EQ(result.audit->graph.edge_count(), 4u);
  EXPECT_EQ(llm.last.temperature, 0.0);
  EXPECT_EQ(llm.last.max_tokens, 100);
  ASSERT_TRUE(llm.last.hints.has_value());
  EXPECT_EQ(llm.last.hints->k, 2);
  EXPECT_EQ(llm.last.hints->centrality.size(), 6u);
}

TEST(PipelineTest, MaskedSelectionsAreDropped) {
  RunConfig config;
  config.strategy = Strategy::kCgm;
  config.theta = 0.5;
  config.rho = 0.8;
  ScriptedLlm llm(R"({"selected_sentences": [6, 2]})");
  const auto result = run_pipeline(testing::fixed_document(), testing::fixed_similarity(),
                                   config, llm);
  EXPECT_EQ(result.selection.indices, (std::vector<int>{2}));
  EXPECT_EQ(result.selection.dropped, (std::vector<int>{6}));
  EXPECT_FALSE(result.audit.has_value());
}

TEST(PipelineTest, StageErrorsNameStageAndDocument) {
  RunConfig config;
  FailingEmbedder embedder;
  MockLlmProvider llm(MockMode::kFirstK);
  try {
    run_pipeline(testing::fixed_document(), config, Providers{embedder, llm});
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "embed");
    EXPECT_EQ(e.document_id(), "fixed");
  }
  ScriptedLlm garbage("no json here");
  try {
    run_pipeline(testing::fixed_document(), testing::fixed_similarity(), config, garbage);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "parse");
  }
}

TEST(PipelineTest, EndToEndWithHashedEmbeddings) {
  RunConfig config;
  config.strategy = Strategy::kNap;
  config.k = 3;
  HashedBagOfTokensProvider embedder;
  MockLlmProvider llm(MockMode::kFirstK);
  const auto result = run_pipeline(testing::fixed_document(), config, Providers{embedder, llm});
  EXPECT_EQ(result.selection.indices, (std::vector<int>{1, 2, 3}));
}

TEST(ProviderFactoryTest, BuildsConfiguredProviders) {
  EXPECT_EQ(make_embedding_provider(EmbeddingSettings{})->name(), "hash");
  LlmSettings llm;
  EXPECT_EQ(make_llm_provider(llm)->name(), "mock:first-k");
  llm.provider = "mock:top-centrality";
  EXPECT_EQ(make_llm_provider(llm)->name(), "mock:top-centrality");
  llm.provider = "openai-chat";
  llm.url = "http://127.0.0.1:1/v1";
  llm.context_limit = 128;
  const auto remote = make_llm_provider(llm);
  EXPECT_EQ(remote->name(), "openai-chat");
  EXPECT_EQ(remote->context_limit(), 128);
  llm.provider = "other";
  EXPECT_THROW(make_llm_provider(llm), InvalidArgument);
  EXPECT_EQ(retry_policy(LlmSettings{}).max_attempts, 3);
}

TEST(SelectionIoTest, JsonLinesRoundTrip) {
  SelectionResult r;
  r.indices = {1, 4};
  r.order = {4, 1};
  r.dropped = {9};
  r.raw_response = R"({"selected_sentences":[4,1,9]})";
  const auto with_raw = make_selection_record("d\"1", "cap", r, true);
  const auto without_raw = make_selection_record("d2", "cap", r, false);
  EXPECT_EQ(to_json_line(without_raw),
            R"({"id":"d2","strategy":"cap","indices":[1,4],"order":[4,1],"dropped":[9]})");
  std::ostringstream out;
  const std::vector<SelectionRecord> records = {with_raw, without_raw};
  write_selections(out, records);
  std::istringstream in(out.str());
  EXPECT_EQ(read_selections(in), records);
  EXPECT_EQ(to_selection_result(with_raw).order, (std::vector<int>{4, 1}));
}

TEST(SelectionIoTest, MissingOrderFallsBackToIndices) {
  std::istringstream in("{\"id\":\"a\",\"indices\":[2,3]}\n");
  const auto records = read_selections(in);
  EXPECT_EQ(to_selection_result(records[0]).order, (std::vector<int>{2, 3}));
}

TEST(SelectionIoTest, MalformedLines) {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_selections(in);
  };
  EXPECT_THROW(parse("{\"id\":\"a\"}\n"), ParseError);
  EXPECT_THROW(parse("{\"indices\":[1]}\n"), ParseError);
  EXPECT_THROW(parse("{\"id\":\"a\",\"indices\":[\"1\"]}\n"), ParseError);
  EXPECT_THROW(parse("nope\n"), ParseError);
}

}  // namespace
}  // namespace graphsum
