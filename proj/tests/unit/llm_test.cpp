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

#include <atomic>
#include <thread>

#include "graphsum/error.hpp"
#include "graphsum/llm.hpp"
#include "graphsum/prompting.hpp"
#include "graphsum/transport.hpp"
#include "json.hpp"
#include "local_server.hpp"
#include "synthetic.hpp"

namespace graphsum {
namespace {

using nlohmann::json;
using std::chrono::milliseconds;

TEST(ParseSelectionTest, PlainObject) {
  const auto r = parse_selection(R"({"selected_sentences": [3, 1, 5]})", 6);
  EXPECT_EQ(r.indices, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(r.order, (std::vector<int>{3, 1, 5}));
  EXPECT_TRUE(r.dropped.empty());
  EXPECT_EQ(r.raw_response, R"({"selected_sentences": [3, 1, 5]})");
}

TEST(ParseSelectionTest, ObjectEmbeddedInProse) {
  const auto r = parse_selection(
      "Sure! Here is my answer {\"note\": \"a } brace\"}\n```json\n"
      "{ \"selected_sentences\": [2, 4] }\n```",
      5);
  EXPECT_EQ(r.indices, (std::vector<int>{2, 4}));
}

TEST(ParseSelectionTest, NestedObject) {
  const auto r = parse_selection(R"({"result": {"selected_sentences": [1]}})", 3);
  EXPECT_EQ(r.indices, (std::vector<int>{1}));
}

TEST(ParseSelectionTest, OutOfRangeAndDuplicatesAndMalformed) {
  const auto r = parse_selection(R"({"selected_sentences": [2, 2, 0, 9, "3", 4.0, 1.5, "x"]})", 5);
  EXPECT_EQ(r.order, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(r.dropped, (std::vector<int>{0, 9}));
  EXPECT_EQ(r.malformed, (std::vector<std::string>{"1.5", "\"x\""}));
}

TEST(ParseSelectionTest, Errors) {
  EXPECT_THROW(parse_selection("I pick sentences 1 and 2.", 3), ParseError);
  EXPECT_THROW(parse_selection(R"({"selected_sentences": []})", 3), ParseError);
  EXPECT_THROW(parse_selection(R"({"selected_sentences": 1})", 3), ParseError);
  EXPECT_THROW(parse_selection(R"({"selected_sentences": [1]})", 0), InvalidArgument);
  try {
    parse_selection("nothing", 3);
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unparseable selection: nothing"), std::string::npos);
  }
}

TEST(ParseSelectionTest, RoundTripsSerializedSelections) {
  const std::vector<int> picks = {4, 1, 7};
  const auto r = parse_selection(serialize_selection(picks), 7);
  EXPECT_EQ(r.order, picks);
}

TEST(RestrictToVisibleTest, MovesHiddenIndicesToDropped) {
  auto r = parse_selection(R"({"selected_sentences": [5, 1, 3]})", 6);
  const std::vector<int> visible = {1, 2, 3};
  restrict_to_visible(r, visible);
  EXPECT_EQ(r.order, (std::vector<int>{1, 3}));
  EXPECT_EQ(r.indices, (std::vector<int>{1, 3}));
  EXPECT_EQ(r.dropped, (std::vector<int>{5}));
}

TEST(MockProviderTest, FirstKFromPromptText) {
  const auto doc = testing::fixed_document();
  const auto g = build_tag(testing::fixed_similarity(), 0.5);
  CompletionRequest request;
  request.prompt = render_cgm(doc, g, 0.5, 2).text;
  MockLlmProvider mock(MockMode::kFirstK);
  EXPECT_EQ(mock.send(request), R"({"selected_sentences":[1,2]})");
  EXPECT_EQ(mock.name(), "mock:first-k");
}

TEST(MockProviderTest, FirstKNeverSelectsMaskedSentences) {
  const auto doc = testing::fixed_document();
  const auto g = build_tag(testing::fixed_similarity(), 0.5);
  const auto prompt = render_cgm(doc, g, 0.8, 6);
  CompletionRequest request;
  request.prompt = prompt.text;
  MockLlmProvider mock(MockMode::kFirstK);
  const auto r = parse_selection(mock.send(request), doc.size());
  EXPECT_EQ(r.indices, prompt.included_indices);
}

TEST(MockProviderTest, TopCentralityUsesHints) {
  CompletionRequest request;
  request.hints = PromptHints{2, {1, 2, 3, 4}, {0.1, 0.9, 0.5, 0.9}};
  MockLlmProvider mock(MockMode::kTopCentrality);
  EXPECT_EQ(mock.send(request), R"({"selected_sentences":[2,4]})");
  request.hints->centrality.clear();
  EXPECT_THROW(mock.send(request), InvalidArgument);
  request.prompt = "no guideline here";
  request.hints.reset();
  EXPECT_THROW(MockLlmProvider(MockMode::kFirstK).send(request), Error);
}

TEST(WireFormatTest, EncodesChatAndPlainRequests) {
  CompletionRequest request;
  request.prompt = "hello";
  const auto chat = json::parse(
      HttpLlmProvider::encode_request(request, WireShape::kOpenAiChat, "m1"));
  EXPECT_EQ(chat["model"], "m1");
  EXPECT_EQ(chat["messages"][0]["role"], "user");
  EXPECT_EQ(chat["messages"][0]["content"], "hello");
  EXPECT_EQ(chat["temperature"], 0.0);
  EXPECT_EQ(chat["top_p"], 1.0);
  EXPECT_EQ(chat["max_tokens"], 100);
  request.model_id = "override";
  const auto plain = json::parse(
      HttpLlmProvider::encode_request(request, WireShape::kPlainCompletion, "m1"));
  EXPECT_EQ(plain["model"], "override");
  EXPECT_EQ(plain["prompt"], "hello");
  EXPECT_FALSE(plain.contains("messages"));
}

TEST(WireFormatTest, DecodesResponses) {
  EXPECT_EQ(HttpLlmProvider::decode_response(
                R"({"choices":[{"message":{"role":"assistant","content":"ok"}}]})",
                WireShape::kOpenAiChat),
            "ok");
  EXPECT_EQ(HttpLlmProvider::decode_response(R"({"text":"ok"})", WireShape::kPlainCompletion),
            "ok");
  EXPECT_THROW(HttpLlmProvider::decode_response("<html>", WireShape::kOpenAiChat), Error);
  EXPECT_THROW(HttpLlmProvider::decode_response(R"({"choices":[]})", WireShape::kOpenAiChat),
               Error);
  EXPECT_THROW(HttpLlmProvider::decode_response(R"({"choices":[{}]})", WireShape::kOpenAiChat),
               Error);
  EXPECT_THROW(HttpLlmProvider::decode_response(R"({"txt":"x"})", WireShape::kPlainCompletion),
               Error);
}

// Provider that fails a fixed number of times before answering.
class FlakyProvider : public LlmProvider {
 public:
  FlakyProvider(int failures, int status) : failures_(failures), status_(status) {}
  std::string send(const CompletionRequest&) override {
    ++calls;
    if (calls <= failures_) raise_for_status(HttpResponse{status_, ""}, "completion");
    return R"({"selected_sentences":[1]})";
  }
  std::string name() const override { return "flaky"; }
  std::optional<int> context_limit() const override { return limit; }

  int calls = 0;
  std::optional<int> limit;

 private:
  int failures_;
  int status_;
};

TEST(CompleteTest, RetriesWithExponentialBackoff) {
  FlakyProvider flaky(2, 429);
  std::vector<milliseconds> waits;
  RetryPolicy policy{3, milliseconds(100), 2.0};
  EXPECT_EQ(complete({}, flaky, policy, [&](milliseconds d) { waits.push_back(d); }),
            R"({"selected_sentences":[1]})");
  EXPECT_EQ(flaky.calls, 3);
  EXPECT_EQ(waits, (std::vector<milliseconds>{milliseconds(100), milliseconds(200)}));
}

TEST(CompleteTest, ExhaustedBudgetReportsAttempts) {
  FlakyProvider flaky(5, 503);
  try {
    complete({}, flaky, RetryPolicy{3, milliseconds(0), 2.0}, [](milliseconds) {});
    FAIL();
  } catch (const TransportError& e) {
    EXPECT_EQ(e.attempts(), 3);
    EXPECT_EQ(e.status(), 503);
    EXPECT_TRUE(e.retryable());
  }
  EXPECT_EQ(flaky.calls, 3);
}

TEST(CompleteTest, AuthAndClientErrorsAreNotRetried) {
  FlakyProvider auth(5, 403);
  EXPECT_THROW(complete({}, auth, RetryPolicy{}, [](milliseconds) {}), AuthError);
  EXPECT_EQ(auth.calls, 1);
  FlakyProvider bad(5, 400);
  try {
    complete({}, bad, RetryPolicy{}, [](milliseconds) {});
    FAIL();
  } catch (const TransportError& e) {
    EXPECT_FALSE(e.retryable());
    EXPECT_NE(std::string(e.what()).find("HTTP 400"), std::string::npos);
  }
  EXPECT_EQ(bad.calls, 1);
}

TEST(CompleteTest, ContextLimitCheckedBeforeSending) {
  FlakyProvider flaky(0, 200);
  flaky.limit = 3;
  CompletionRequest request;
  request.prompt = "one two three four";
  EXPECT_THROW(complete(request, flaky), InvalidArgument);
  EXPECT_EQ(flaky.calls, 0);
}

TEST(RetryPolicyTest, BackoffGrowsGeometrically) {
  RetryPolicy p{5, milliseconds(1000), 2.0};
  EXPECT_EQ(p.backoff_after(1), milliseconds(1000));
  EXPECT_EQ(p.backoff_after(3), milliseconds(4000));
}

TEST(RaiseForStatusTest, Classification) {
  EXPECT_NO_THROW(raise_for_status({200, ""}, "x"));
  EXPECT_NO_THROW(raise_for_status({204, ""}, "x"));
  EXPECT_THROW(raise_for_status({401, ""}, "x"), AuthError);
  for (int status : {0, 408, 429, 500, 503}) {
    try {
      raise_for_status({status, ""}, "x");
      FAIL();
    } catch (const TransportError& e) {
      EXPECT_TRUE(e.retryable()) << status;
    }
  }
  try {
    raise_for_status({404, ""}, "x");
    FAIL();
  } catch (const TransportError& e) {
    EXPECT_FALSE(e.retryable());
  }
}

TEST(RequestGateTest, BoundsConcurrency) {
  RequestGate gate(2);
  std::atomic<int> active{0};
  std::atomic<int> peak{0};
  std::vector<std::jthread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      auto permit = gate.acquire();
      const int now = ++active;
      int expected = peak.load();
      while (now > expected && !peak.compare_exchange_weak(expected, now)) {
      }
      std::this_thread::sleep_for(milliseconds(5));
      --active;
    });
  }
  threads.clear();
  EXPECT_LE(peak.load(), 2);
  EXPECT_EQ(gate.in_flight(), 0u);
}

TEST(RequestGateTest, PerMinuteCapWaitsForWindow) {
  auto now = RequestGate::Clock::time_point{};
  std::vector<milliseconds> waits;
  RequestGate gate(
      4, 2, [&] { return now; },
      [&](milliseconds d) {
        waits.push_back(d);
        now += d;
      });
  { auto p = gate.acquire(); }
  now += std::chrono::seconds(10);
  { auto p = gate.acquire(); }
  { auto p = gate.acquire(); }
  ASSERT_EQ(waits.size(), 1u);
  EXPECT_EQ(waits[0], milliseconds(50000));
}

class HttpLlmTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.server().Post("/v1/chat", [this](const httplib::Request& req, httplib::Response& res) {
      ++calls_;
      last_body_ = req.body;
      last_auth_ = req.get_header_value("Authorization");
      if (calls_ <= fail_first_) {
        res.status = 500;
        return;
      }
      json out;
      out["choices"] = {{{"message", {{"role", "assistant"}, {"content", reply_}}}}};
      res.set_content(out.dump(), "application/json");
    });
    server_.server().Post("/v1/plain", [this](const httplib::Request&, httplib::Response& res) {
      ++calls_;
      res.set_content(json{{"text", reply_}}.dump(), "application/json");
    });
    server_.start();
  }

  testing::LocalServer server_;
  std::atomic<int> calls_{0};
  int fail_first_ = 0;
  std::string reply_ = R"({"selected_sentences": [2]})";
  std::string last_body_;
  std::string last_auth_;
};

TEST_F(HttpLlmTest, ChatRoundTrip) {
  HttpLlmConfig config;
  config.url = server_.url("/v1/chat");
  config.model = "test-model";
  config.auth_token = "tok";
  HttpLlmProvider provider(config, make_http_transport());
  CompletionRequest request;
  request.prompt = "pick";
  EXPECT_EQ(provider.send(request), reply_);
  EXPECT_EQ(json::parse(last_body_)["model"], "test-model");
  EXPECT_EQ(last_auth_, "Bearer tok");
}

TEST_F(HttpLlmTest, ServerErrorsAreRetriedByComplete) {
  fail_first_ = 1;
  HttpLlmConfig config;
  config.url = server_.url("/v1/chat");
  HttpLlmProvider provider(config, make_http_transport());
  EXPECT_EQ(complete({}, provider, RetryPolicy{3, milliseconds(0), 2.0}, [](milliseconds) {}),
            reply_);
  EXPECT_EQ(calls_.load(), 2);
}

TEST_F(HttpLlmTest, PlainCompletionShape) {
  HttpLlmConfig config;
  config.url = server_.url("/v1/plain");
  config.wire = WireShape::kPlainCompletion;
  HttpLlmProvider provider(config, make_http_transport());
  EXPECT_EQ(provider.send({}), reply_);
  EXPECT_EQ(provider.name(), "plain");
}

}  // namespace
}  // namespace graphsum
