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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphsum/transport.hpp"

namespace graphsum {

// Side information a prompt was rendered from. Remote providers ignore it;
// the mock provider reads it instead of re-parsing the prompt text.
struct PromptHints {
  int k = 0;
  std::vector<int> included_indices;  // ascending
  std::vector<double> centrality;     // indexed by sentence - 1, may be empty
};

// Decoding defaults: temperature 0, top_p 1.0, max_tokens 100.
struct CompletionRequest {
  std::string prompt;
  double temperature = 0.0;
  double top_p = 1.0;
  int max_tokens = 100;
  std::string model_id;
  std::optional<PromptHints> hints;
};

class LlmProvider {
 public:
  virtual ~LlmProvider() = default;
  // One attempt, no retries. Throws TransportError / AuthError. Must be safe
  // to call concurrently.
  virtual std::string send(const CompletionRequest& request) = 0;
  virtual std::string name() const = 0;
  // Prompt budget in estimate_tokens units, when known.
  virtual std::optional<int> context_limit() const { return std::nullopt; }
};

enum class MockMode { kFirstK, kTopCentrality };

// Deterministic offline provider replying {"selected_sentences":[...]}.
//   first-k:        the first k visible sentences, in index order
//   top-centrality: the k visible sentences with the highest centrality,
//                   listed best first (ties by ascending index)
// Without hints, first-k recovers k and the visible sentence numbers from the
// prompt text; top-centrality requires hints with centrality.
class MockLlmProvider final : public LlmProvider {
 public:
  explicit MockLlmProvider(MockMode mode) : mode_(mode) {}

  std::string send(const CompletionRequest& request) override;
  std::string name() const override;

 private:
  MockMode mode_;
};

enum class WireShape { kOpenAiChat, kPlainCompletion };

struct HttpLlmConfig {
  std::string url;
  std::string model;
  std::string auth_token;
  WireShape wire = WireShape::kOpenAiChat;
  std::size_t max_in_flight = 4;
  std::size_t per_minute_cap = 0;  // 0 = unlimited
  std::optional<int> context_limit;
};

// Remote chat/completion endpoint. Wire formats:
//   kOpenAiChat request:
//     {"model": m, "messages": [{"role": "user", "content": prompt}],
//      "temperature": t, "top_p": p, "max_tokens": n}
//   kOpenAiChat response: {"choices": [{"message": {"content": "..."}}]}
//   kPlainCompletion request:
//     {"model": m, "prompt": prompt, "temperature": t, "top_p": p,
//      "max_tokens": n}
//   kPlainCompletion response: {"text": "..."}
class HttpLlmProvider final : public LlmProvider {
 public:
  HttpLlmProvider(HttpLlmConfig config, std::shared_ptr<HttpTransport> transport,
                  RequestGate::Now now = [] { return RequestGate::Clock::now(); },
                  Sleeper sleep = real_sleeper());

  std::string send(const CompletionRequest& request) override;
  std::string name() const override;
  std::optional<int> context_limit() const override { return config_.context_limit; }

  static std::string encode_request(const CompletionRequest& request, WireShape wire,
                                    const std::string& model);
  static std::string decode_response(const std::string& body, WireShape wire);

 private:
  HttpLlmConfig config_;
  std::shared_ptr<HttpTransport> transport_;
  RequestGate gate_;
};

// Sends with retries per `policy`. Fails before any network call when the
// prompt exceeds the provider's context limit.
std::string complete(const CompletionRequest& request, LlmProvider& provider,
                     const RetryPolicy& policy = {}, const Sleeper& sleep = real_sleeper());

struct SelectionResult {
  std::vector<int> indices;  // ascending, unique, all within 1..n
  std::vector<int> order;    // same indices, in the order the model listed them
  std::vector<int> dropped;  // integers rejected (out of range or not visible)
  std::vector<std::string> malformed;  // non-integer entries, as JSON text
  std::string raw_response;

  friend bool operator==(const SelectionResult&, const SelectionResult&) = default;
};

// Extracts the first JSON object holding "selected_sentences", tolerating
// surrounding prose and code fences. Duplicates are removed, out-of-range
// entries go to `dropped`. Throws ParseError("unparseable selection") when no
// such object exists and ParseError("empty selection") for an empty list.
SelectionResult parse_selection(std::string_view raw, int n);

// {"selected_sentences":[...]} for the given indices.
std::string serialize_selection(std::span<const int> indices);

// Moves every index not in `visible` (ascending) from indices/order to
// dropped.
void restrict_to_visible(SelectionResult& result, std::span<const int> visible);

}  // namespace graphsum
