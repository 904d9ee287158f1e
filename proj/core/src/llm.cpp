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


#include "graphsum/llm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <regex>

#include "graphsum/error.hpp"
#include "graphsum/prompting.hpp"
#include "json.hpp"

namespace graphsum {
namespace {

using nlohmann::json;

constexpr std::string_view kSelectionKey = "selected_sentences";

// Hints recovered from prompt text: k from the guideline, visible sentence
// numbers from lines starting with "Sentence <i>".
PromptHints hints_from_text(const std::string& prompt) {
  PromptHints hints;
  static const std::regex guideline(R"(select (\d+) key sentences)");
  std::smatch m;
  if (!std::regex_search(prompt, m, guideline)) {
    throw Error("mock provider: no \"select <k> key sentences\" guideline in prompt");
  }
  hints.k = std::stoi(m[1].str());
  static const std::regex line(R"((^|\n)Sentence (\d+)[ :(\n])");
  for (auto it = std::sregex_iterator(prompt.begin(), prompt.end(), line);
       it != std::sregex_iterator(); ++it) {
    hints.included_indices.push_back(std::stoi((*it)[2].str()));
  }
  std::sort(hints.included_indices.begin(), hints.included_indices.end());
  hints.included_indices.erase(
      std::unique(hints.included_indices.begin(), hints.included_indices.end()),
      hints.included_indices.end());
  if (hints.included_indices.empty()) {
    throw Error("mock provider: prompt lists no sentences");
  }
  return hints;
}

// Position just past the '}' matching the '{' at `open`, or npos.
std::size_t match_brace(std::string_view text, std::size_t open) {
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i + 1;
    }
  }
  return std::string_view::npos;
}

std::optional<json> find_selection_array(std::string_view raw) {
  for (std::size_t open = raw.find('{'); open != std::string_view::npos;
       open = raw.find('{', open + 1)) {
    const std::size_t close = match_brace(raw, open);
    if (close == std::string_view::npos) continue;
    json object = json::parse(raw.substr(open, close - open), nullptr, false);
    if (object.is_discarded() || !object.is_object()) continue;
    auto it = object.find(kSelectionKey);
    if (it != object.end() && it->is_array()) return *it;
  }
  return std::nullopt;
}

// Integer value of a selection entry, if it denotes one.
std::optional<long long> entry_as_integer(const json& entry) {
  if (entry.is_number_integer()) return entry.get<long long>();
  if (entry.is_number_float()) {
    const double v = entry.get<double>();
    if (std::isfinite(v) && std::floor(v) == v && std::abs(v) < 1e15) {
      return static_cast<long long>(v);
    }
    return std::nullopt;
  }
  if (entry.is_string()) {
    static const std::regex digits(R"(\s*(-?\d{1,15})\s*)");
    std::smatch m;
    const std::string s = entry.get<std::string>();
    if (std::regex_match(s, m, digits)) return std::stoll(m[1].str());
  }
  return std::nullopt;
}

void push_unique(std::vector<int>& v, int value) {
  if (std::find(v.begin(), v.end(), value) == v.end()) v.push_back(value);
}

}  // namespace

std::string MockLlmProvider::send(const CompletionRequest& request) {
  const PromptHints hints = request.hints ? *request.hints : hints_from_text(request.prompt);
  if (hints.k < 1) throw InvalidArgument("mock provider: k must be >= 1");
  std::vector<int> pick = hints.included_indices;
  if (mode_ == MockMode::kTopCentrality) {
    if (hints.centrality.empty()) {
      throw InvalidArgument("mock top-centrality mode needs centrality hints");
    }
    auto score = [&](int i) { return hints.centrality.at(static_cast<std::size_t>(i - 1)); };
    std::stable_sort(pick.begin(), pick.end(),
                     [&](int a, int b) { return score(a) > score(b); });
  }
  if (pick.size() > static_cast<std::size_t>(hints.k)) {
    pick.resize(static_cast<std::size_t>(hints.k));
  }
  return serialize_selection(pick);
}

std::string MockLlmProvider::name() const {
  return mode_ == MockMode::kFirstK ? "mock:first-k" : "mock:top-centrality";
}

HttpLlmProvider::HttpLlmProvider(HttpLlmConfig config, std::shared_ptr<HttpTransport> transport,
                                 RequestGate::Now now, Sleeper sleep)
    : config_(std::move(config)),
      transport_(std::move(transport)),
      gate_(config_.max_in_flight, config_.per_minute_cap, std::move(now), std::move(sleep)) {}

std::string HttpLlmProvider::name() const {
  return config_.wire == WireShape::kOpenAiChat ? "openai-chat" : "plain";
}

std::string HttpLlmProvider::encode_request(const CompletionRequest& request, WireShape wire,
                                            const std::string& model) {
  nlohmann::ordered_json body;
  body["model"] = request.model_id.empty() ? model : request.model_id;
  if (wire == WireShape::kOpenAiChat) {
    body["messages"] = nlohmann::ordered_json::array(
        {{{"role", "user"}, {"content", request.prompt}}});
  } else {
    body["prompt"] = request.prompt;
  }
  body["temperature"] = request.temperature;
  body["top_p"] = request.top_p;
  body["max_tokens"] = request.max_tokens;
  return body.dump();
}

std::string HttpLlmProvider::decode_response(const std::string& body, WireShape wire) {
  const json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded()) throw Error("completion response is not JSON");
  if (wire == WireShape::kOpenAiChat) {
    const auto choices = parsed.find("choices");
    if (choices == parsed.end() || !choices->is_array() || choices->empty()) {
      throw Error("completion response has no choices");
    }
    const auto& message = (*choices)[0].value("message", json::object());
    const auto content = message.find("content");
    if (content == message.end() || !content->is_string()) {
      throw Error("completion response has no message content");
    }
    return content->get<std::string>();
  }
  const auto text = parsed.find("text");
  if (text == parsed.end() || !text->is_string()) {
    throw Error("completion response has no \"text\" field");
  }
  return text->get<std::string>();
}

std::string HttpLlmProvider::send(const CompletionRequest& request) {
  const std::string body = encode_request(request, config_.wire, config_.model);
  HttpHeaders headers;
  if (!config_.auth_token.empty()) {
    headers.emplace_back("Authorization", "Bearer " + config_.auth_token);
  }
  HttpResponse response;
  {
    auto permit = gate_.acquire();
    response = transport_->post(config_.url, body, headers);
  }
  raise_for_status(response, "completion request");
  return decode_response(response.body, config_.wire);
}

std::string complete(const CompletionRequest& request, LlmProvider& provider,
                     const RetryPolicy& policy, const Sleeper& sleep) {
  if (const auto limit = provider.context_limit()) {
    const int tokens = estimate_tokens(request.prompt);
    if (tokens > *limit) {
      throw InvalidArgument("prompt of ~" + std::to_string(tokens) +
                            " tokens exceeds the context limit of " + std::to_string(*limit));
    }
  }
  return with_retry(policy, sleep, [&] { return provider.send(request); });
}

SelectionResult parse_selection(std::string_view raw, int n) {
  if (n < 1) throw InvalidArgument("parse_selection: n must be >= 1");
  const auto array = find_selection_array(raw);
  if (!array) throw ParseError("unparseable selection: " + std::string(raw));
  if (array->empty()) throw ParseError("empty selection");

  SelectionResult result;
  result.raw_response = std::string(raw);
  for (const auto& entry : *array) {
    const auto value = entry_as_integer(entry);
    if (!value) {
      result.malformed.push_back(entry.dump());
    } else if (*value < 1 || *value > n) {
      const long long clamped = std::clamp<long long>(
          *value, std::numeric_limits<int>::min(), std::numeric_limits<int>::max());
      push_unique(result.dropped, static_cast<int>(clamped));
    } else {
      push_unique(result.order, static_cast<int>(*value));
    }
  }
  result.indices = result.order;
  std::sort(result.indices.begin(), result.indices.end());
  return result;
}

std::string serialize_selection(std::span<const int> indices) {
  json out;
  out[std::string(kSelectionKey)] = std::vector<int>(indices.begin(), indices.end());
  return out.dump();
}

void restrict_to_visible(SelectionResult& result, std::span<const int> visible) {
  auto hidden = [&](int i) { return !std::binary_search(visible.begin(), visible.end(), i); };
  for (int i : result.order) {
    if (hidden(i)) push_unique(result.dropped, i);
  }
  std::erase_if(result.order, hidden);
  std::erase_if(result.indices, hidden);
}

}  // namespace graphsum
