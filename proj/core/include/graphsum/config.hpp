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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphsum/prompting.hpp"

namespace graphsum {

struct EmbeddingSettings {
  std::string provider = "hash";  // "hash" | "http"
  std::string url;
  std::string model;
  std::string token_env = "GRAPHSUM_EMBEDDING_TOKEN";
  int batch_size = 32;
  int max_in_flight = 4;

  friend bool operator==(const EmbeddingSettings&, const EmbeddingSettings&) = default;
};

struct LlmSettings {
  // "mock:first-k" | "mock:top-centrality" | "openai-chat" | "plain"
  std::string provider = "mock:first-k";
  std::string url;
  std::string model = "gpt-4o-mini";
  std::string token_env = "GRAPHSUM_LLM_TOKEN";
  double temperature = 0.0;
  double top_p = 1.0;
  int max_tokens = 100;
  int max_attempts = 3;
  int backoff_ms = 1000;
  int max_in_flight = 4;
  int per_minute_cap = 0;
  int context_limit = 0;  // 0 = unknown

  friend bool operator==(const LlmSettings&, const LlmSettings&) = default;
};

struct RunConfig {
  std::string profile = "pubmed";
  int k = 7;
  double theta = 0.7;
  double rho = 0.8;
  Strategy strategy = Strategy::kVanilla;
  EmbeddingSettings embedding;
  LlmSettings llm;
  std::uint64_t seed = 42;
  bool audit = false;

  // Throws InvalidArgument naming the offending field and its constraint.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct DatasetProfile {
  std::string_view name;
  int k;
  double theta;
  double rho;
};

// Built-in profiles: pubmed (7, 0.7, 0.8), arxiv (7, 0.6, 0.8),
// multinews (9, 0.7, 0.7).
std::span<const DatasetProfile> dataset_profiles();
const DatasetProfile& find_profile(std::string_view name);

// Command-line values; set fields override everything else.
struct ConfigOverrides {
  std::optional<std::string> profile;
  std::optional<int> k;
  std::optional<double> theta;
  std::optional<double> rho;
  std::optional<std::string> strategy;
  std::optional<std::string> embedding_provider;
  std::optional<std::string> embedding_url;
  std::optional<std::string> llm_provider;
  std::optional<std::string> llm_url;
  std::optional<std::string> model;
  std::optional<std::uint64_t> seed;
  std::optional<bool> audit;
};

// Resolution order: built-in profile < config file (JSON) < overrides. The
// profile itself may come from the file or the overrides. The result is
// validated.
RunConfig load_config(const std::optional<std::filesystem::path>& file,
                      const ConfigOverrides& overrides = {});
RunConfig config_from_json(std::string_view text, const ConfigOverrides& overrides = {});

// Canonical pretty-printed JSON (stable key order). Credentials are never
// included, only the names of the environment variables holding them.
std::string config_to_json(const RunConfig& config);

// 16 hex digits of FNV-1a over config_to_json.
std::string config_hash(const RunConfig& config);

}  // namespace graphsum
