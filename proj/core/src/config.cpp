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


#include "graphsum/config.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "graphsum/embedding.hpp"
#include "graphsum/error.hpp"
#include "json.hpp"

namespace graphsum {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::array<DatasetProfile, 3> kProfiles = {{
    {"pubmed", 7, 0.7, 0.8},
    {"arxiv", 7, 0.6, 0.8},
    {"multinews", 9, 0.7, 0.7},
}};

[[noreturn]] void invalid(std::string_view field, std::string_view constraint) {
  throw InvalidArgument("config field \"" + std::string(field) + "\" " + std::string(constraint));
}

template <typename T>
void read_field(const json& object, std::string_view section, const char* key, T& out) {
  const auto it = object.find(key);
  if (it == object.end()) return;
  const std::string field =
      section.empty() ? std::string(key) : std::string(section) + "." + key;
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!it->is_boolean()) invalid(field, "must be a boolean");
    } else if constexpr (std::is_arithmetic_v<T>) {
      if (!it->is_number()) invalid(field, "must be a number");
      if constexpr (std::is_integral_v<T>) {
        if (!it->is_number_integer() && !it->is_number_unsigned()) {
          invalid(field, "must be an integer");
        }
      }
    } else {
      if (!it->is_string()) invalid(field, "must be a string");
    }
    out = it->get<T>();
  } catch (const json::exception&) {
    invalid(field, "has the wrong type");
  }
}

void reject_unknown(const json& object, std::string_view section,
                    std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || k == key;
    if (!ok) {
      invalid(section.empty() ? key : std::string(section) + "." + key, "is not a known option");
    }
  }
}

void apply_profile(RunConfig& config, std::string_view name) {
  const DatasetProfile& p = find_profile(name);
  config.profile = std::string(p.name);
  config.k = p.k;
  config.theta = p.theta;
  config.rho = p.rho;
}

RunConfig resolve(const json& file, const ConfigOverrides& overrides) {
  if (!file.is_object()) throw InvalidArgument("config file must hold a JSON object");
  reject_unknown(file, "",
                 {"profile", "k", "theta", "rho", "strategy", "seed", "audit", "embedding", "llm"});

  RunConfig config;
  std::string profile = config.profile;
  read_field(file, "", "profile", profile);
  if (overrides.profile) profile = *overrides.profile;
  apply_profile(config, profile);

  read_field(file, "", "k", config.k);
  read_field(file, "", "theta", config.theta);
  read_field(file, "", "rho", config.rho);
  std::string strategy(to_string(config.strategy));
  read_field(file, "", "strategy", strategy);
  read_field(file, "", "seed", config.seed);
  read_field(file, "", "audit", config.audit);

  if (auto it = file.find("embedding"); it != file.end()) {
    if (!it->is_object()) invalid("embedding", "must be an object");
    reject_unknown(*it, "embedding",
                   {"provider", "url", "model", "token_env", "batch_size", "max_in_flight"});
    auto& e = config.embedding;
    read_field(*it, "embedding", "provider", e.provider);
    read_field(*it, "embedding", "url", e.url);
    read_field(*it, "embedding", "model", e.model);
    read_field(*it, "embedding", "token_env", e.token_env);
    read_field(*it, "embedding", "batch_size", e.batch_size);
    read_field(*it, "embedding", "max_in_flight", e.max_in_flight);
  }
  if (auto it = file.find("llm"); it != file.end()) {
    if (!it->is_object()) invalid("llm", "must be an object");
    reject_unknown(*it, "llm",
                   {"provider", "url", "model", "token_env", "temperature", "top_p",
                    "max_tokens", "max_attempts", "backoff_ms", "max_in_flight",
                    "per_minute_cap", "context_limit"});
    auto& l = config.llm;
    read_field(*it, "llm", "provider", l.provider);
    read_field(*it, "llm", "url", l.url);
    read_field(*it, "llm", "model", l.model);
    read_field(*it, "llm", "token_env", l.token_env);
    read_field(*it, "llm", "temperature", l.temperature);
    read_field(*it, "llm", "top_p", l.top_p);
    read_field(*it, "llm", "max_tokens", l.max_tokens);
    read_field(*it, "llm", "max_attempts", l.max_attempts);
    read_field(*it, "llm", "backoff_ms", l.backoff_ms);
    read_field(*it, "llm", "max_in_flight", l.max_in_flight);
    read_field(*it, "llm", "per_minute_cap", l.per_minute_cap);
    read_field(*it, "llm", "context_limit", l.context_limit);
  }

  if (overrides.k) config.k = *overrides.k;
  if (overrides.theta) config.theta = *overrides.theta;
  if (overrides.rho) config.rho = *overrides.rho;
  if (overrides.strategy) strategy = *overrides.strategy;
  if (overrides.embedding_provider) config.embedding.provider = *overrides.embedding_provider;
  if (overrides.embedding_url) config.embedding.url = *overrides.embedding_url;
  if (overrides.llm_provider) config.llm.provider = *overrides.llm_provider;
  if (overrides.llm_url) config.llm.url = *overrides.llm_url;
  if (overrides.model) config.llm.model = *overrides.model;
  if (overrides.seed) config.seed = *overrides.seed;
  if (overrides.audit) config.audit = *overrides.audit;

  try {
    config.strategy = parse_strategy(strategy);
  } catch (const InvalidArgument&) {
    invalid("strategy", "must be one of vanilla|nap|cap|cgm|tnl|nam|bam");
  }
  config.validate();
  return config;
}

}  // namespace

void RunConfig::validate() const {
  if (k < 1) invalid("k", "must be >= 1");
  if (!(theta >= 0.0 && theta < 1.0)) invalid("theta", "must lie in [0, 1)");
  if (!(rho > 0.0 && rho <= 1.0)) invalid("rho", "must lie in (0, 1]");

  if (embedding.provider != "hash" && embedding.provider != "http") {
    invalid("embedding.provider", "must be hash or http");
  }
  if (embedding.provider == "http" && embedding.url.empty()) {
    invalid("embedding.url", "is required for the http provider");
  }
  if (embedding.batch_size < 1) invalid("embedding.batch_size", "must be >= 1");
  if (embedding.max_in_flight < 1) invalid("embedding.max_in_flight", "must be >= 1");

  const auto& p = llm.provider;
  const bool mock = p == "mock:first-k" || p == "mock:top-centrality";
  if (!mock && p != "openai-chat" && p != "plain") {
    invalid("llm.provider", "must be mock:first-k, mock:top-centrality, openai-chat or plain");
  }
  if (!mock && llm.url.empty()) invalid("llm.url", "is required for remote providers");
  if (!(llm.temperature >= 0.0)) invalid("llm.temperature", "must be >= 0");
  if (!(llm.top_p > 0.0 && llm.top_p <= 1.0)) invalid("llm.top_p", "must lie in (0, 1]");
  if (llm.max_tokens < 1) invalid("llm.max_tokens", "must be >= 1");
  if (llm.max_attempts < 1) invalid("llm.max_attempts", "must be >= 1");
  if (llm.backoff_ms < 0) invalid("llm.backoff_ms", "must be >= 0");
  if (llm.max_in_flight < 1) invalid("llm.max_in_flight", "must be >= 1");
  if (llm.per_minute_cap < 0) invalid("llm.per_minute_cap", "must be >= 0");
  if (llm.context_limit < 0) invalid("llm.context_limit", "must be >= 0");
}

std::span<const DatasetProfile> dataset_profiles() { return kProfiles; }

const DatasetProfile& find_profile(std::string_view name) {
  for (const auto& p : kProfiles) {
    if (p.name == name) return p;
  }
  invalid("profile", "must be one of pubmed|arxiv|multinews");
}

RunConfig config_from_json(std::string_view text, const ConfigOverrides& overrides) {
  const json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw InvalidArgument("config file is not valid JSON");
  return resolve(parsed, overrides);
}

RunConfig load_config(const std::optional<std::filesystem::path>& file,
                      const ConfigOverrides& overrides) {
  if (!file) return resolve(json::object(), overrides);
  std::ifstream in(*file);
  if (!in) throw Error("cannot open config file " + file->string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return config_from_json(buffer.str(), overrides);
}

std::string config_to_json(const RunConfig& c) {
  ordered_json out;
  out["profile"] = c.profile;
  out["k"] = c.k;
  out["theta"] = c.theta;
  out["rho"] = c.rho;
  out["strategy"] = to_string(c.strategy);
  out["seed"] = c.seed;
  out["audit"] = c.audit;
  out["embedding"] = {{"provider", c.embedding.provider},
                      {"url", c.embedding.url},
                      {"model", c.embedding.model},
                      {"token_env", c.embedding.token_env},
                      {"batch_size", c.embedding.batch_size},
                      {"max_in_flight", c.embedding.max_in_flight}};
  out["llm"] = {{"provider", c.llm.provider},
                {"url", c.llm.url},
                {"model", c.llm.model},
                {"token_env", c.llm.token_env},
                {"temperature", c.llm.temperature},
                {"top_p", c.llm.top_p},
                {"max_tokens", c.llm.max_tokens},
                {"max_attempts", c.llm.max_attempts},
                {"backoff_ms", c.llm.backoff_ms},
                {"max_in_flight", c.llm.max_in_flight},
                {"per_minute_cap", c.llm.per_minute_cap},
                {"context_limit", c.llm.context_limit}};
  return out.dump(2) + "\n";
}

std::string config_hash(const RunConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(config_to_json(config))));
  return buf;
}

}  // namespace graphsum
