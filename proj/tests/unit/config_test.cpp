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

#include <filesystem>
#include <fstream>

#include "graphsum/config.hpp"
#include "graphsum/error.hpp"

namespace graphsum {
namespace {

std::string error_of(std::string_view json, const ConfigOverrides& o = {}) {
  try {
    config_from_json(json, o);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

TEST(ProfileTest, BuiltInValues) {
  const auto& pubmed = find_profile("pubmed");
  EXPECT_EQ(pubmed.k, 7);
  EXPECT_EQ(pubmed.theta, 0.7);
  EXPECT_EQ(pubmed.rho, 0.8);
  const auto& arxiv = find_profile("arxiv");
  EXPECT_EQ(arxiv.k, 7);
  EXPECT_EQ(arxiv.theta, 0.6);
  EXPECT_EQ(arxiv.rho, 0.8);
  const auto& multinews = find_profile("multinews");
  EXPECT_EQ(multinews.k, 9);
  EXPECT_EQ(multinews.theta, 0.7);
  EXPECT_EQ(multinews.rho, 0.7);
  EXPECT_EQ(dataset_profiles().size(), 3u);
  EXPECT_THROW(find_profile("cnn"), InvalidArgument);
}

TEST(LoadConfigTest, DefaultsComeFromPubmedProfile) {
  const auto c = load_config(std::nullopt);
  EXPECT_EQ(c.profile, "pubmed");
  EXPECT_EQ(c.k, 7);
  EXPECT_EQ(c.theta, 0.7);
  EXPECT_EQ(c.rho, 0.8);
  EXPECT_EQ(c.strategy, Strategy::kVanilla);
  EXPECT_EQ(c.llm.temperature, 0.0);
  EXPECT_EQ(c.llm.top_p, 1.0);
  EXPECT_EQ(c.llm.max_tokens, 100);
  EXPECT_EQ(c.seed, 42u);
}

TEST(LoadConfigTest, FlagsOverrideFileOverrideProfile) {
  const std::string file = R"({"profile": "multinews", "theta": 0.65, "strategy": "nap",
                               "llm": {"max_attempts": 5}})";
  const auto from_file = config_from_json(file);
  EXPECT_EQ(from_file.k, 9);
  EXPECT_EQ(from_file.theta, 0.65);
  EXPECT_EQ(from_file.rho, 0.7);
  EXPECT_EQ(from_file.strategy, Strategy::kNap);
  EXPECT_EQ(from_file.llm.max_attempts, 5);

  ConfigOverrides o;
  o.theta = 0.5;
  o.strategy = "cgm";
  o.k = 3;
  const auto flagged = config_from_json(file, o);
  EXPECT_EQ(flagged.k, 3);
  EXPECT_EQ(flagged.theta, 0.5);
  EXPECT_EQ(flagged.strategy, Strategy::kCgm);

  ConfigOverrides profile_only;
  profile_only.profile = "arxiv";
  EXPECT_EQ(config_from_json(R"({"profile": "pubmed"})", profile_only).theta, 0.6);
}

TEST(LoadConfigTest, ErrorsNameFieldAndConstraint) {
  ConfigOverrides bad_theta;
  bad_theta.theta = 1.5;
  EXPECT_EQ(error_of("{}", bad_theta), "config field \"theta\" must lie in [0, 1)");
  EXPECT_EQ(error_of(R"({"k": 0})"), "config field \"k\" must be >= 1");
  EXPECT_EQ(error_of(R"({"rho": 0})"), "config field \"rho\" must lie in (0, 1]");
  EXPECT_EQ(error_of(R"({"k": "7"})"), "config field \"k\" must be a number");
  EXPECT_EQ(error_of(R"({"k": 7.5})"), "config field \"k\" must be an integer");
  EXPECT_EQ(error_of(R"({"colour": 1})"), "config field \"colour\" is not a known option");
  EXPECT_EQ(error_of(R"({"llm": {"tempo": 1}})"), "config field \"llm.tempo\" is not a known option");
  EXPECT_EQ(error_of(R"({"strategy": "fancy"})"),
            "config field \"strategy\" must be one of vanilla|nap|cap|cgm|tnl|nam|bam");
  EXPECT_EQ(error_of(R"({"llm": {"provider": "openai-chat"}})"),
            "config field \"llm.url\" is required for remote providers");
  EXPECT_EQ(error_of(R"({"embedding": {"provider": "http"}})"),
            "config field \"embedding.url\" is required for the http provider");
  EXPECT_EQ(error_of(R"({"profile": "cnn"})"),
            "config field \"profile\" must be one of pubmed|arxiv|multinews");
  EXPECT_EQ(error_of("[1]"), "config file must hold a JSON object");
  EXPECT_EQ(error_of("{"), "config file is not valid JSON");
}

TEST(LoadConfigTest, ReadsFileFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "graphsum-config-test.json";
  {
    std::ofstream out(path);
    out << R"({"k": 4, "audit": true})";
  }
  const auto c = load_config(path);
  EXPECT_EQ(c.k, 4);
  EXPECT_TRUE(c.audit);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(std::filesystem::path("/nonexistent.json")), Error);
}

TEST(ConfigJsonTest, EchoRoundTripsAndHashIsStable) {
  ConfigOverrides o;
  o.strategy = "cap";
  o.seed = 7;
  const auto c = load_config(std::nullopt, o);
  const std::string echoed = config_to_json(c);
  EXPECT_EQ(config_from_json(echoed), c);
  EXPECT_EQ(config_hash(c), config_hash(config_from_json(echoed)));
  EXPECT_EQ(config_hash(c).size(), 16u);
  auto other = c;
  other.k = 8;
  EXPECT_NE(config_hash(other), config_hash(c));
}

}  // namespace
}  // namespace graphsum
