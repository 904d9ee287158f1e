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


#include "graphsum/prompting.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "graphsum/error.hpp"
#include "json.hpp"
#include "prompt_templates.hpp"

namespace graphsum {
namespace {

namespace t = templates;

constexpr std::array<std::string_view, 7> kStrategyNames = {
    "vanilla", "nap", "cap", "cgm", "tnl", "nam", "bam"};

void check_k(int k) {
  if (k < 1) throw InvalidArgument("k must be >= 1, got " + std::to_string(k));
}

std::string quoted_sentence(int index, std::string_view label_suffix, std::string_view text) {
  std::string line = "Sentence " + std::to_string(index);
  line += label_suffix;
  line += ": \"";
  line += text;
  line += '"';
  return line;
}

std::string neighbor_line(std::span<const int> adjacent) {
  std::string line(t::kNeighborsLabel);
  if (adjacent.empty()) {
    line += t::kNoNeighbors;
    return line;
  }
  line += "Sentence ";
  for (std::size_t i = 0; i < adjacent.size(); ++i) {
    if (i > 0) line += ", ";
    line += std::to_string(adjacent[i]);
  }
  return line;
}

// System instruction, guideline and optional context, each section followed
// by a blank line.
std::string preamble(std::string_view task_extra, int k, std::string_view context) {
  std::string out(t::kSystemHeader);
  out += t::kTask;
  out += task_extra;
  out += "\n\n";
  out += t::kGuidelinePrefix;
  out += std::to_string(k);
  out += t::kGuidelineSuffix;
  out += "\n\n";
  if (!context.empty()) {
    out += context;
    out += "\n\n";
  }
  return out;
}

PromptArtifact finish(Strategy strategy, int k, std::string text, int n,
                      std::vector<int> included) {
  PromptArtifact artifact;
  artifact.strategy = strategy;
  artifact.k = k;
  artifact.text = std::move(text);
  artifact.token_estimate = estimate_tokens(artifact.text);
  std::sort(included.begin(), included.end());
  std::size_t next = 0;
  for (int i = 1; i <= n; ++i) {
    if (next < included.size() && included[next] == i) {
      ++next;
    } else {
      artifact.masked_indices.push_back(i);
    }
  }
  artifact.included_indices = std::move(included);
  return artifact;
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void check_graph_matches(const Document& doc, const TextAttributedGraph& g) {
  if (g.size() != doc.size()) {
    throw InvalidArgument("graph has " + std::to_string(g.size()) + " nodes but document \"" +
                          doc.id + "\" has " + std::to_string(doc.size()) + " sentences");
  }
}

bool is_ascii_punct(unsigned char c) { return c < 0x80 && std::ispunct(c) != 0; }

}  // namespace

std::string_view to_string(Strategy strategy) {
  return kStrategyNames[static_cast<std::size_t>(strategy)];
}

Strategy parse_strategy(std::string_view name) {
  for (std::size_t i = 0; i < kStrategyNames.size(); ++i) {
    if (kStrategyNames[i] == name) return static_cast<Strategy>(i);
  }
  throw InvalidArgument("unknown strategy \"" + std::string(name) +
                        "\" (expected vanilla|nap|cap|cgm|tnl|nam|bam)");
}

bool is_structure_only(Strategy strategy) {
  return strategy == Strategy::kTnl || strategy == Strategy::kNam ||
         strategy == Strategy::kBam;
}

std::string_view prompt_template_version() { return t::kVersion; }

PromptArtifact render_vanilla(const Document& doc, int k) {
  check_k(k);
  std::string text = preamble({}, k, {});
  text += t::kSentenceListHeader;
  text += '\n';
  for (const auto& s : doc.sentences) {
    text += quoted_sentence(s.index, {}, s.text);
    text += '\n';
  }
  text += '\n';
  text += t::kOutputFormat;
  return finish(Strategy::kVanilla, k, std::move(text), doc.size(), all_indices(doc.size()));
}

PromptArtifact render_nap(const Document& doc, const TextAttributedGraph& g, int k) {
  check_k(k);
  check_graph_matches(doc, g);
  std::string text = preamble(t::kTaskNap, k, t::kContextNap);
  std::vector<int> lengths;
  lengths.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) {
    text += quoted_sentence(s.index, {}, s.text);
    text += '\n';
    text += neighbor_line(g.adjacent(s.index));
    text += "\n\n";
    lengths.push_back(g.degree(s.index));
  }
  text += t::kOutputFormat;
  auto artifact =
      finish(Strategy::kNap, k, std::move(text), doc.size(), all_indices(doc.size()));
  artifact.neighbor_list_lengths = std::move(lengths);
  return artifact;
}

PromptArtifact render_cap(const Document& doc, const CentralityScores& scores, int k) {
  check_k(k);
  if (scores.size() != doc.size()) {
    throw InvalidArgument("centrality has " + std::to_string(scores.size()) +
                          " scores but document \"" + doc.id + "\" has " +
                          std::to_string(doc.size()) + " sentences");
  }
  std::string text = preamble(t::kTaskCap, k, t::kContextCap);
  for (const auto& s : doc.sentences) {
    const std::string label = " (Centrality: " + format_two_decimals(scores.at(s.index)) + ")";
    text += quoted_sentence(s.index, label, s.text);
    text += '\n';
  }
  text += '\n';
  text += t::kOutputFormat;
  return finish(Strategy::kCap, k, std::move(text), doc.size(), all_indices(doc.size()));
}

CgmSelection cgm_select(const CentralityScores& scores, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw InvalidArgument("rho must lie in (0, 1], got " + std::to_string(rho));
  }
  for (double v : scores.values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidArgument("centrality scores must be finite and non-negative");
    }
  }
  std::vector<int> order = all_indices(scores.size());
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores.at(a) > scores.at(b); });

  double total = 0.0;
  for (int i : order) total += scores.at(i);

  CgmSelection selection;
  selection.rho = rho;
  if (total <= 0.0) {
    selection.kept = std::move(order);
    selection.coverage = 1.0;
    return selection;
  }
  const double target = rho * total;
  double prefix = 0.0;
  for (int i : order) {
    prefix += scores.at(i);
    selection.kept.push_back(i);
    if (prefix >= target) break;
  }
  selection.coverage = prefix / total;
  return selection;
}

PromptArtifact render_cgm(const Document& doc, const TextAttributedGraph& g, double rho,
                          int k) {
  check_k(k);
  check_graph_matches(doc, g);
  const CgmSelection selection = cgm_select(degree_centrality(g), rho);
  std::vector<int> kept = selection.kept;
  std::sort(kept.begin(), kept.end());

  std::string text = preamble(t::kTaskCgm, k, t::kContextCgm);
  for (int index : kept) {
    text += quoted_sentence(index, {}, doc.sentence(index).text);
    text += '\n';
  }
  text += '\n';
  text += t::kOutputFormat;
  return finish(Strategy::kCgm, k, std::move(text), doc.size(), std::move(kept));
}

PromptArtifact render_structure_only(const TextAttributedGraph& g, const SimilarityMatrix* sim,
                                     Strategy format, int k) {
  check_k(k);
  if (!is_structure_only(format)) {
    throw InvalidArgument("render_structure_only expects tnl, nam or bam");
  }
  if (sim != nullptr && sim->size() != g.size()) {
    throw InvalidArgument("similarity matrix and graph disagree on sentence count");
  }
  const int n = g.size();
  std::string text;
  std::vector<int> lengths;

  switch (format) {
    case Strategy::kTnl: {
      text = preamble(t::kTaskStructureOnly, k, t::kContextTnl);
      for (int i = 1; i <= n; ++i) {
        text += "Sentence " + std::to_string(i) + '\n';
        text += neighbor_line(g.adjacent(i));
        text += "\n\n";
        lengths.push_back(g.degree(i));
      }
      break;
    }
    case Strategy::kNam: {
      if (sim == nullptr) throw InvalidArgument("nam format requires a similarity matrix");
      text = preamble(t::kTaskStructureOnly, k, t::kContextNam);
      text += t::kNamHeader;
      text += '\n';
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          if (c > 0) text += ' ';
          text += format_two_decimals((*sim)(r, c));
        }
        text += '\n';
      }
      text += '\n';
      break;
    }
    case Strategy::kBam: {
      std::string context(t::kContextBamPrefix);
      context += format_two_decimals(g.theta());
      context += t::kContextBamSuffix;
      text = preamble(t::kTaskStructureOnly, k, context);
      text += t::kBamHeader;
      text += '\n';
      for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
          if (c > 1) text += ' ';
          text += g.has_edge(r, c) ? '1' : '0';
        }
        text += '\n';
      }
      text += '\n';
      break;
    }
    default:
      break;
  }
  text += t::kOutputFormat;
  auto artifact = finish(format, k, std::move(text), n, all_indices(n));
  artifact.neighbor_list_lengths = std::move(lengths);
  return artifact;
}

int estimate_tokens(std::string_view text) {
  int count = 0;
  bool in_chunk = false;
  bool last_punct = false;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isspace(c) != 0) {
      in_chunk = false;
      continue;
    }
    const bool punct = is_ascii_punct(c);
    if (!in_chunk || punct != last_punct) ++count;
    in_chunk = true;
    last_punct = punct;
  }
  return count;
}

std::string format_two_decimals(double value) {
  const bool negative = value < 0.0;
  const auto cents = static_cast<long long>(std::floor(std::abs(value) * 100.0 + 0.5 + 1e-9));
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", (negative && cents > 0) ? "-" : "",
                cents / 100, cents % 100);
  return buf;
}

std::string prompt_metadata_json(const PromptArtifact& artifact) {
  nlohmann::ordered_json meta;
  meta["strategy"] = to_string(artifact.strategy);
  meta["template_version"] = prompt_template_version();
  meta["k"] = artifact.k;
  meta["included_indices"] = artifact.included_indices;
  meta["masked_indices"] = artifact.masked_indices;
  meta["token_estimate"] = artifact.token_estimate;
  if (!artifact.neighbor_list_lengths.empty()) {
    meta["neighbor_list_lengths"] = artifact.neighbor_list_lengths;
    meta["max_neighbor_list_length"] = *std::max_element(
        artifact.neighbor_list_lengths.begin(), artifact.neighbor_list_lengths.end());
  }
  return meta.dump();
}

}  // namespace graphsum
