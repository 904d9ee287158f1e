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

#include <string>
#include <string_view>
#include <vector>

#include "graphsum/corpus.hpp"
#include "graphsum/embedding.hpp"
#include "graphsum/graph.hpp"

namespace graphsum {

enum class Strategy { kVanilla, kNap, kCap, kCgm, kTnl, kNam, kBam };

std::string_view to_string(Strategy strategy);
// Accepts the lowercase names ("vanilla", "nap", ...). Throws InvalidArgument.
Strategy parse_strategy(std::string_view name);
bool is_structure_only(Strategy strategy);

// Version tag of the prompt templates, written into every metadata sidecar.
std::string_view prompt_template_version();

// A rendered prompt plus what it exposes. included_indices and
// masked_indices partition 1..N and are both ascending.
struct PromptArtifact {
  Strategy strategy = Strategy::kVanilla;
  std::string text;
  int k = 0;
  std::vector<int> included_indices;
  std::vector<int> masked_indices;
  int token_estimate = 0;
  // NAP/TNL only: neighbor count per rendered sentence, in index order.
  std::vector<int> neighbor_list_lengths;
};

// Prefix of sentences (highest centrality first) that reaches a fraction rho
// of the total centrality.
struct CgmSelection {
  std::vector<int> kept;  // descending centrality, ties by ascending index
  double coverage = 0.0;
  double rho = 0.0;
};

PromptArtifact render_vanilla(const Document& doc, int k);
PromptArtifact render_nap(const Document& doc, const TextAttributedGraph& g, int k);
PromptArtifact render_cap(const Document& doc, const CentralityScores& scores, int k);

// Shortest prefix of the centrality ranking whose sum is >= rho * total.
// With an all-zero score vector every index is kept. rho must lie in (0, 1].
CgmSelection cgm_select(const CentralityScores& scores, double rho);

// Shows only the CGM-kept sentences, in document order, with their original
// numbers; the rest are omitted.
PromptArtifact render_cgm(const Document& doc, const TextAttributedGraph& g, double rho,
                          int k);

// Graph-only prompts without sentence text. `sim` may be null except for
// Strategy::kNam.
PromptArtifact render_structure_only(const TextAttributedGraph& g,
                                     const SimilarityMatrix* sim, Strategy format, int k);

// Approximate token count: whitespace-separated chunks, each further split
// into maximal runs of ASCII punctuation and of everything else.
int estimate_tokens(std::string_view text);

// Two decimals, half-up (away from zero), e.g. 0.8171 -> "0.82".
std::string format_two_decimals(double value);

// JSON sidecar describing an artifact (strategy, indices, token estimate,
// template version, ...). Single line, no trailing newline.
std::string prompt_metadata_json(const PromptArtifact& artifact);

}  // namespace graphsum
