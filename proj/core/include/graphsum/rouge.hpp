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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphsum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// 2PR / (P + R), or 0 when P + R == 0.
RougeScore make_rouge_score(double precision, double recall);

// ROUGE tokenization: lowercase, split on any non-alphanumeric run, no
// stemming or stopword removal (identical to word_tokens).
std::vector<std::string> rouge_tokens(std::string_view text);

// Clipped n-gram overlap. Throws InvalidArgument when the reference has no
// tokens or n < 1. A side with fewer than n tokens contributes 0.
RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n);
RougeScore rouge_n(std::span<const std::string> candidate,
                   std::span<const std::string> reference, int n);

// LCS-based ROUGE-L over tokens. Throws InvalidArgument when the reference
// has no tokens.
RougeScore rouge_l(std::string_view candidate, std::string_view reference);
RougeScore rouge_l(std::span<const std::string> candidate,
                   std::span<const std::string> reference);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace graphsum
