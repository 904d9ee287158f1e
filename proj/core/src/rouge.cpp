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


#include "graphsum/rouge.hpp"

#include <algorithm>
#include <map>

#include "graphsum/error.hpp"
#include "graphsum/text.hpp"

namespace graphsum {
namespace {

using NGramCounts = std::map<std::vector<std::string_view>, int>;

NGramCounts count_ngrams(std::span<const std::string> tokens, int n) {
  NGramCounts counts;
  const auto width = static_cast<std::size_t>(n);
  if (tokens.size() < width) return counts;
  for (std::size_t i = 0; i + width <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                       tokens.begin() + static_cast<std::ptrdiff_t>(i + width));
    ++counts[std::move(gram)];
  }
  return counts;
}

}  // namespace

RougeScore make_rouge_score(double precision, double recall) {
  RougeScore s{precision, recall, 0.0};
  if (precision + recall > 0.0) s.f1 = 2.0 * precision * recall / (precision + recall);
  return s;
}

std::vector<std::string> rouge_tokens(std::string_view text) { return word_tokens(text); }

RougeScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference,
                   int n) {
  if (n < 1) throw InvalidArgument("rouge_n: n must be >= 1");
  if (reference.empty()) throw InvalidArgument("rouge: reference is empty");
  const auto cand = count_ngrams(candidate, n);
  const auto ref = count_ngrams(reference, n);

  long overlap = 0;
  long cand_total = 0;
  long ref_total = 0;
  for (const auto& [gram, count] : cand) cand_total += count;
  for (const auto& [gram, count] : ref) {
    ref_total += count;
    if (auto it = cand.find(gram); it != cand.end()) overlap += std::min(count, it->second);
  }
  const double precision = cand_total > 0 ? static_cast<double>(overlap) / cand_total : 0.0;
  const double recall = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
  return make_rouge_score(precision, recall);
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n) {
  const auto c = rouge_tokens(candidate);
  const auto r = rouge_tokens(reference);
  return rouge_n(c, r, n);
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  // Two rolling rows of the standard DP table.
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  if (reference.empty()) throw InvalidArgument("rouge: reference is empty");
  if (candidate.empty()) return {};
  const auto lcs = static_cast<double>(lcs_length(candidate, reference));
  return make_rouge_score(lcs / static_cast<double>(candidate.size()),
                          lcs / static_cast<double>(reference.size()));
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
  const auto c = rouge_tokens(candidate);
  const auto r = rouge_tokens(reference);
  return rouge_l(c, r);
}

}  // namespace graphsum
