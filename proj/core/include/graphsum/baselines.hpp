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
#include <string_view>
#include <vector>

#include "graphsum/corpus.hpp"
#include "graphsum/embedding.hpp"

namespace graphsum {

enum class BaselineMethod { kLead, kTextRank, kLexRank };

std::string_view to_string(BaselineMethod method);
BaselineMethod parse_baseline_method(std::string_view name);

struct BaselineSelection {
  BaselineMethod method = BaselineMethod::kLead;
  std::vector<int> indices;   // top-min(k, N) by score, returned ascending
  std::vector<double> scores; // scores[i - 1] belongs to sentence i
};

// Damping 0.85; stop once the largest per-node change drops below 1e-6 or
// after 100 iterations.
struct PowerIterationOptions {
  double damping = 0.85;
  double tolerance = 1e-6;
  int max_iterations = 100;
};

// Stationary vector of  (1 - d)/n + d * P^T x  for a row-stochastic n x n
// matrix `transition` (row-major). Starts uniform; result sums to 1.
std::vector<double> power_iteration(std::span<const double> transition, int n,
                                    const PowerIterationOptions& options = {});

// Indices of the k best scores (ties: lower index first), returned ascending.
std::vector<int> top_k(std::span<const double> scores, int k);

// First min(k, N) sentences.
BaselineSelection lead(const Document& doc, int k);

// PageRank over similarity-weighted edges (negative similarities count as 0).
// A row without positive weight becomes uniform; when no off-diagonal weight
// exists at all the scores are uniform.
BaselineSelection textrank(const SimilarityMatrix& sim, int k,
                           const PowerIterationOptions& options = {});

// PageRank over the graph binarized at sim > threshold (diagonal excluded).
// Rows without edges become uniform.
BaselineSelection lexrank(const SimilarityMatrix& sim, double threshold, int k,
                          const PowerIterationOptions& options = {});

}  // namespace graphsum
