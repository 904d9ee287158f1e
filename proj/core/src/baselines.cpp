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


#include "graphsum/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphsum/error.hpp"

namespace graphsum {
namespace {

void check_k(int k) {
  if (k < 1) throw InvalidArgument("k must be >= 1, got " + std::to_string(k));
}

// Row-normalizes in place; rows summing to zero become uniform.
void make_row_stochastic(std::vector<double>& m, int n) {
  const auto size = static_cast<std::size_t>(n);
  for (std::size_t r = 0; r < size; ++r) {
    double* row = m.data() + r * size;
    const double sum = std::accumulate(row, row + size, 0.0);
    if (sum > 0.0) {
      for (std::size_t c = 0; c < size; ++c) row[c] /= sum;
    } else {
      std::fill(row, row + size, 1.0 / static_cast<double>(n));
    }
  }
}

}  // namespace

std::string_view to_string(BaselineMethod method) {
  switch (method) {
    case BaselineMethod::kLead:
      return "lead";
    case BaselineMethod::kTextRank:
      return "textrank";
    case BaselineMethod::kLexRank:
      return "lexrank";
  }
  return "?";
}

BaselineMethod parse_baseline_method(std::string_view name) {
  if (name == "lead") return BaselineMethod::kLead;
  if (name == "textrank") return BaselineMethod::kTextRank;
  if (name == "lexrank") return BaselineMethod::kLexRank;
  throw InvalidArgument("unknown baseline \"" + std::string(name) +
                        "\" (expected lead|textrank|lexrank)");
}

std::vector<double> power_iteration(std::span<const double> transition, int n,
                                    const PowerIterationOptions& options) {
  if (n < 1) throw InvalidArgument("power_iteration: n must be >= 1");
  const auto size = static_cast<std::size_t>(n);
  if (transition.size() != size * size) {
    throw InvalidArgument("power_iteration: matrix size mismatch");
  }
  const double d = options.damping;
  const double teleport = (1.0 - d) / static_cast<double>(n);

  std::vector<double> x(size, 1.0 / static_cast<double>(n));
  std::vector<double> next(size);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    std::fill(next.begin(), next.end(), teleport);
    for (std::size_t r = 0; r < size; ++r) {
      const double mass = d * x[r];
      const double* row = transition.data() + r * size;
      for (std::size_t c = 0; c < size; ++c) next[c] += mass * row[c];
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < size; ++i) delta = std::max(delta, std::abs(next[i] - x[i]));
    x.swap(next);
    if (delta < options.tolerance) break;
  }
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= total;
  return x;
}

std::vector<int> top_k(std::span<const double> scores, int k) {
  check_k(k);
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return scores[static_cast<std::size_t>(a - 1)] > scores[static_cast<std::size_t>(b - 1)];
  });
  order.resize(std::min(order.size(), static_cast<std::size_t>(k)));
  std::sort(order.begin(), order.end());
  return order;
}

BaselineSelection lead(const Document& doc, int k) {
  check_k(k);
  BaselineSelection out;
  out.method = BaselineMethod::kLead;
  const int n = doc.size();
  out.scores.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.scores[static_cast<std::size_t>(i)] = static_cast<double>(n - i) / n;
  }
  for (int i = 1; i <= std::min(k, n); ++i) out.indices.push_back(i);
  return out;
}

BaselineSelection textrank(const SimilarityMatrix& sim, int k,
                           const PowerIterationOptions& options) {
  check_k(k);
  const int n = sim.size();
  const auto size = static_cast<std::size_t>(n);
  std::vector<double> weights(size * size, 0.0);
  bool any_edge = false;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r == c) continue;
      const double w = std::max(0.0, sim(r, c));
      weights[static_cast<std::size_t>(r) * size + static_cast<std::size_t>(c)] = w;
      any_edge = any_edge || w > 0.0;
    }
  }
  BaselineSelection out;
  out.method = BaselineMethod::kTextRank;
  if (!any_edge) {
    out.scores.assign(size, 1.0 / static_cast<double>(n));
  } else {
    make_row_stochastic(weights, n);
    out.scores = power_iteration(weights, n, options);
  }
  out.indices = top_k(out.scores, k);
  return out;
}

BaselineSelection lexrank(const SimilarityMatrix& sim, double threshold, int k,
                          const PowerIterationOptions& options) {
  check_k(k);
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw InvalidArgument("lexrank threshold must lie in [0, 1)");
  }
  const int n = sim.size();
  const auto size = static_cast<std::size_t>(n);
  std::vector<double> adjacency(size * size, 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r != c && sim(r, c) > threshold) {
        adjacency[static_cast<std::size_t>(r) * size + static_cast<std::size_t>(c)] = 1.0;
      }
    }
  }
  make_row_stochastic(adjacency, n);
  BaselineSelection out;
  out.method = BaselineMethod::kLexRank;
  out.scores = power_iteration(adjacency, n, options);
  out.indices = top_k(out.scores, k);
  return out;
}

}  // namespace graphsum
