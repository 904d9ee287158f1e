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


#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphsum::testing {

std::vector<double> brute_force_degree(int n, std::span<const Edge> edges) {
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (const auto& e : edges) {
    adj[e.a - 1][e.b - 1] = 1;
    adj[e.b - 1][e.a - 1] = 1;
  }
  std::vector<double> out(n, 0.0);
  if (n == 1) return out;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 0; j < n; ++j) count += adj[i][j];
    out[i] = static_cast<double>(count) / static_cast<double>(n - 1);
  }
  return out;
}

std::size_t brute_force_edge_count(const SimilarityMatrix& sim, double theta) {
  std::size_t count = 0;
  for (int i = 0; i < sim.size(); ++i) {
    for (int j = i + 1; j < sim.size(); ++j) {
      if (sim(i, j) > theta) ++count;
    }
  }
  return count;
}

std::vector<double> dense_pagerank(const std::vector<double>& row_stochastic, int n,
                                   double damping) {
  Eigen::MatrixXd p(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) p(r, c) = row_stochastic[static_cast<std::size_t>(r * n + c)];
  }
  const Eigen::MatrixXd google =
      damping * p.transpose() + Eigen::MatrixXd::Constant(n, n, (1.0 - damping) / n);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(google);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (solver.eigenvalues()[i].real() > solver.eigenvalues()[best].real()) best = i;
  }
  const Eigen::VectorXd v = solver.eigenvectors().col(best).real();
  const double sum = v.sum();
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = v[i] / sum;
  return out;
}

namespace {

void normalize_rows(std::vector<double>& m, int n) {
  for (int r = 0; r < n; ++r) {
    double sum = 0.0;
    for (int c = 0; c < n; ++c) sum += m[r * n + c];
    for (int c = 0; c < n; ++c) {
      m[r * n + c] = sum > 0.0 ? m[r * n + c] / sum : 1.0 / n;
    }
  }
}

}  // namespace

std::vector<double> textrank_transition(const SimilarityMatrix& sim) {
  const int n = sim.size();
  std::vector<double> m(static_cast<std::size_t>(n * n), 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r != c && sim(r, c) > 0.0) m[r * n + c] = sim(r, c);
    }
  }
  normalize_rows(m, n);
  return m;
}

std::vector<double> lexrank_transition(const SimilarityMatrix& sim, double threshold) {
  const int n = sim.size();
  std::vector<double> m(static_cast<std::size_t>(n * n), 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r != c && sim(r, c) > threshold) m[r * n + c] = 1.0;
    }
  }
  normalize_rows(m, n);
  return m;
}

std::size_t brute_force_lcs(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  std::size_t best = 0;
  const std::size_t subsets = std::size_t{1} << a.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<const std::string*> pick;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (std::size_t{1} << i)) pick.push_back(&a[i]);
    }
    if (pick.size() <= best) continue;
    std::size_t j = 0;
    for (const auto& token : b) {
      if (j < pick.size() && *pick[j] == token) ++j;
    }
    if (j == pick.size()) best = pick.size();
  }
  return best;
}

std::vector<int> cgm_oracle(std::span<const double> scores, double rho) {
  const int n = static_cast<int>(scores.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a - 1] != scores[b - 1]) return scores[a - 1] > scores[b - 1];
    return a < b;
  });
  double total = 0.0;
  for (int i : order) total += scores[i - 1];
  if (total <= 0.0) return order;
  std::vector<int> kept;
  double prefix = 0.0;
  for (int i : order) {
    prefix += scores[i - 1];
    kept.push_back(i);
    if (prefix >= rho * total) break;
  }
  return kept;
}

}  // namespace graphsum::testing
