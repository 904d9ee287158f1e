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


#include "graphsum/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "graphsum/error.hpp"

namespace graphsum {
namespace {

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta < 1.0)) {
    throw InvalidArgument("theta must lie in [0, 1), got " + std::to_string(theta));
  }
}

}  // namespace

TextAttributedGraph::TextAttributedGraph(int n, double theta, std::vector<Edge> edges)
    : n_(n), theta_(theta), edges_(std::move(edges)) {
  if (n < 1) throw InvalidArgument("graph needs at least one node");
  check_theta(theta);
  for (auto& e : edges_) {
    if (e.a == e.b) throw InvalidArgument("self-loop on node " + std::to_string(e.a));
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 1 || e.b > n) {
      throw InvalidArgument("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                            ") out of range 1.." + std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("duplicate edge");
  }
  adjacency_.resize(static_cast<std::size_t>(n));
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.a - 1)].push_back(e.b);
    adjacency_[static_cast<std::size_t>(e.b - 1)].push_back(e.a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool TextAttributedGraph::has_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) return false;
  const auto list = adjacent(i);
  return std::binary_search(list.begin(), list.end(), j);
}

double CentralityScores::at(int index) const {
  if (index < 1 || index > size()) {
    throw InvalidArgument("centrality index " + std::to_string(index) + " out of range");
  }
  return values[static_cast<std::size_t>(index - 1)];
}

TextAttributedGraph build_tag(const SimilarityMatrix& sim, double theta) {
  check_theta(theta);
  const int n = sim.size();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sim(i, j) > theta) edges.push_back(Edge{i + 1, j + 1});
    }
  }
  return TextAttributedGraph(n, theta, std::move(edges));
}

CentralityScores degree_centrality(const TextAttributedGraph& g) {
  CentralityScores scores;
  const int n = g.size();
  scores.values.assign(static_cast<std::size_t>(n), 0.0);
  if (n == 1) return scores;
  const double denom = static_cast<double>(n - 1);
  for (int i = 1; i <= n; ++i) {
    scores.values[static_cast<std::size_t>(i - 1)] = static_cast<double>(g.degree(i)) / denom;
  }
  return scores;
}

std::vector<int> neighbors(const TextAttributedGraph& g, int index) {
  if (index < 1 || index > g.size()) {
    throw InvalidArgument("node index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(g.size()));
  }
  const auto list = g.adjacent(index);
  return {list.begin(), list.end()};
}

GraphStats graph_stats(const TextAttributedGraph& g) {
  GraphStats stats;
  stats.n = g.size();
  stats.edge_count = g.edge_count();
  if (stats.n >= 2) {
    stats.density = static_cast<double>(stats.edge_count) /
                    (static_cast<double>(stats.n) * static_cast<double>(stats.n - 1));
  }
  return stats;
}

void write_graph(std::ostream& out, const TextAttributedGraph& g) {
  char theta[64];
  std::snprintf(theta, sizeof(theta), "%.17g", g.theta());
  out << "n " << g.size() << '\n' << "theta " << theta << '\n';
  for (const auto& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

TextAttributedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_number = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() != '#') return true;
    }
    return false;
  };

  int n = 0;
  double theta = 0.0;
  std::string key;
  if (!next_line()) throw ParseError("graph file is empty");
  {
    std::istringstream header(line);
    if (!(header >> key >> n) || key != "n") throw ParseError("expected \"n <count>\"", line_number);
  }
  if (!next_line()) throw ParseError("missing theta line", line_number);
  {
    std::istringstream header(line);
    if (!(header >> key >> theta) || key != "theta") {
      throw ParseError("expected \"theta <value>\"", line_number);
    }
  }
  std::vector<Edge> edges;
  while (next_line()) {
    std::istringstream row(line);
    Edge e;
    std::string extra;
    if (!(row >> e.a >> e.b) || (row >> extra)) {
      throw ParseError("expected \"<a> <b>\"", line_number);
    }
    edges.push_back(e);
  }
  try {
    return TextAttributedGraph(n, theta, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace graphsum
