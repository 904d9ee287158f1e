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

#include <iosfwd>
#include <span>
#include <vector>

#include "graphsum/embedding.hpp"

namespace graphsum {

// Undirected edge between 1-based sentence indices, stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sentence graph: nodes 1..n, an edge wherever similarity exceeded theta.
// Edges are kept sorted and unique; per-node adjacency lists are derived from
// them at construction.
class TextAttributedGraph {
 public:
  // Normalizes edge orientation and order. Throws InvalidArgument on
  // self-loops, duplicate pairs, out-of-range endpoints or theta outside
  // [0, 1).
  TextAttributedGraph(int n, double theta, std::vector<Edge> edges);

  int size() const { return n_; }
  double theta() const { return theta_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Unchecked 1-based access to the sorted adjacency list.
  std::span<const int> adjacent(int index) const {
    return adjacency_[static_cast<std::size_t>(index - 1)];
  }
  int degree(int index) const { return static_cast<int>(adjacent(index).size()); }
  bool has_edge(int i, int j) const;

 private:
  int n_;
  double theta_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Normalized degree centrality per sentence; values[i - 1] belongs to
// sentence i.
struct CentralityScores {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  // 1-based; throws InvalidArgument when out of range.
  double at(int index) const;
};

struct GraphStats {
  int n = 0;
  std::size_t edge_count = 0;
  double density = 0.0;
};

// Edge {i, j} iff sim(i, j) > theta, strictly. theta must lie in [0, 1).
TextAttributedGraph build_tag(const SimilarityMatrix& sim, double theta);

// degree(i) / (n - 1); a single-node graph scores 0.
CentralityScores degree_centrality(const TextAttributedGraph& g);

// Checked copy of the adjacency list of sentence `index` (1-based).
std::vector<int> neighbors(const TextAttributedGraph& g, int index);

// density = |E| / (n (n - 1)) for n >= 2, else 0.
GraphStats graph_stats(const TextAttributedGraph& g);

// Text format:
//   n <count>
//   theta <value>
//   <a> <b>        one line per edge
void write_graph(std::ostream& out, const TextAttributedGraph& g);
TextAttributedGraph read_graph(std::istream& in);

}  // namespace graphsum
