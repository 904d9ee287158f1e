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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphsum/corpus.hpp"
#include "graphsum/transport.hpp"

namespace graphsum {

// Dense sentence vector. Construction rejects empty or non-finite input.
class EmbeddingVector {
 public:
  explicit EmbeddingVector(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t dim() const { return values_.size(); }
  double norm() const;

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  // One vector per input, order-aligned. Must be safe to call concurrently.
  virtual std::vector<EmbeddingVector> embed_batch(
      std::span<const std::string> texts) = 0;
  virtual std::string name() const = 0;
};

// Offline deterministic provider: each word token (see word_tokens) is hashed
// with FNV-1a 64 into one of 256 buckets; bucket counts are L2-normalized.
// A text with no word token hashes its trimmed self as the single token.
class HashedBagOfTokensProvider final : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDim = 256;

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) override;
  std::string name() const override { return "hash"; }

  static EmbeddingVector embed_one(std::string_view text);
};

std::uint64_t fnv1a64(std::string_view bytes);

struct HttpEmbeddingConfig {
  std::string url;
  std::string auth_token;  // sent as "Authorization: Bearer <token>" if set
  std::string model;       // optional, forwarded as "model"
  std::size_t batch_size = 32;
  std::size_t max_in_flight = 4;
  std::optional<std::size_t> expected_dim;
  RetryPolicy retry;
};

// Remote embedding endpoint.
//   request:  {"inputs": ["s1", "s2", ...], "model": "..."?}
//   response: {"embeddings": [[f, f, ...], ...]}
// Batches are sent concurrently (bounded by max_in_flight) and reassembled in
// input order.
class HttpEmbeddingProvider final : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(HttpEmbeddingConfig config,
                        std::shared_ptr<HttpTransport> transport,
                        Sleeper sleep = real_sleeper());

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) override;
  std::string name() const override { return "http"; }

 private:
  std::vector<EmbeddingVector> send_batch(std::span<const std::string> texts);

  HttpEmbeddingConfig config_;
  std::shared_ptr<HttpTransport> transport_;
  Sleeper sleep_;
  RequestGate gate_;
};

// Embeds the sentences in order; throws Error on a count or dimension
// mismatch.
std::vector<EmbeddingVector> embed(std::span<const Sentence> sentences,
                                   EmbeddingProvider& provider);

// dot(u, v) / (|u| |v|). Throws InvalidArgument on a dimension mismatch and
// Error("undefined similarity") when either vector is all-zero.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

// Symmetric n x n cosine matrix with unit diagonal, stored row-major.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;

  // Checks symmetry, unit diagonal and the [-1, 1] range within 1e-9.
  static SimilarityMatrix from_values(int n, std::vector<double> row_major);

  int size() const { return n_; }
  // 0-based row/column access.
  double operator()(int row, int col) const {
    return values_[static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(col)];
  }
  // 1-based sentence indices.
  double similarity(int i, int j) const { return (*this)(i - 1, j - 1); }
  std::span<const double> row(int r) const {
    return std::span<const double>(values_).subspan(
        static_cast<std::size_t>(r) * static_cast<std::size_t>(n_),
        static_cast<std::size_t>(n_));
  }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

// Normalizes each vector once, then fills the upper triangle with dot
// products and mirrors it. Zero vectors raise Error naming the sentence.
SimilarityMatrix similarity_matrix(std::span<const EmbeddingVector> vectors);

}  // namespace graphsum
