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


#include "graphsum/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "graphsum/error.hpp"
#include "graphsum/text.hpp"
#include "json.hpp"

namespace graphsum {
namespace {

using nlohmann::json;

constexpr double kTolerance = 1e-9;

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

void check_uniform_dim(std::span<const EmbeddingVector> vectors) {
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].dim() != vectors[0].dim()) {
      throw Error("embedding dimension mismatch: vector " + std::to_string(i + 1) +
                  " has dim " + std::to_string(vectors[i].dim()) + ", expected " +
                  std::to_string(vectors[0].dim()));
    }
  }
}

}  // namespace

EmbeddingVector::EmbeddingVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("embedding vector is empty");
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("embedding has a non-finite component");
  }
}

double EmbeddingVector::norm() const { return std::sqrt(dot(values_, values_)); }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

EmbeddingVector HashedBagOfTokensProvider::embed_one(std::string_view text) {
  std::vector<double> counts(kDim, 0.0);
  auto tokens = word_tokens(text);
  if (tokens.empty()) tokens.emplace_back(trim(text));
  for (const auto& token : tokens) counts[fnv1a64(token) % kDim] += 1.0;
  const double norm = std::sqrt(dot(counts, counts));
  if (norm > 0.0) {
    for (double& c : counts) c /= norm;
  }
  return EmbeddingVector(std::move(counts));
}

std::vector<EmbeddingVector> HashedBagOfTokensProvider::embed_batch(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& text : texts) out.push_back(embed_one(text));
  return out;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(HttpEmbeddingConfig config,
                                             std::shared_ptr<HttpTransport> transport,
                                             Sleeper sleep)
    : config_(std::move(config)),
      transport_(std::move(transport)),
      sleep_(std::move(sleep)),
      gate_(config_.max_in_flight) {
  if (config_.batch_size == 0) throw InvalidArgument("embedding batch_size must be >= 1");
}

std::vector<EmbeddingVector> HttpEmbeddingProvider::send_batch(
    std::span<const std::string> texts) {
  json request;
  request["inputs"] = json::array();
  for (const auto& t : texts) request["inputs"].push_back(t);
  if (!config_.model.empty()) request["model"] = config_.model;
  const std::string body = request.dump();

  HttpHeaders headers;
  if (!config_.auth_token.empty()) {
    headers.emplace_back("Authorization", "Bearer " + config_.auth_token);
  }

  const HttpResponse response = with_retry(config_.retry, sleep_, [&] {
    auto permit = gate_.acquire();
    HttpResponse r = transport_->post(config_.url, body, headers);
    raise_for_status(r, "embedding request");
    return r;
  });

  json parsed;
  try {
    parsed = json::parse(response.body);
  } catch (const json::parse_error& e) {
    throw Error(std::string("embedding response is not JSON: ") + e.what());
  }
  const auto it = parsed.find("embeddings");
  if (it == parsed.end() || !it->is_array()) {
    throw Error("embedding response lacks an \"embeddings\" array");
  }
  if (it->size() != texts.size()) {
    throw Error("embedding response has " + std::to_string(it->size()) +
                " vectors for " + std::to_string(texts.size()) + " inputs");
  }
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& row : *it) {
    if (!row.is_array()) throw Error("embedding entry is not an array");
    std::vector<double> values;
    values.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number()) throw Error("embedding entry has a non-numeric component");
      values.push_back(v.get<double>());
    }
    out.emplace_back(std::move(values));
  }
  return out;
}

std::vector<EmbeddingVector> HttpEmbeddingProvider::embed_batch(
    std::span<const std::string> texts) {
  const std::size_t batch = config_.batch_size;
  const std::size_t batches = (texts.size() + batch - 1) / batch;
  std::vector<std::vector<EmbeddingVector>> results(batches);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t b = next++; b < batches; b = next++) {
      try {
        const std::size_t begin = b * batch;
        const std::size_t count = std::min(batch, texts.size() - begin);
        results[b] = send_batch(texts.subspan(begin, count));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(batches, std::max<std::size_t>(1, config_.max_in_flight));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (auto& r : results) {
    for (auto& v : r) out.push_back(std::move(v));
  }
  check_uniform_dim(out);
  if (config_.expected_dim && !out.empty() && out.front().dim() != *config_.expected_dim) {
    throw Error("embedding dimension mismatch: provider returned " +
                std::to_string(out.front().dim()) + ", configured " +
                std::to_string(*config_.expected_dim));
  }
  return out;
}

std::vector<EmbeddingVector> embed(std::span<const Sentence> sentences,
                                   EmbeddingProvider& provider) {
  if (sentences.empty()) throw InvalidArgument("embed: no sentences");
  std::vector<std::string> texts;
  texts.reserve(sentences.size());
  for (const auto& s : sentences) texts.push_back(s.text);
  auto vectors = provider.embed_batch(texts);
  if (vectors.size() != texts.size()) {
    throw Error("provider " + provider.name() + " returned " +
                std::to_string(vectors.size()) + " vectors for " +
                std::to_string(texts.size()) + " sentences");
  }
  check_uniform_dim(vectors);
  return vectors;
}

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dim() != v.dim()) {
    throw InvalidArgument("cosine: dimension mismatch " + std::to_string(u.dim()) +
                          " vs " + std::to_string(v.dim()));
  }
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) throw Error("undefined similarity");
  return std::clamp(dot(u.values(), v.values()) / (nu * nv), -1.0, 1.0);
}

SimilarityMatrix SimilarityMatrix::from_values(int n, std::vector<double> row_major) {
  if (n < 1) throw InvalidArgument("similarity matrix needs n >= 1");
  const auto size = static_cast<std::size_t>(n);
  if (row_major.size() != size * size) {
    throw InvalidArgument("similarity matrix expects " + std::to_string(size * size) +
                          " values, got " + std::to_string(row_major.size()));
  }
  SimilarityMatrix m;
  m.n_ = n;
  m.values_ = std::move(row_major);
  for (int i = 0; i < n; ++i) {
    if (std::abs(m(i, i) - 1.0) > kTolerance) {
      throw InvalidArgument("similarity matrix diagonal entry " + std::to_string(i + 1) +
                            " is not 1");
    }
    for (int j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v) || v < -1.0 - kTolerance || v > 1.0 + kTolerance) {
        throw InvalidArgument("similarity entry out of [-1, 1]");
      }
      if (std::abs(v - m(j, i)) > kTolerance) {
        throw InvalidArgument("similarity matrix is not symmetric");
      }
    }
  }
  return m;
}

SimilarityMatrix similarity_matrix(std::span<const EmbeddingVector> vectors) {
  if (vectors.empty()) throw InvalidArgument("similarity_matrix: no vectors");
  const std::size_t n = vectors.size();
  const std::size_t dim = vectors[0].dim();

  std::vector<std::vector<double>> unit(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vectors[i].dim() != dim) {
      throw InvalidArgument("similarity_matrix: pair (1, " + std::to_string(i + 1) +
                            ") has mismatched dimensions");
    }
    const double norm = vectors[i].norm();
    if (norm == 0.0) {
      const std::size_t other = (i == 0 && n > 1) ? 2 : 1;
      throw Error("undefined similarity for pair (" + std::to_string(i + 1) + ", " +
                  std::to_string(other) + "): sentence " + std::to_string(i + 1) +
                  " has an all-zero vector");
    }
    unit[i].assign(vectors[i].values().begin(), vectors[i].values().end());
    for (double& v : unit[i]) v /= norm;
  }

  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = std::clamp(dot(unit[i], unit[j]), -1.0, 1.0);
      values[i * n + j] = s;
      values[j * n + i] = s;
    }
  }
  return SimilarityMatrix::from_values(static_cast<int>(n), std::move(values));
}

}  // namespace graphsum
