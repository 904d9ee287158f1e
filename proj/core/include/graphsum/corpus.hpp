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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphsum {

// One sentence of a document. `index` is 1-based.
struct Sentence {
  int index = 0;
  std::string text;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

enum class SourceKind { kPreSegmented, kRawText };

// An ordered sentence list with an optional gold summary.
//
// Invariants (enforced by make_document): at least one sentence, indices are
// exactly 1..N, and every sentence text has a non-whitespace character.
struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::optional<std::string> reference;
  SourceKind source_kind = SourceKind::kPreSegmented;

  int size() const { return static_cast<int>(sentences.size()); }
  // 1-based; throws InvalidArgument when out of range.
  const Sentence& sentence(int index) const;

  friend bool operator==(const Document&, const Document&) = default;
};

Document make_document(std::string id, std::vector<std::string> texts,
                       std::optional<std::string> reference = std::nullopt,
                       SourceKind kind = SourceKind::kPreSegmented);

// Splits after '.', '?' or '!' (plus any closing quotes/brackets that follow)
// when the next characters are whitespace and then an uppercase ASCII letter
// or a digit. No split happens after an entry of abbreviations(). Returned
// sentences are trimmed; throws InvalidArgument for blank input.
std::vector<Sentence> segment_text(std::string_view text);

// The fixed abbreviation allowlist consulted by segment_text.
std::span<const std::string_view> abbreviations();

enum class CorpusFormat { kJsonl };

// One JSON record per line: {"id": ..., "sentences": [...]} or
// {"id": ..., "text": "..."}, with an optional "reference". Blank lines are
// skipped. Throws ParseError carrying the line number for malformed records
// and "empty corpus" when no record is present.
std::vector<Document> load_corpus(const std::filesystem::path& path,
                                  CorpusFormat format = CorpusFormat::kJsonl);
std::vector<Document> parse_corpus(std::istream& in);

// Inverse of the loader for a single record (no trailing newline). Raw-text
// documents are written back as "text" with sentences joined by one space.
std::string to_record(const Document& doc);
void write_corpus(std::ostream& out, std::span<const Document> corpus);

struct CorpusStats {
  std::size_t doc_count = 0;
  double mean_doc_words = 0.0;
  // Averaged over documents that carry a reference only.
  double mean_summary_words = 0.0;
  std::size_t docs_with_reference = 0;
};

CorpusStats corpus_stats(std::span<const Document> corpus);

}  // namespace graphsum
