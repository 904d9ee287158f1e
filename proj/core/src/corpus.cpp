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


#include "graphsum/corpus.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "graphsum/error.hpp"
#include "graphsum/text.hpp"
#include "json.hpp"

namespace graphsum {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::array<std::string_view, 40> kAbbreviations = {
    "Dr.",   "Mr.",   "Mrs.",  "Ms.",   "Prof.", "Sr.",    "Jr.",   "St.",
    "Mt.",   "Fig.",  "Figs.", "Eq.",   "Eqs.",  "Ref.",   "Refs.", "Sec.",
    "Tab.",  "Ch.",   "No.",   "Nos.",  "Vol.",  "pp.",    "vs.",   "cf.",
    "e.g.",  "i.e.",  "et al.", "approx.", "Inc.", "Ltd.", "Co.",   "Corp.",
    "U.S.",  "U.K.",  "Gen.",  "Gov.",  "Sen.",  "Rep.",   "Jan.",  "Feb.",
};

bool is_terminal(char c) { return c == '.' || c == '?' || c == '!'; }

bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool starts_sentence(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isupper(u) != 0 || std::isdigit(u) != 0;
}

// True when `prefix` ends with an allowlisted abbreviation that starts at a
// word boundary.
bool ends_with_abbreviation(std::string_view prefix) {
  for (std::string_view abbr : kAbbreviations) {
    if (prefix.size() < abbr.size()) continue;
    if (prefix.substr(prefix.size() - abbr.size()) != abbr) continue;
    const std::size_t start = prefix.size() - abbr.size();
    if (start == 0) return true;
    const auto before = static_cast<unsigned char>(prefix[start - 1]);
    if (std::isalnum(before) == 0) return true;
  }
  return false;
}

void validate_sentence_text(std::string_view text, int index) {
  if (is_blank(text)) {
    throw InvalidArgument("sentence " + std::to_string(index) +
                          " has no non-whitespace character");
  }
}

Document document_from_record(const json& record, std::size_t line) {
  if (!record.is_object()) throw ParseError("record is not an object", line);
  auto id_it = record.find("id");
  if (id_it == record.end() || !id_it->is_string()) {
    throw ParseError("missing string field \"id\"", line);
  }

  std::optional<std::string> reference;
  if (auto it = record.find("reference"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError("\"reference\" must be a string", line);
    reference = it->get<std::string>();
  }

  try {
    if (auto it = record.find("sentences"); it != record.end()) {
      if (!it->is_array()) throw ParseError("\"sentences\" must be an array", line);
      std::vector<std::string> texts;
      texts.reserve(it->size());
      for (const auto& s : *it) {
        if (!s.is_string()) {
          throw ParseError("\"sentences\" entries must be strings", line);
        }
        texts.push_back(s.get<std::string>());
      }
      return make_document(id_it->get<std::string>(), std::move(texts),
                           std::move(reference), SourceKind::kPreSegmented);
    }
    if (auto it = record.find("text"); it != record.end()) {
      if (!it->is_string()) throw ParseError("\"text\" must be a string", line);
      std::vector<std::string> texts;
      for (auto& s : segment_text(it->get<std::string>())) {
        texts.push_back(std::move(s.text));
      }
      return make_document(id_it->get<std::string>(), std::move(texts),
                           std::move(reference), SourceKind::kRawText);
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line);
  }
  throw ParseError("record has neither \"sentences\" nor \"text\"", line);
}

}  // namespace

const Sentence& Document::sentence(int index) const {
  if (index < 1 || index > size()) {
    throw InvalidArgument("sentence index " + std::to_string(index) +
                          " out of range 1.." + std::to_string(size()));
  }
  return sentences[static_cast<std::size_t>(index - 1)];
}

Document make_document(std::string id, std::vector<std::string> texts,
                       std::optional<std::string> reference, SourceKind kind) {
  if (texts.empty()) {
    throw InvalidArgument("document \"" + id + "\" has no sentences");
  }
  Document doc;
  doc.id = std::move(id);
  doc.reference = std::move(reference);
  doc.source_kind = kind;
  doc.sentences.reserve(texts.size());
  int index = 1;
  for (auto& text : texts) {
    validate_sentence_text(text, index);
    doc.sentences.push_back(Sentence{index++, std::move(text)});
  }
  return doc;
}

std::span<const std::string_view> abbreviations() { return kAbbreviations; }

std::vector<Sentence> segment_text(std::string_view text) {
  if (is_blank(text)) throw InvalidArgument("cannot segment blank text");

  std::vector<Sentence> out;
  auto emit = [&](std::string_view piece) {
    piece = trim(piece);
    if (!piece.empty()) {
      out.push_back(Sentence{static_cast<int>(out.size()) + 1, std::string(piece)});
    }
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    const std::size_t first_terminal = i;
    std::size_t end = i + 1;
    while (end < text.size() && (is_terminal(text[end]) || is_closer(text[end]))) {
      ++end;
    }
    std::size_t next = end;
    while (next < text.size() && is_space(text[next])) ++next;

    const bool boundary = next > end && next < text.size() && starts_sentence(text[next]);
    const bool abbreviated =
        text[first_terminal] == '.' &&
        ends_with_abbreviation(text.substr(start, first_terminal + 1 - start));
    if (boundary && !abbreviated) {
      emit(text.substr(start, end - start));
      start = next;
    }
    i = end;
  }
  emit(text.substr(start));
  return out;
}

std::vector<Document> parse_corpus(std::istream& in) {
  std::vector<Document> corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), line_number);
    }
    Document doc = document_from_record(record, line_number);
    if (!seen.insert(doc.id).second) {
      throw ParseError("duplicate id \"" + doc.id + "\"", line_number);
    }
    corpus.push_back(std::move(doc));
  }
  if (corpus.empty()) throw ParseError("empty corpus");
  return corpus;
}

std::vector<Document> load_corpus(const std::filesystem::path& path,
                                  CorpusFormat format) {
  (void)format;  // kJsonl is the only format
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path.string());
  return parse_corpus(in);
}

std::string to_record(const Document& doc) {
  ordered_json record;
  record["id"] = doc.id;
  if (doc.source_kind == SourceKind::kRawText) {
    std::string joined;
    for (const auto& s : doc.sentences) {
      if (!joined.empty()) joined.push_back(' ');
      joined += s.text;
    }
    record["text"] = std::move(joined);
  } else {
    auto sentences = ordered_json::array();
    for (const auto& s : doc.sentences) sentences.push_back(s.text);
    record["sentences"] = std::move(sentences);
  }
  if (doc.reference) record["reference"] = *doc.reference;
  return record.dump();
}

void write_corpus(std::ostream& out, std::span<const Document> corpus) {
  for (const auto& doc : corpus) out << to_record(doc) << '\n';
}

CorpusStats corpus_stats(std::span<const Document> corpus) {
  if (corpus.empty()) throw InvalidArgument("corpus_stats: empty corpus");
  CorpusStats stats;
  stats.doc_count = corpus.size();
  double doc_words = 0.0;
  double summary_words = 0.0;
  for (const auto& doc : corpus) {
    for (const auto& s : doc.sentences) {
      doc_words += static_cast<double>(count_words(s.text));
    }
    if (doc.reference) {
      summary_words += static_cast<double>(count_words(*doc.reference));
      ++stats.docs_with_reference;
    }
  }
  stats.mean_doc_words = doc_words / static_cast<double>(corpus.size());
  if (stats.docs_with_reference > 0) {
    stats.mean_summary_words =
        summary_words / static_cast<double>(stats.docs_with_reference);
  }
  return stats;
}

}  // namespace graphsum
