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


#include "graphsum/selection_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "graphsum/error.hpp"
#include "graphsum/text.hpp"
#include "json.hpp"

namespace graphsum {
namespace {

using nlohmann::json;

std::vector<int> int_array(const json& record, const char* key, std::size_t line, bool required) {
  const auto it = record.find(key);
  if (it == record.end()) {
    if (required) throw ParseError(std::string("missing \"") + key + "\"", line);
    return {};
  }
  if (!it->is_array()) throw ParseError(std::string("\"") + key + "\" must be an array", line);
  std::vector<int> out;
  for (const auto& v : *it) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("\"") + key + "\" must hold integers", line);
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

SelectionRecord make_selection_record(std::string id, std::string strategy,
                                      const SelectionResult& result, bool keep_raw) {
  SelectionRecord record;
  record.id = std::move(id);
  record.strategy = std::move(strategy);
  record.indices = result.indices;
  record.order = result.order;
  record.dropped = result.dropped;
  if (keep_raw) record.raw_response = result.raw_response;
  return record;
}

SelectionResult to_selection_result(const SelectionRecord& record) {
  SelectionResult result;
  result.indices = record.indices;
  result.order = record.order.empty() ? record.indices : record.order;
  result.dropped = record.dropped;
  result.raw_response = record.raw_response.value_or("");
  return result;
}

std::string to_json_line(const SelectionRecord& record) {
  nlohmann::ordered_json out;
  out["id"] = record.id;
  out["strategy"] = record.strategy;
  out["indices"] = record.indices;
  out["order"] = record.order;
  out["dropped"] = record.dropped;
  if (record.raw_response) out["raw_response"] = *record.raw_response;
  return out.dump();
}

void write_selections(std::ostream& out, std::span<const SelectionRecord> records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<SelectionRecord> read_selections(std::istream& in) {
  std::vector<SelectionRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    const json parsed = json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
      throw ParseError("malformed selection record", line_number);
    }
    SelectionRecord r;
    if (!parsed.contains("id") || !parsed["id"].is_string()) {
      throw ParseError("missing string field \"id\"", line_number);
    }
    r.id = parsed["id"].get<std::string>();
    if (auto it = parsed.find("strategy"); it != parsed.end() && it->is_string()) {
      r.strategy = it->get<std::string>();
    }
    r.indices = int_array(parsed, "indices", line_number, true);
    r.order = int_array(parsed, "order", line_number, false);
    r.dropped = int_array(parsed, "dropped", line_number, false);
    if (auto it = parsed.find("raw_response"); it != parsed.end() && it->is_string()) {
      r.raw_response = it->get<std::string>();
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<SelectionRecord> read_selections(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open selections file " + path.string());
  return read_selections(in);
}

}  // namespace graphsum
