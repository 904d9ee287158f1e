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
#include <vector>

#include "graphsum/llm.hpp"

namespace graphsum {

// One line of a selections JSONL file:
//   {"id": ..., "strategy": ..., "indices": [...], "order": [...],
//    "dropped": [...], "raw_response": ...}
// raw_response is optional and only written when present.
struct SelectionRecord {
  std::string id;
  std::string strategy;  // prompting strategy or baseline method name
  std::vector<int> indices;
  std::vector<int> order;
  std::vector<int> dropped;
  std::optional<std::string> raw_response;

  friend bool operator==(const SelectionRecord&, const SelectionRecord&) = default;
};

SelectionRecord make_selection_record(std::string id, std::string strategy,
                                      const SelectionResult& result, bool keep_raw);

// SelectionResult view of a record (order falls back to indices when the
// record has none).
SelectionResult to_selection_result(const SelectionRecord& record);

std::string to_json_line(const SelectionRecord& record);
void write_selections(std::ostream& out, std::span<const SelectionRecord> records);
std::vector<SelectionRecord> read_selections(std::istream& in);
std::vector<SelectionRecord> read_selections(const std::filesystem::path& path);

}  // namespace graphsum
