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

#include <string>
#include <string_view>
#include <vector>

namespace graphsum {

// Lowercased word tokens: maximal runs of ASCII letters/digits, with bytes
// >= 0x80 treated as word characters so UTF-8 words stay whole. Everything
// else separates tokens. Shared by the hashed embedding and ROUGE.
std::vector<std::string> word_tokens(std::string_view text);

// Number of whitespace-separated words.
std::size_t count_words(std::string_view text);

std::string_view trim(std::string_view text);

bool is_blank(std::string_view text);

}  // namespace graphsum
