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

#include <string_view>

// Prompt template text. Bump kVersion whenever any string here changes; the
// version is recorded next to every dumped prompt.
namespace graphsum::templates {

inline constexpr std::string_view kVersion = "v1";

inline constexpr std::string_view kSystemHeader =
    "System Instruction:\n"
    "You are an expert in extractive summarization.\n";

inline constexpr std::string_view kTask =
    "Your task is to select the most important sentences from a document.";

inline constexpr std::string_view kTaskNap =
    " Use information about each sentence's neighboring sentences to better reason "
    "about local context.";

inline constexpr std::string_view kTaskCap =
    " Use the centrality scores provided to help identify globally important sentences.";

inline constexpr std::string_view kTaskCgm =
    "\nThe document has been pre-filtered to include only structurally salient "
    "sentences, identified via graph centrality.";

inline constexpr std::string_view kTaskStructureOnly =
    " Sentence text is not available; use only the sentence graph described below.";

inline constexpr std::string_view kGuidelinePrefix = "Guideline: On average, select ";
inline constexpr std::string_view kGuidelineSuffix = " key sentences.";

inline constexpr std::string_view kSentenceListHeader = "Sentence List:";

inline constexpr std::string_view kContextNap =
    "Context: Each sentence is followed by its 1-hop neighbors.";
inline constexpr std::string_view kContextCap =
    "Context: Each sentence is presented with its centrality score.";
inline constexpr std::string_view kContextCgm =
    "Context: Only top-ranked sentences (by centrality) are shown in full; others are "
    "masked.";
inline constexpr std::string_view kContextTnl =
    "Context: Each sentence is listed with its 1-hop neighbors in the sentence graph.";
inline constexpr std::string_view kContextNam =
    "Context: Row i, column j holds the cosine similarity between Sentence i and "
    "Sentence j.";
inline constexpr std::string_view kContextBamPrefix =
    "Context: Row i, column j is 1 when Sentence i and Sentence j are connected "
    "(similarity above ";
inline constexpr std::string_view kContextBamSuffix = "), otherwise 0.";

inline constexpr std::string_view kNamHeader = "Similarity Matrix:";
inline constexpr std::string_view kBamHeader = "Adjacency Matrix:";

inline constexpr std::string_view kNeighborsLabel = "Neighbors: ";
inline constexpr std::string_view kNoNeighbors = "none";

inline constexpr std::string_view kOutputFormat =
    "Expected Output Format:\n"
    "{ \"selected_sentences\": [1, 3, 5] }\n";

}  // namespace graphsum::templates
