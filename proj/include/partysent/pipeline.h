// Copyright 2026 The partysent Authors.
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

#ifndef PARTYSENT_PIPELINE_H_
#define PARTYSENT_PIPELINE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "partysent/aggregator.h"
#include "partysent/phrases.h"
#include "partysent/roster.h"
#include "partysent/segmenter.h"
#include "partysent/sentiment.h"
#include "partysent/tree.h"

namespace partysent {

struct AnalysisOptions {
  NpFallback np_fallback = NpFallback::kSame;
  int coref_window = kDefaultCorefWindow;
};

struct SubSentenceAnalysis {
  SubSentence sub;
  std::vector<PhraseUnit> phrases;  // party already attached
  SentimentScore score;             // of the VP or WHOLE unit
  std::vector<PartyAssignment> assignments;
};

// Every intermediate product of one document, kept for inspection.
struct DocumentAnalysis {
  std::vector<Sentence> sentences;
  MentionIndex mentions;
  std::vector<SubSentenceAnalysis> subs;  // sentence order, then index
  std::vector<std::string> warnings;
  PartySentimentReport report;
};

// Runs coreference, sub-sentence splitting, phrase extraction, scoring,
// assignment and aggregation over one document.
DocumentAnalysis AnalyzeDocument(std::vector<Sentence> sentences,
                                 const PartyRoster &roster,
                                 const Lexicon &lexicon,
                                 const AnalysisOptions &options = {});

// Report object: per_party, per_member, assignments, warnings,
// sentence_count and the supplied config_echo.
nlohmann::json ReportToJson(const DocumentAnalysis &analysis,
                            const PartyRoster &roster,
                            const nlohmann::json &config_echo);

inline constexpr char kCsvHeader[] =
    "document,member,value,class,sentence_id,sub_sentence,phrase,rule";

// One CSV row per assignment, without header.
std::string AssignmentsToCsv(const DocumentAnalysis &analysis,
                             std::string_view document);

enum class InspectStage { kMentions, kSubsentences, kPhrases, kScores };

std::optional<InspectStage> ParseInspectStage(std::string_view name);

// Human-readable dump of one stage, grouped by sentence.
std::string InspectDocument(const DocumentAnalysis &analysis,
                            InspectStage stage);

// Shortest decimal rendering that round-trips.
std::string FormatValue(double value);

}  // namespace partysent

#endif  // PARTYSENT_PIPELINE_H_
