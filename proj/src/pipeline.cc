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

#include "partysent/pipeline.h"

#include <charconv>
#include <sstream>
#include <utility>

namespace partysent {

using json = nlohmann::json;

namespace {

std::string Join(const std::vector<std::string> &tokens) {
  std::string out;
  for (const std::string &t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::string JoinPositions(const std::vector<std::string> &tokens,
                          const std::vector<Span> &spans) {
  std::vector<std::string> words;
  for (const Span &span : spans) {
    for (int i = span.start; i < span.end; ++i) words.push_back(tokens[i]);
  }
  return Join(words);
}

std::string SpanText(const Span &span) {
  return "[" + std::to_string(span.start) + "," + std::to_string(span.end) +
         ")";
}

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string FormatValue(double value) {
  char buffer[32];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, end) : "nan";
}

DocumentAnalysis AnalyzeDocument(std::vector<Sentence> sentences,
                                 const PartyRoster &roster,
                                 const Lexicon &lexicon,
                                 const AnalysisOptions &options) {
  DocumentAnalysis analysis;
  analysis.sentences = std::move(sentences);
  analysis.mentions =
      ResolveMentions(analysis.sentences, roster, options.coref_window);

  std::vector<PartyAssignment> assignments;
  for (const Sentence &sentence : analysis.sentences) {
    for (SubSentence &sub : SplitSubsentences(sentence, &analysis.warnings)) {
      SubSentenceAnalysis entry;
      for (PhraseUnit &unit : ExtractNpVp(sub)) {
        entry.phrases.push_back(
            AttachParty(std::move(unit), analysis.mentions, sub));
      }
      for (const PhraseUnit &unit : entry.phrases) {
        if (unit.kind != PhraseKind::kNP) {
          entry.score = ScorePhrase(unit.text, lexicon);
        }
      }
      entry.assignments =
          AssignSubsentence(entry.phrases, entry.score, options.np_fallback,
                            sentence.id, sub.index);
      assignments.insert(assignments.end(), entry.assignments.begin(),
                         entry.assignments.end());
      entry.sub = std::move(sub);
      analysis.subs.push_back(std::move(entry));
    }
  }
  analysis.report = BuildReport(std::move(assignments), roster);
  return analysis;
}

json ReportToJson(const DocumentAnalysis &analysis, const PartyRoster &roster,
                  const json &config_echo) {
  const PartySentimentReport &report = analysis.report;
  json per_party = json::object();
  for (const auto &[side, summary] : report.per_party) {
    json entry = {{"member_count", summary.member_count}};
    if (summary.mean) {
      entry["mean"] = *summary.mean;
      entry["class"] = PolarityName(*summary.polarity());
    }
    per_party[SideName(side)] = std::move(entry);
  }
  json per_member = json::object();
  for (const auto &[member, summary] : report.per_member) {
    per_member[member] = {
        {"mean", summary.mean},
        {"class", PolarityName(summary.polarity)},
        {"assignment_count", summary.assignment_count},
        {"party", SideName(roster.Get(member).party)},
    };
  }
  json assignments = json::array();
  for (const PartyAssignment &a : report.assignments) {
    assignments.push_back({
        {"member", a.member_id},
        {"value", a.score.value},
        {"class", PolarityName(a.score.polarity)},
        {"sentence_id", a.source.sentence_id},
        {"sub_sentence", a.source.sub_sentence},
        {"phrase", PhraseKindName(a.source.phrase)},
        {"rule", AssignmentRuleName(a.rule)},
    });
  }
  return {
      {"sentence_count", analysis.sentences.size()},
      {"per_party", std::move(per_party)},
      {"per_member", std::move(per_member)},
      {"assignments", std::move(assignments)},
      {"warnings", analysis.warnings},
      {"config_echo", config_echo},
  };
}

std::string AssignmentsToCsv(const DocumentAnalysis &analysis,
                             std::string_view document) {
  std::string out;
  for (const PartyAssignment &a : analysis.report.assignments) {
    out += CsvField(document) + "," + CsvField(a.member_id) + "," +
           FormatValue(a.score.value) + "," + PolarityName(a.score.polarity) +
           "," + std::to_string(a.source.sentence_id) + "," +
           std::to_string(a.source.sub_sentence) + "," +
           PhraseKindName(a.source.phrase) + "," + AssignmentRuleName(a.rule) +
           "\n";
  }
  return out;
}

std::optional<InspectStage> ParseInspectStage(std::string_view name) {
  if (name == "mentions") return InspectStage::kMentions;
  if (name == "subsentences") return InspectStage::kSubsentences;
  if (name == "phrases") return InspectStage::kPhrases;
  if (name == "scores") return InspectStage::kScores;
  return std::nullopt;
}

std::string InspectDocument(const DocumentAnalysis &analysis,
                            InspectStage stage) {
  std::ostringstream out;
  size_t next_sub = 0;
  for (const Sentence &sentence : analysis.sentences) {
    out << "sentence " << sentence.id << ": " << Join(sentence.tokens) << "\n";
    if (stage == InspectStage::kMentions) {
      for (const Mention *m : analysis.mentions.InSentence(sentence.id)) {
        std::vector<std::string> words(
            sentence.tokens.begin() + m->span.start,
            sentence.tokens.begin() + m->span.end);
        out << "  " << m->member_id << "@s" << sentence.id << " "
            << SpanText(m->span) << " \"" << Join(words) << "\" ("
            << MentionKindName(m->kind) << ")\n";
      }
      continue;
    }
    for (; next_sub < analysis.subs.size() &&
           analysis.subs[next_sub].sub.parent_sentence_id == sentence.id;
         ++next_sub) {
      const SubSentenceAnalysis &entry = analysis.subs[next_sub];
      const SubSentence &sub = entry.sub;
      out << "  sub " << sub.index << ": " << Join(Leaves(sub.tree)) << "\n";
      switch (stage) {
        case InspectStage::kSubsentences: {
          out << "    covered:";
          for (const Span &span : sub.covered_spans) out << " " << SpanText(span);
          out << "\n    dropped: [";
          out << JoinPositions(sentence.tokens, sub.dropped_tokens) << "]\n";
          out << "    tree: " << SerializePtb(sub.tree) << "\n";
          break;
        }
        case InspectStage::kPhrases:
          for (const PhraseUnit &unit : entry.phrases) {
            out << "    " << PhraseKindName(unit.kind) << " \""
                << Join(unit.text) << "\" member="
                << unit.member_id.value_or("-");
            for (const std::string &other : unit.ambiguity) {
              out << " ambiguous:" << other;
            }
            out << "\n";
          }
          break;
        case InspectStage::kScores:
          out << "    score " << FormatValue(entry.score.value) << " "
              << PolarityName(entry.score.polarity) << "\n";
          for (const PartyAssignment &a : entry.assignments) {
            out << "    -> " << a.member_id << " "
                << FormatValue(a.score.value) << " "
                << PolarityName(a.score.polarity) << " "
                << AssignmentRuleName(a.rule) << "\n";
          }
          break;
        case InspectStage::kMentions:
          break;
      }
    }
  }
  for (const std::string &warning : analysis.warnings) {
    out << "warning: " << warning << "\n";
  }
  return out.str();
}

}  // namespace partysent
