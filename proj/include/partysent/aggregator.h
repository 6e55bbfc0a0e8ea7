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

#ifndef PARTYSENT_AGGREGATOR_H_
#define PARTYSENT_AGGREGATOR_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partysent/phrases.h"
#include "partysent/roster.h"
#include "partysent/sentiment.h"

namespace partysent {

// What the subject NP receives when the VP names no party.
enum class NpFallback { kSame, kFlip };

const char *NpFallbackName(NpFallback fallback);
std::optional<NpFallback> ParseNpFallback(std::string_view name);

enum class AssignmentRule {
  kVpDirect,        // VP party takes the VP score
  kNpOpposite,      // NP party takes the opposite of a party-bearing VP
  kNpFallbackSame,  // NP party takes the score of a party-less VP
  kNpFallbackFlip,  // NP party takes the opposite of a party-less VP
  kWholeDirect,     // fallback unit takes its own score
};

const char *AssignmentRuleName(AssignmentRule rule);

struct AssignmentSource {
  int sentence_id = 0;
  int sub_sentence = 0;
  PhraseKind phrase = PhraseKind::kWhole;

  friend bool operator==(const AssignmentSource &,
                         const AssignmentSource &) = default;
};

struct PartyAssignment {
  std::string member_id;
  SentimentScore score;
  AssignmentSource source;
  AssignmentRule rule = AssignmentRule::kVpDirect;
};

// Distributes the VP (or WHOLE) score of one sub-sentence to the parties
// attached to its phrases.
std::vector<PartyAssignment> AssignSubsentence(
    const std::vector<PhraseUnit> &phrases, const SentimentScore &vp_score,
    NpFallback np_fallback, int sentence_id = 0, int sub_sentence = 0);

struct MemberSummary {
  double mean = 0.0;
  Polarity polarity = Polarity::kNonNegative;
  int assignment_count = 0;
};

struct PartySummary {
  std::optional<double> mean;  // unset when no member was scored
  int member_count = 0;

  std::optional<Polarity> polarity() const {
    if (!mean) return std::nullopt;
    return PolarityOf(*mean);
  }
};

using MemberMap = std::map<std::string, MemberSummary>;
using PartyMap = std::map<Side, PartySummary>;

// Arithmetic mean of each member's assignment values.
MemberMap AggregateMember(std::span<const PartyAssignment> assignments);

// Unweighted mean of member means per side. Both sides are always present.
PartyMap AggregateParty(const MemberMap &per_member, const PartyRoster &roster);

struct PartySentimentReport {
  MemberMap per_member;
  PartyMap per_party;
  std::vector<PartyAssignment> assignments;
};

PartySentimentReport BuildReport(std::vector<PartyAssignment> assignments,
                                 const PartyRoster &roster);

}  // namespace partysent

#endif  // PARTYSENT_AGGREGATOR_H_
