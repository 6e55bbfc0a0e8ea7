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

#include "partysent/aggregator.h"

#include <algorithm>
#include <utility>

namespace partysent {

namespace {

// Order-independent mean: values are summed in sorted order.
double Mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  double mean = sum / static_cast<double>(values.size());
  return mean == 0.0 ? 0.0 : mean;
}

const PhraseUnit *FindKind(const std::vector<PhraseUnit> &phrases,
                           PhraseKind kind) {
  for (const PhraseUnit &p : phrases) {
    if (p.kind == kind) return &p;
  }
  return nullptr;
}

}  // namespace

const char *NpFallbackName(NpFallback fallback) {
  return fallback == NpFallback::kSame ? "same" : "flip";
}

std::optional<NpFallback> ParseNpFallback(std::string_view name) {
  if (name == "same") return NpFallback::kSame;
  if (name == "flip") return NpFallback::kFlip;
  return std::nullopt;
}

const char *AssignmentRuleName(AssignmentRule rule) {
  switch (rule) {
    case AssignmentRule::kVpDirect: return "vp_direct";
    case AssignmentRule::kNpOpposite: return "np_opposite";
    case AssignmentRule::kNpFallbackSame: return "np_fallback_same";
    case AssignmentRule::kNpFallbackFlip: return "np_fallback_flip";
    case AssignmentRule::kWholeDirect: return "whole_direct";
  }
  return "?";
}

std::vector<PartyAssignment> AssignSubsentence(
    const std::vector<PhraseUnit> &phrases, const SentimentScore &vp_score,
    NpFallback np_fallback, int sentence_id, int sub_sentence) {
  std::vector<PartyAssignment> out;
  auto add = [&](const PhraseUnit &unit, SentimentScore score,
                 AssignmentRule rule) {
    out.push_back({*unit.member_id, score,
                   {sentence_id, sub_sentence, unit.kind}, rule});
  };

  if (const PhraseUnit *whole = FindKind(phrases, PhraseKind::kWhole)) {
    if (whole->member_id) add(*whole, vp_score, AssignmentRule::kWholeDirect);
    return out;
  }
  const PhraseUnit *vp = FindKind(phrases, PhraseKind::kVP);
  const PhraseUnit *np = FindKind(phrases, PhraseKind::kNP);
  const bool vp_party = vp != nullptr && vp->member_id.has_value();
  if (vp_party) add(*vp, vp_score, AssignmentRule::kVpDirect);
  if (np != nullptr && np->member_id) {
    if (vp_party) {
      add(*np, Flip(vp_score), AssignmentRule::kNpOpposite);
    } else if (np_fallback == NpFallback::kSame) {
      add(*np, vp_score, AssignmentRule::kNpFallbackSame);
    } else {
      add(*np, Flip(vp_score), AssignmentRule::kNpFallbackFlip);
    }
  }
  return out;
}

MemberMap AggregateMember(std::span<const PartyAssignment> assignments) {
  std::map<std::string, std::vector<double>> values;
  for (const PartyAssignment &a : assignments) {
    values[a.member_id].push_back(a.score.value);
  }
  MemberMap out;
  for (auto &[member, list] : values) {
    MemberSummary summary;
    summary.assignment_count = static_cast<int>(list.size());
    summary.mean = Mean(std::move(list));
    summary.polarity = PolarityOf(summary.mean);
    out.emplace(member, summary);
  }
  return out;
}

PartyMap AggregateParty(const MemberMap &per_member,
                        const PartyRoster &roster) {
  std::map<Side, std::vector<double>> means;
  for (const auto &[member, summary] : per_member) {
    means[roster.Get(member).party].push_back(summary.mean);
  }
  PartyMap out;
  for (Side side : {Side::kPetitioner, Side::kDefendant}) {
    PartySummary summary;
    auto it = means.find(side);
    if (it != means.end() && !it->second.empty()) {
      summary.member_count = static_cast<int>(it->second.size());
      summary.mean = Mean(std::move(it->second));
    }
    out.emplace(side, summary);
  }
  return out;
}

PartySentimentReport BuildReport(std::vector<PartyAssignment> assignments,
                                 const PartyRoster &roster) {
  PartySentimentReport report;
  report.per_member = AggregateMember(assignments);
  report.per_party = AggregateParty(report.per_member, roster);
  report.assignments = std::move(assignments);
  return report;
}

}  // namespace partysent
