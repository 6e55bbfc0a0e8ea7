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

#ifndef PARTYSENT_ROSTER_H_
#define PARTYSENT_ROSTER_H_

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partysent/tree.h"

namespace partysent {

enum class Side { kPetitioner, kDefendant };

const char *SideName(Side side);
std::optional<Side> ParseSide(std::string_view name);

struct PartyMember {
  std::string id;
  std::string canonical_name;
  std::vector<std::string> aliases;
  Side party = Side::kPetitioner;
  // Stored lower-cased.
  std::set<std::string> pronouns;
};

class RosterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validated, immutable set of party members.
class PartyRoster {
 public:
  // Throws RosterError if the members violate a roster invariant.
  explicit PartyRoster(std::vector<PartyMember> members);

  const std::vector<PartyMember> &members() const { return members_; }
  const PartyMember *Find(std::string_view id) const;
  const PartyMember &Get(std::string_view id) const;

 private:
  std::vector<PartyMember> members_;
  std::map<std::string, size_t, std::less<>> by_id_;
};

// Reads the JSON roster format. Unknown keys are rejected.
PartyRoster LoadRoster(std::istream &in);
PartyRoster LoadRosterFile(const std::string &path);

enum class MentionKind { kAlias, kPronoun };

const char *MentionKindName(MentionKind kind);

struct Mention {
  int sentence_id = 0;
  Span span;
  std::string member_id;
  MentionKind kind = MentionKind::kAlias;

  friend bool operator==(const Mention &, const Mention &) = default;
};

// Mentions sorted by (sentence_id, span.start).
class MentionIndex {
 public:
  MentionIndex() = default;
  explicit MentionIndex(std::vector<Mention> mentions);

  const std::vector<Mention> &mentions() const { return mentions_; }
  size_t size() const { return mentions_.size(); }

  // Mentions of one sentence, in token order.
  std::vector<const Mention *> InSentence(int sentence_id) const;

  friend bool operator==(const MentionIndex &, const MentionIndex &) = default;

 private:
  std::vector<Mention> mentions_;
};

// Longest-match alias scan over one sentence. Aliases of at most two
// characters compare case-sensitively, all others case-insensitively. A
// token ending in "'s" also matches on its stem.
std::vector<Mention> DetectAliasMentions(const Sentence &sentence,
                                         const PartyRoster &roster);

inline constexpr int kDefaultCorefWindow = 3;

// Binds pronouns to the nearest compatible preceding mention no more than
// `window` sentences back. Returns the alias mentions plus every resolved
// pronoun.
MentionIndex ResolvePronouns(const std::vector<Sentence> &sentences,
                             const MentionIndex &alias_mentions,
                             const PartyRoster &roster,
                             int window = kDefaultCorefWindow);

// DetectAliasMentions over every sentence followed by ResolvePronouns.
MentionIndex ResolveMentions(const std::vector<Sentence> &sentences,
                             const PartyRoster &roster,
                             int window = kDefaultCorefWindow);

}  // namespace partysent

#endif  // PARTYSENT_ROSTER_H_
