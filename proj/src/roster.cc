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

#include "partysent/roster.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "partysent/text.h"

namespace partysent {

using json = nlohmann::json;

namespace {

void RejectUnknownKeys(const json &object, std::initializer_list<const char *> allowed,
                       const std::string &where) {
  for (const auto &[key, value] : object.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char *k) { return key == k; });
    if (!known) throw RosterError(where + ": unknown key '" + key + "'");
  }
}

std::string RequireString(const json &object, const char *key,
                          const std::string &where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw RosterError(where + ": missing key '" + key + "'");
  }
  if (!it->is_string()) {
    throw RosterError(where + ": '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> StringList(const json &object, const char *key,
                                    const std::string &where, bool required) {
  auto it = object.find(key);
  if (it == object.end()) {
    if (required) throw RosterError(where + ": missing key '" + key + "'");
    return {};
  }
  if (!it->is_array()) {
    throw RosterError(where + ": '" + key + "' must be an array");
  }
  std::vector<std::string> out;
  for (const json &item : *it) {
    if (!item.is_string()) {
      throw RosterError(where + ": '" + key + "' entries must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

struct AliasPattern {
  std::vector<std::string> tokens;
  bool case_sensitive = false;
};

AliasPattern CompileAlias(const std::string &alias) {
  AliasPattern pattern;
  std::istringstream words(alias);
  std::string word;
  while (words >> word) pattern.tokens.push_back(word);
  pattern.case_sensitive = alias.size() <= 2;
  return pattern;
}

bool TokenMatches(const std::string &token, const std::string &alias_token,
                  bool case_sensitive) {
  if (case_sensitive) return token == alias_token;
  return EqualsIgnoreCase(token, alias_token);
}

// Possessive stem of a token ("Lee's" -> "Lee"), or empty.
std::string PossessiveStem(const std::string &token) {
  static const std::string kSuffixes[] = {"'s", "\xE2\x80\x99s"};
  for (const std::string &suffix : kSuffixes) {
    if (token.size() > suffix.size() &&
        EqualsIgnoreCase(token.substr(token.size() - suffix.size()), suffix)) {
      return token.substr(0, token.size() - suffix.size());
    }
  }
  return {};
}

bool MatchesAt(const std::vector<std::string> &tokens, size_t start,
               const AliasPattern &pattern) {
  const size_t n = pattern.tokens.size();
  if (n == 0 || start + n > tokens.size()) return false;
  for (size_t k = 0; k < n; ++k) {
    const std::string &token = tokens[start + k];
    if (TokenMatches(token, pattern.tokens[k], pattern.case_sensitive)) continue;
    if (k + 1 == n) {
      std::string stem = PossessiveStem(token);
      if (!stem.empty() &&
          TokenMatches(stem, pattern.tokens[k], pattern.case_sensitive)) {
        continue;
      }
    }
    return false;
  }
  return true;
}

}  // namespace

const char *SideName(Side side) {
  return side == Side::kPetitioner ? "petitioner_side" : "defendant_side";
}

std::optional<Side> ParseSide(std::string_view name) {
  if (name == "petitioner_side") return Side::kPetitioner;
  if (name == "defendant_side") return Side::kDefendant;
  return std::nullopt;
}

const char *MentionKindName(MentionKind kind) {
  return kind == MentionKind::kAlias ? "alias" : "pronoun";
}

PartyRoster::PartyRoster(std::vector<PartyMember> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw RosterError("roster has no members");
  std::map<std::string, std::string> alias_owner;
  for (size_t i = 0; i < members_.size(); ++i) {
    PartyMember &member = members_[i];
    if (member.id.empty()) throw RosterError("member with empty id");
    if (!by_id_.emplace(member.id, i).second) {
      throw RosterError("duplicate member id '" + member.id + "'");
    }
    if (member.aliases.empty()) {
      throw RosterError("member '" + member.id + "' has no aliases");
    }
    if (std::find(member.aliases.begin(), member.aliases.end(),
                  member.canonical_name) == member.aliases.end()) {
      throw RosterError("member '" + member.id + "': canonical_name '" +
                        member.canonical_name + "' is not among its aliases");
    }
    std::set<std::string> own;
    for (const std::string &alias : member.aliases) {
      if (CompileAlias(alias).tokens.empty()) {
        throw RosterError("member '" + member.id + "' has a blank alias");
      }
      if (!own.insert(alias).second) continue;
      auto [it, inserted] = alias_owner.emplace(alias, member.id);
      if (!inserted) {
        throw RosterError("alias '" + alias + "' is claimed by both '" +
                          it->second + "' and '" + member.id + "'");
      }
    }
    std::set<std::string> pronouns;
    for (const std::string &p : member.pronouns) pronouns.insert(ToLower(p));
    member.pronouns = std::move(pronouns);
  }
}

const PartyMember *PartyRoster::Find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &members_[it->second];
}

const PartyMember &PartyRoster::Get(std::string_view id) const {
  const PartyMember *member = Find(id);
  if (member == nullptr) {
    throw RosterError("unknown member '" + std::string(id) + "'");
  }
  return *member;
}

PartyRoster LoadRoster(std::istream &in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw RosterError(std::string("invalid roster JSON: ") + e.what());
  }
  if (!doc.is_object()) throw RosterError("roster must be a JSON object");
  RejectUnknownKeys(doc, {"members"}, "roster");
  auto it = doc.find("members");
  if (it == doc.end() || !it->is_array()) {
    throw RosterError("roster: 'members' must be an array");
  }
  std::vector<PartyMember> members;
  for (size_t i = 0; i < it->size(); ++i) {
    const json &entry = (*it)[i];
    std::string where = "members[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw RosterError(where + " must be an object");
    RejectUnknownKeys(entry,
                      {"id", "canonical_name", "aliases", "party", "pronouns"},
                      where);
    PartyMember member;
    member.id = RequireString(entry, "id", where);
    member.canonical_name = RequireString(entry, "canonical_name", where);
    member.aliases = StringList(entry, "aliases", where, true);
    std::string party = RequireString(entry, "party", where);
    std::optional<Side> side = ParseSide(party);
    if (!side) {
      throw RosterError(where + ": party must be petitioner_side or "
                                "defendant_side, got '" + party + "'");
    }
    member.party = *side;
    for (std::string &p : StringList(entry, "pronouns", where, false)) {
      member.pronouns.insert(std::move(p));
    }
    members.push_back(std::move(member));
  }
  return PartyRoster(std::move(members));
}

PartyRoster LoadRosterFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw RosterError("cannot open roster file '" + path + "'");
  try {
    return LoadRoster(in);
  } catch (const RosterError &e) {
    throw RosterError(path + ": " + e.what());
  }
}

MentionIndex::MentionIndex(std::vector<Mention> mentions)
    : mentions_(std::move(mentions)) {
  std::stable_sort(mentions_.begin(), mentions_.end(),
                   [](const Mention &a, const Mention &b) {
                     if (a.sentence_id != b.sentence_id) {
                       return a.sentence_id < b.sentence_id;
                     }
                     return a.span.start < b.span.start;
                   });
}

std::vector<const Mention *> MentionIndex::InSentence(int sentence_id) const {
  auto lo = std::lower_bound(
      mentions_.begin(), mentions_.end(), sentence_id,
      [](const Mention &m, int id) { return m.sentence_id < id; });
  std::vector<const Mention *> out;
  for (auto it = lo; it != mentions_.end() && it->sentence_id == sentence_id;
       ++it) {
    out.push_back(&*it);
  }
  return out;
}

std::vector<Mention> DetectAliasMentions(const Sentence &sentence,
                                         const PartyRoster &roster) {
  struct Candidate {
    int start;
    int length;
    size_t member;
  };
  std::vector<Candidate> candidates;
  const auto &members = roster.members();
  std::vector<std::vector<AliasPattern>> patterns(members.size());
  for (size_t m = 0; m < members.size(); ++m) {
    for (const std::string &alias : members[m].aliases) {
      patterns[m].push_back(CompileAlias(alias));
    }
  }
  for (size_t start = 0; start < sentence.tokens.size(); ++start) {
    for (size_t m = 0; m < members.size(); ++m) {
      int best = 0;
      for (const AliasPattern &pattern : patterns[m]) {
        if (MatchesAt(sentence.tokens, start, pattern)) {
          best = std::max(best, static_cast<int>(pattern.tokens.size()));
        }
      }
      if (best > 0) candidates.push_back({static_cast<int>(start), best, m});
    }
  }
  // Longest span wins, then leftmost, then roster order.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate &a, const Candidate &b) {
                     if (a.length != b.length) return a.length > b.length;
                     return a.start < b.start;
                   });
  std::vector<bool> taken(sentence.tokens.size(), false);
  std::vector<Mention> out;
  for (const Candidate &c : candidates) {
    bool free = true;
    for (int t = c.start; t < c.start + c.length; ++t) free = free && !taken[t];
    if (!free) continue;
    for (int t = c.start; t < c.start + c.length; ++t) taken[t] = true;
    out.push_back({sentence.id, {c.start, c.start + c.length},
                   members[c.member].id, MentionKind::kAlias});
  }
  std::sort(out.begin(), out.end(), [](const Mention &a, const Mention &b) {
    return a.span.start < b.span.start;
  });
  return out;
}

MentionIndex ResolvePronouns(const std::vector<Sentence> &sentences,
                             const MentionIndex &alias_mentions,
                             const PartyRoster &roster, int window) {
  if (window < 0) throw std::invalid_argument("coref window must be >= 0");
  std::set<std::string> pronoun_forms;
  for (const PartyMember &member : roster.members()) {
    pronoun_forms.insert(member.pronouns.begin(), member.pronouns.end());
  }

  struct Antecedent {
    const PartyMember *member;
    size_t sentence_pos;
    long last_token;  // document-global index of the mention's last token
  };
  std::vector<Antecedent> antecedents;
  std::vector<Mention> out = alias_mentions.mentions();

  long offset = 0;
  for (size_t pos = 0; pos < sentences.size(); ++pos) {
    const Sentence &sentence = sentences[pos];
    std::vector<const Mention *> aliases =
        alias_mentions.InSentence(sentence.id);
    size_t next_alias = 0;
    const int n = static_cast<int>(sentence.tokens.size());
    for (int t = 0; t < n; ++t) {
      bool covered = false;
      while (next_alias < aliases.size() &&
             aliases[next_alias]->span.start <= t) {
        const Mention *m = aliases[next_alias];
        if (m->span.end > t) {
          covered = true;
          break;
        }
        antecedents.push_back(
            {&roster.Get(m->member_id), pos, offset + m->span.end - 1});
        ++next_alias;
      }
      if (covered) continue;
      std::string form = ToLower(sentence.tokens[t]);
      if (pronoun_forms.count(form) == 0) continue;

      const Antecedent *best = nullptr;
      for (auto it = antecedents.rbegin(); it != antecedents.rend(); ++it) {
        if (pos - it->sentence_pos > static_cast<size_t>(window)) break;
        if (it->member->pronouns.count(form) == 0) continue;
        // Antecedents are ordered by position, so the first compatible one
        // walking backwards has the smallest distance.
        best = &*it;
        break;
      }
      if (best == nullptr) continue;
      out.push_back({sentence.id, {t, t + 1}, best->member->id,
                     MentionKind::kPronoun});
      antecedents.push_back({best->member, pos, offset + t});
    }
    // Alias mentions that start after the last pronoun candidate.
    for (; next_alias < aliases.size(); ++next_alias) {
      const Mention *m = aliases[next_alias];
      antecedents.push_back(
          {&roster.Get(m->member_id), pos, offset + m->span.end - 1});
    }
    offset += n;
  }
  return MentionIndex(std::move(out));
}

MentionIndex ResolveMentions(const std::vector<Sentence> &sentences,
                             const PartyRoster &roster, int window) {
  std::vector<Mention> aliases;
  for (const Sentence &sentence : sentences) {
    std::vector<Mention> found = DetectAliasMentions(sentence, roster);
    aliases.insert(aliases.end(), found.begin(), found.end());
  }
  return ResolvePronouns(sentences, MentionIndex(std::move(aliases)), roster,
                         window);
}

}  // namespace partysent
