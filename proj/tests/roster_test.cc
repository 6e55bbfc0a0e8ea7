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

#include <sstream>

#include "gtest/gtest.h"
#include "partysent/text.h"
#include "test_util.h"

namespace partysent {
namespace {

using ::partysent::testing::FlatSentence;

PartyMember Member(std::string id, std::vector<std::string> aliases, Side side,
                   std::set<std::string> pronouns = {}) {
  PartyMember m;
  m.id = std::move(id);
  m.canonical_name = aliases.front();
  m.aliases = std::move(aliases);
  m.party = side;
  m.pronouns = std::move(pronouns);
  return m;
}

PartyRoster LeeRoster() {
  return PartyRoster({
      Member("lee", {"Lee"}, Side::kPetitioner, {"he", "him", "his"}),
      Member("us", {"United States", "US"}, Side::kDefendant,
             {"it", "they"}),
  });
}

std::string LoadError(const std::string &text) {
  std::istringstream in(text);
  try {
    LoadRoster(in);
  } catch (const RosterError &e) {
    return e.what();
  }
  return "";
}

TEST(RosterTest, LoadsDemoRoster) {
  PartyRoster roster = testing::DemoRoster();
  ASSERT_EQ(roster.members().size(), 3u);
  EXPECT_EQ(roster.Get("lee").party, Side::kPetitioner);
  EXPECT_EQ(roster.Get("government").party, Side::kDefendant);
  EXPECT_TRUE(roster.Get("lee").pronouns.count("he"));
  EXPECT_EQ(roster.Find("nobody"), nullptr);
}

TEST(RosterTest, RejectsDuplicateAliasNamingBothMembers) {
  std::string error = LoadError(R"({"members":[
    {"id":"a","canonical_name":"X","aliases":["X"],"party":"petitioner_side"},
    {"id":"b","canonical_name":"Y","aliases":["Y","X"],"party":"defendant_side"}]})");
  EXPECT_NE(error.find("'a'"), std::string::npos) << error;
  EXPECT_NE(error.find("'b'"), std::string::npos) << error;
}

TEST(RosterTest, RejectsInvalidDocuments) {
  EXPECT_NE(LoadError(R"({"members":[]})"), "");
  EXPECT_NE(LoadError(R"({"members":[], "extra": 1})"), "");
  EXPECT_NE(LoadError("not json"), "");
  EXPECT_NE(LoadError(R"({"members":[{"id":"a","canonical_name":"X",
    "aliases":["X"],"party":"petitioner_side","gender":"m"}]})"),
            "");
  EXPECT_NE(LoadError(R"({"members":[{"id":"a","canonical_name":"Z",
    "aliases":["X"],"party":"petitioner_side"}]})"),
            "");
  EXPECT_NE(LoadError(R"({"members":[{"id":"a","canonical_name":"X",
    "aliases":["X"],"party":"plaintiff"}]})"),
            "");
  EXPECT_NE(LoadError(R"({"members":[
    {"id":"a","canonical_name":"X","aliases":["X"],"party":"petitioner_side"},
    {"id":"a","canonical_name":"Y","aliases":["Y"],"party":"petitioner_side"}]})"),
            "");
  EXPECT_NE(LoadError(R"({"members":[{"id":"a","canonical_name":"X",
    "aliases":[],"party":"petitioner_side"}]})"),
            "");
}

TEST(DetectAliasMentionsTest, DirectMatch) {
  PartyRoster roster = LeeRoster();
  auto mentions = DetectAliasMentions(FlatSentence(1, "Lee sold drugs"), roster);
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].span, (Span{0, 1}));
  EXPECT_EQ(mentions[0].member_id, "lee");
  EXPECT_EQ(mentions[0].kind, MentionKind::kAlias);
}

TEST(DetectAliasMentionsTest, MultiTokenLongestMatch) {
  PartyRoster roster = LeeRoster();
  auto mentions =
      DetectAliasMentions(FlatSentence(1, "the United States argued"), roster);
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].span, (Span{1, 3}));
  EXPECT_EQ(mentions[0].member_id, "us");
}

TEST(DetectAliasMentionsTest, NoMatch) {
  EXPECT_TRUE(DetectAliasMentions(FlatSentence(1, "the informant spoke"),
                                  LeeRoster())
                  .empty());
}

TEST(DetectAliasMentionsTest, CaseRules) {
  PartyRoster roster = LeeRoster();
  // Long aliases ignore case; two-character aliases do not.
  EXPECT_EQ(DetectAliasMentions(FlatSentence(1, "LEE and united states"), roster)
                .size(),
            2u);
  auto short_alias = DetectAliasMentions(FlatSentence(1, "US told us"), roster);
  ASSERT_EQ(short_alias.size(), 1u);
  EXPECT_EQ(short_alias[0].span, (Span{0, 1}));
}

TEST(DetectAliasMentionsTest, Possessive) {
  auto mentions =
      DetectAliasMentions(FlatSentence(1, "Lee's lawyer erred"), LeeRoster());
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].span, (Span{0, 1}));
  // "Lees" is not a possessive.
  EXPECT_TRUE(DetectAliasMentions(FlatSentence(1, "Lees"), LeeRoster()).empty());
}

TEST(DetectAliasMentionsTest, OverlapPrefersLongestThenLeftmost) {
  PartyRoster roster({
      Member("ab", {"A B"}, Side::kPetitioner),
      Member("bcd", {"B C D"}, Side::kDefendant),
      Member("d", {"Dee"}, Side::kDefendant),
  });
  auto mentions = DetectAliasMentions(FlatSentence(1, "A B C D"), roster);
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].member_id, "bcd");

  PartyRoster pair({
      Member("ab", {"A B"}, Side::kPetitioner),
      Member("bc", {"B C"}, Side::kDefendant),
  });
  mentions = DetectAliasMentions(FlatSentence(1, "A B C"), pair);
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].member_id, "ab");
}

std::vector<Sentence> Doc(std::initializer_list<const char *> texts) {
  std::vector<Sentence> out;
  int id = 1;
  for (const char *t : texts) out.push_back(FlatSentence(id++, t));
  return out;
}

TEST(ResolvePronounsTest, CrossSentenceHit) {
  PartyRoster roster = LeeRoster();
  MentionIndex index =
      ResolveMentions(Doc({"Lee sold drugs .", "He was arrested ."}), roster, 3);
  ASSERT_EQ(index.size(), 2u);
  const Mention &he = index.mentions()[1];
  EXPECT_EQ(he.sentence_id, 2);
  EXPECT_EQ(he.span, (Span{0, 1}));
  EXPECT_EQ(he.member_id, "lee");
  EXPECT_EQ(he.kind, MentionKind::kPronoun);
}

TEST(ResolvePronounsTest, NoAntecedent) {
  EXPECT_EQ(ResolveMentions(Doc({"He was arrested ."}), LeeRoster(), 3).size(),
            0u);
}

TEST(ResolvePronounsTest, NearestCompetingAntecedent) {
  PartyRoster roster({
      Member("beta", {"Beta"}, Side::kPetitioner, {"they"}),
      Member("acme", {"Acme"}, Side::kDefendant, {"they"}),
  });
  // Beta at distance 12, Acme at distance 5.
  MentionIndex index = ResolveMentions(
      Doc({"Beta w w w w w w Acme w w w w they"}), roster, 3);
  ASSERT_EQ(index.size(), 3u);
  EXPECT_EQ(index.mentions()[2].member_id, "acme");
}

TEST(ResolvePronounsTest, WindowBounds) {
  PartyRoster roster = LeeRoster();
  auto doc = Doc({"Lee spoke .", "x .", "y .", "z .", "He left ."});
  EXPECT_EQ(ResolveMentions(doc, roster, 3).size(), 1u);
  EXPECT_EQ(ResolveMentions(doc, roster, 4).size(), 2u);
  EXPECT_EQ(ResolveMentions(Doc({"Lee said he left"}), roster, 0).size(), 2u);
}

TEST(ResolvePronounsTest, ChainsThroughResolvedPronouns) {
  PartyRoster roster = LeeRoster();
  auto doc = Doc({"Lee spoke .", "x .", "y .", "He left .", "z .", "y .",
                  "His lawyer wept ."});
  MentionIndex index = ResolveMentions(doc, roster, 3);
  ASSERT_EQ(index.size(), 3u);
  EXPECT_EQ(index.mentions()[2].sentence_id, 7);
  EXPECT_EQ(index.mentions()[2].member_id, "lee");
}

TEST(ResolvePronounsTest, SkipsIncompatibleNearerMention) {
  PartyRoster roster = LeeRoster();
  MentionIndex index =
      ResolveMentions(Doc({"Lee sued the United States and it lost"}), roster);
  ASSERT_EQ(index.size(), 3u);
  EXPECT_EQ(index.mentions()[2].member_id, "us");
  index = ResolveMentions(Doc({"Lee sued the United States and he lost"}),
                          roster);
  ASSERT_EQ(index.size(), 3u);
  EXPECT_EQ(index.mentions()[2].member_id, "lee");
}

TEST(ResolvePronounsTest, RejectsNegativeWindow) {
  EXPECT_THROW(ResolveMentions(Doc({"Lee"}), LeeRoster(), -1),
               std::invalid_argument);
}

TEST(ResolvePronounsTest, PropertiesOnTreebank) {
  PartyRoster roster = testing::DemoRoster();
  std::vector<Sentence> doc = testing::Treebank();
  MentionIndex full = ResolveMentions(doc, roster);
  EXPECT_EQ(full, ResolveMentions(doc, roster));
  for (const Mention &m : full.mentions()) {
    const PartyMember *member = roster.Find(m.member_id);
    ASSERT_NE(member, nullptr);
    if (m.kind == MentionKind::kPronoun) {
      const Sentence &s = doc[m.sentence_id - 1];
      EXPECT_TRUE(member->pronouns.count(ToLower(s.tokens[m.span.start])));
    }
  }
  // Dropping trailing sentences never changes earlier mentions.
  for (size_t k = 1; k < doc.size(); k += 7) {
    std::vector<Sentence> prefix(doc.begin(), doc.begin() + k);
    MentionIndex partial = ResolveMentions(prefix, roster);
    std::vector<Mention> expected;
    for (const Mention &m : full.mentions()) {
      if (m.sentence_id <= static_cast<int>(k)) expected.push_back(m);
    }
    EXPECT_EQ(partial.mentions(), expected) << "prefix " << k;
  }
}

}  // namespace
}  // namespace partysent
