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

#include "gtest/gtest.h"
#include "test_util.h"

namespace partysent {
namespace {

using json = nlohmann::json;

TEST(AnalyzeDocumentTest, Example1) {
  PartyRoster roster = testing::DemoRoster();
  DocumentAnalysis analysis = AnalyzeDocument({testing::Example1()}, roster,
                                              testing::DemoLexicon());
  const PartySentimentReport &report = analysis.report;
  ASSERT_EQ(report.assignments.size(), 2u);
  EXPECT_EQ(report.assignments[0].member_id, "officials");
  EXPECT_EQ(report.assignments[0].rule, AssignmentRule::kNpFallbackSame);
  EXPECT_DOUBLE_EQ(report.assignments[0].score.value, 0.2);
  EXPECT_EQ(report.assignments[1].member_id, "lee");
  EXPECT_NEAR(report.assignments[1].score.value, -0.6, 1e-12);
  EXPECT_EQ(report.assignments[1].source,
            (AssignmentSource{1, 1, PhraseKind::kNP}));
  EXPECT_EQ(report.per_member.at("lee").polarity, Polarity::kNegative);
  EXPECT_EQ(report.per_party.at(Side::kPetitioner).polarity(),
            Polarity::kNegative);
  EXPECT_EQ(report.per_party.at(Side::kDefendant).polarity(),
            Polarity::kNonNegative);
}

TEST(AnalyzeDocumentTest, FlipFallbackChangesExample1) {
  AnalysisOptions options;
  options.np_fallback = NpFallback::kFlip;
  DocumentAnalysis analysis =
      AnalyzeDocument({testing::Example1()}, testing::DemoRoster(),
                      testing::DemoLexicon(), options);
  EXPECT_EQ(analysis.report.per_member.at("lee").polarity,
            Polarity::kNonNegative);
  EXPECT_EQ(analysis.report.assignments[1].rule,
            AssignmentRule::kNpFallbackFlip);
}

TEST(AnalyzeDocumentTest, EmptyDocument) {
  DocumentAnalysis analysis =
      AnalyzeDocument({}, testing::DemoRoster(), testing::DemoLexicon());
  EXPECT_TRUE(analysis.report.assignments.empty());
  for (const auto &[side, summary] : analysis.report.per_party) {
    EXPECT_EQ(summary.member_count, 0);
  }
}

TEST(AnalyzeDocumentTest, NoPartyMentions) {
  DocumentAnalysis analysis = AnalyzeDocument(
      {testing::SentenceOf(1, "(S (NP (DT The) (NN court)) (VP (VBD erred)))")},
      testing::DemoRoster(), testing::DemoLexicon());
  EXPECT_TRUE(analysis.report.assignments.empty());
  EXPECT_TRUE(analysis.report.per_member.empty());
}

TEST(AnalyzeDocumentTest, TreebankInvariants) {
  PartyRoster roster = testing::DemoRoster();
  DocumentAnalysis analysis =
      AnalyzeDocument(testing::Treebank(), roster, testing::DemoLexicon());
  EXPECT_FALSE(analysis.report.assignments.empty());
  for (const SubSentenceAnalysis &entry : analysis.subs) {
    const PartyAssignment *direct = nullptr;
    for (const PartyAssignment &a : entry.assignments) {
      EXPECT_NE(roster.Find(a.member_id), nullptr);
      EXPECT_EQ(a.source.sentence_id, entry.sub.parent_sentence_id);
      EXPECT_EQ(a.source.sub_sentence, entry.sub.index);
      if (a.rule == AssignmentRule::kVpDirect) direct = &a;
      if (a.rule == AssignmentRule::kNpOpposite) {
        ASSERT_NE(direct, nullptr);
        EXPECT_EQ(a.score.value, -direct->score.value);
      }
    }
  }
  for (const auto &[side, summary] : analysis.report.per_party) {
    if (summary.mean) {
      EXPECT_EQ(*summary.polarity(), PolarityOf(*summary.mean));
    }
  }
}

TEST(ReportToJsonTest, Shape) {
  PartyRoster roster = testing::DemoRoster();
  DocumentAnalysis analysis = AnalyzeDocument({testing::Example1()}, roster,
                                              testing::DemoLexicon());
  json report = ReportToJson(analysis, roster, {{"k", "v"}});
  EXPECT_EQ(report["sentence_count"], 1);
  EXPECT_EQ(report["per_party"]["petitioner_side"]["class"], "negative");
  EXPECT_EQ(report["per_party"]["defendant_side"]["class"], "non_negative");
  EXPECT_EQ(report["per_party"]["defendant_side"]["member_count"], 1);
  EXPECT_EQ(report["per_member"]["lee"]["assignment_count"], 1);
  EXPECT_EQ(report["per_member"]["lee"]["party"], "petitioner_side");
  json a = report["assignments"][1];
  EXPECT_EQ(a["member"], "lee");
  EXPECT_EQ(a["class"], "negative");
  EXPECT_EQ(a["sentence_id"], 1);
  EXPECT_EQ(a["sub_sentence"], 1);
  EXPECT_EQ(a["phrase"], "NP");
  EXPECT_EQ(a["rule"], "np_fallback_same");
  EXPECT_EQ(report["config_echo"]["k"], "v");
}

TEST(ReportToJsonTest, EmptySideOmitsValue) {
  PartyRoster roster = testing::DemoRoster();
  DocumentAnalysis analysis = AnalyzeDocument({}, roster, testing::DemoLexicon());
  json report = ReportToJson(analysis, roster, json::object());
  EXPECT_EQ(report["sentence_count"], 0);
  EXPECT_EQ(report["per_party"]["petitioner_side"],
            (json{{"member_count", 0}}));
  EXPECT_TRUE(report["assignments"].empty());
}

TEST(AssignmentsToCsvTest, Rows) {
  PartyRoster roster = testing::DemoRoster();
  DocumentAnalysis analysis = AnalyzeDocument({testing::Example1()}, roster,
                                              testing::DemoLexicon());
  EXPECT_EQ(AssignmentsToCsv(analysis, "a,b.ptb"),
            "\"a,b.ptb\",officials,0.2,non_negative,1,0,NP,np_fallback_same\n"
            "\"a,b.ptb\",lee," +
                FormatValue(analysis.report.assignments[1].score.value) +
                ",negative,1,1,NP,np_fallback_same\n");
}

TEST(InspectDocumentTest, Stages) {
  PartyRoster roster = testing::DemoRoster();
  DocumentAnalysis analysis = AnalyzeDocument({testing::Example1()}, roster,
                                              testing::DemoLexicon());
  std::string mentions = InspectDocument(analysis, InspectStage::kMentions);
  EXPECT_NE(mentions.find("officials@s1 [3,5)"), std::string::npos) << mentions;
  EXPECT_NE(mentions.find("lee@s1 [13,14)"), std::string::npos) << mentions;
  std::string subs = InspectDocument(analysis, InspectStage::kSubsentences);
  EXPECT_NE(subs.find("sub 1: Lee had sold"), std::string::npos) << subs;
  EXPECT_NE(subs.find("dropped: [that]"), std::string::npos) << subs;
  std::string phrases = InspectDocument(analysis, InspectStage::kPhrases);
  EXPECT_NE(phrases.find("NP \"Lee\" member=lee"), std::string::npos);
  std::string scores = InspectDocument(analysis, InspectStage::kScores);
  EXPECT_NE(scores.find("-> lee"), std::string::npos);
  EXPECT_FALSE(ParseInspectStage("tokens").has_value());
}

}  // namespace
}  // namespace partysent
