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

#ifndef PARTYSENT_TESTS_TEST_UTIL_H_
#define PARTYSENT_TESTS_TEST_UTIL_H_

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "partysent/roster.h"
#include "partysent/sentiment.h"
#include "partysent/tree.h"

namespace partysent::testing {

inline std::string DataPath(const std::string &name) {
  return std::string(PARTYSENT_DATA_DIR) + "/" + name;
}

inline std::string TestDataPath(const std::string &name) {
  return std::string(PARTYSENT_TESTDATA_DIR) + "/" + name;
}

inline std::vector<Sentence> ReadTreebankFile(const std::string &path) {
  std::ifstream in(path);
  return ReadTreebank(in);
}

inline std::vector<Sentence> Treebank() {
  return ReadTreebankFile(TestDataPath("treebank.ptb"));
}

inline Sentence Example1() {
  return ReadTreebankFile(TestDataPath("example1.ptb")).at(0);
}

inline PartyRoster DemoRoster() {
  return LoadRosterFile(DataPath("demo_roster.json"));
}

inline Lexicon DemoLexicon() {
  return LoadLexiconFile(DataPath("demo_lexicon.tsv"));
}

inline Sentence SentenceOf(int id, const std::string &ptb) {
  return Sentence::FromTree(id, ParsePtb(ptb));
}

// Sentence with a flat tree, for token-level tests.
inline Sentence FlatSentence(int id, const std::string &text) {
  std::istringstream words(text);
  std::vector<ParseTree> leaves;
  std::string word;
  while (words >> word) {
    leaves.push_back(ParseTree::Node("X", {ParseTree::Leaf(word)}));
  }
  return Sentence::FromTree(id, ParseTree::Node("S", std::move(leaves)));
}

// Random constituency trees over a small label set, with SBARs that
// sometimes open with a subordinator.
class TreeGenerator {
 public:
  explicit TreeGenerator(unsigned seed) : rng_(seed) {}

  ParseTree Generate(int max_depth = 6) { return Node("S", max_depth); }

 private:
  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  ParseTree Preterminal() {
    static const char *const kTags[] = {"NN", "NNP", "VBD", "DT", "JJ", "RB"};
    static const char *const kWords[] = {"Lee", "court", "sold", "the",
                                         "guilty", "not", "government", "ruled"};
    return ParseTree::Node(kTags[Uniform(0, 5)],
                           {ParseTree::Leaf(kWords[Uniform(0, 7)])});
  }

  ParseTree Node(const std::string &label, int depth) {
    if (depth <= 0) return ParseTree::Node(label, {Preterminal()});
    std::vector<ParseTree> children;
    if (label == "SBAR") {
      int opener = Uniform(0, 3);
      if (opener == 0) {
        children.push_back(ParseTree::Node("IN", {ParseTree::Leaf("because")}));
      } else if (opener == 1) {
        children.push_back(ParseTree::Leaf("that"));
      } else if (opener == 2) {
        children.push_back(ParseTree::Node(
            "WHNP", {ParseTree::Node("WP", {ParseTree::Leaf("who")})}));
      }
      children.push_back(Node("S", depth - 1));
      return ParseTree::Node(label, std::move(children));
    }
    static const char *const kLabels[] = {"NP", "VP", "PP", "SBAR", "ADJP"};
    int n = Uniform(1, 3);
    for (int i = 0; i < n; ++i) {
      int pick = Uniform(0, 6);
      if (pick < 5) {
        children.push_back(Node(kLabels[pick], depth - 1 - Uniform(0, 1)));
      } else {
        children.push_back(Preterminal());
      }
    }
    return ParseTree::Node(label, std::move(children));
  }

  std::mt19937 rng_;
};

}  // namespace partysent::testing

#endif  // PARTYSENT_TESTS_TEST_UTIL_H_
