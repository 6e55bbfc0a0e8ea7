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

#ifndef PARTYSENT_TREE_H_
#define PARTYSENT_TREE_H_

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partysent {

// Half-open token interval [start, end).
struct Span {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool empty() const { return end <= start; }
  bool Contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span &other) const {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const Span &, const Span &) = default;
};

// Errors raised while reading bracketed trees.
class PtbError : public std::runtime_error {
 public:
  enum class Kind { kUnbalancedBrackets, kEmptyNode, kMultipleRoots };

  PtbError(Kind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char *PtbErrorKindName(PtbError::Kind kind);

// Constituency parse tree node. A leaf carries a token and no children;
// every other node carries a label and at least one child. Spans index the
// leaf sequence of the tree the node was built in.
class ParseTree {
 public:
  ParseTree() = default;

  static ParseTree Leaf(std::string token);
  static ParseTree Node(std::string label, std::vector<ParseTree> children);

  bool is_leaf() const { return children_.empty(); }
  const std::string &label() const { return label_; }
  const std::string &token() const { return token_; }
  const std::vector<ParseTree> &children() const { return children_; }
  const Span &span() const { return span_; }

  // Label with any function tag or index removed: "NP-SBJ=2" -> "NP".
  std::string_view base_label() const;

  // True when the base label equals `tag`.
  bool Is(std::string_view tag) const { return !is_leaf() && base_label() == tag; }

  int num_leaves() const { return span_.length(); }

  // Structural equality over labels, tokens and shape.
  friend bool operator==(const ParseTree &a, const ParseTree &b);

 private:
  void Renumber(int start);

  std::string label_;
  std::string token_;
  std::vector<ParseTree> children_;
  Span span_;
};

// Strips function tags: the prefix before the first '-' or '='. Labels that
// start with '-' (e.g. "-NONE-", "-LRB-") are returned unchanged.
std::string_view BaseLabel(std::string_view label);

// Parses one bracketed tree. An outer "(ROOT ...)" or unlabeled "( ...)"
// wrapper around a single child is removed.
ParseTree ParsePtb(std::string_view text);

// Single-line bracketed rendering; ParsePtb(SerializePtb(t)) == t.
std::string SerializePtb(const ParseTree &tree);

std::vector<std::string> Leaves(const ParseTree &tree);

// Pre-order list of subtrees whose base label equals `label`. With
// `maximal_only`, matches nested inside another match are skipped.
std::vector<const ParseTree *> FindSubtrees(const ParseTree &tree,
                                            std::string_view label,
                                            bool maximal_only);

struct Sentence {
  int id = 0;
  ParseTree tree;
  std::vector<std::string> tokens;

  static Sentence FromTree(int id, ParseTree tree);
};

// Error while reading a treebank stream; carries the 1-based line number.
class TreebankError : public std::runtime_error {
 public:
  TreebankError(int line, const PtbError &cause);

  int line() const { return line_; }
  PtbError::Kind kind() const { return kind_; }

 private:
  int line_;
  PtbError::Kind kind_;
};

// Reads one tree per line, skipping blank lines. Sentence ids are assigned
// 1, 2, ... in document order.
std::vector<Sentence> ReadTreebank(std::istream &in);

}  // namespace partysent

#endif  // PARTYSENT_TREE_H_
