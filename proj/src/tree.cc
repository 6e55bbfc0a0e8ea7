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

#include "partysent/tree.h"

#include <cctype>
#include <utility>

namespace partysent {

namespace {

enum class TokenType { kOpen, kClose, kAtom, kEnd };

// Splits bracketed text into parentheses and whitespace-separated atoms.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  TokenType Peek() {
    SkipSpace();
    if (pos_ >= text_.size()) return TokenType::kEnd;
    if (text_[pos_] == '(') return TokenType::kOpen;
    if (text_[pos_] == ')') return TokenType::kClose;
    return TokenType::kAtom;
  }

  void Advance() { ++pos_; }

  std::string_view Atom() {
    SkipSpace();
    size_t begin = pos_;
    while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) ++pos_;
    return text_.substr(begin, pos_ - begin);
  }

  size_t position() const { return pos_; }

 private:
  static bool IsDelimiter(char c) {
    return c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c));
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
};

std::string At(size_t pos) { return " at offset " + std::to_string(pos); }

// Parses "( label? child+ )"; the opening paren is the next token.
ParseTree ParseNode(Lexer &lex) {
  size_t open = lex.position();
  lex.Advance();
  std::string label;
  if (lex.Peek() == TokenType::kAtom) label = std::string(lex.Atom());
  std::vector<ParseTree> children;
  for (;;) {
    switch (lex.Peek()) {
      case TokenType::kEnd:
        throw PtbError(PtbError::Kind::kUnbalancedBrackets,
                       "unclosed bracket opened" + At(open));
      case TokenType::kOpen:
        children.push_back(ParseNode(lex));
        break;
      case TokenType::kAtom:
        children.push_back(ParseTree::Leaf(std::string(lex.Atom())));
        break;
      case TokenType::kClose:
        if (children.empty()) {
          throw PtbError(PtbError::Kind::kEmptyNode,
                         "node '" + label + "' has no children" + At(open));
        }
        lex.Advance();
        return ParseTree::Node(std::move(label), std::move(children));
    }
  }
}

bool IsWrapper(const ParseTree &tree) {
  if (tree.is_leaf() || tree.children().size() != 1) return false;
  if (tree.children().front().is_leaf()) return false;
  return tree.label().empty() || tree.label() == "ROOT" ||
         tree.label() == "TOP";
}

std::string EscapeToken(const std::string &token) {
  if (token == "(") return "-LRB-";
  if (token == ")") return "-RRB-";
  return token;
}

void Serialize(const ParseTree &tree, std::string *out) {
  if (tree.is_leaf()) {
    out->append(EscapeToken(tree.token()));
    return;
  }
  out->push_back('(');
  out->append(tree.label());
  for (const ParseTree &child : tree.children()) {
    out->push_back(' ');
    Serialize(child, out);
  }
  out->push_back(')');
}

void CollectLeaves(const ParseTree &tree, std::vector<std::string> *out) {
  if (tree.is_leaf()) {
    out->push_back(tree.token());
    return;
  }
  for (const ParseTree &child : tree.children()) CollectLeaves(child, out);
}

void Find(const ParseTree &tree, std::string_view label, bool maximal_only,
          std::vector<const ParseTree *> *out) {
  if (tree.is_leaf()) return;
  if (tree.base_label() == label) {
    out->push_back(&tree);
    if (maximal_only) return;
  }
  for (const ParseTree &child : tree.children()) {
    Find(child, label, maximal_only, out);
  }
}

}  // namespace

const char *PtbErrorKindName(PtbError::Kind kind) {
  switch (kind) {
    case PtbError::Kind::kUnbalancedBrackets: return "UnbalancedBrackets";
    case PtbError::Kind::kEmptyNode: return "EmptyNode";
    case PtbError::Kind::kMultipleRoots: return "MultipleRoots";
  }
  return "Unknown";
}

std::string_view BaseLabel(std::string_view label) {
  if (label.empty() || label.front() == '-') return label;
  size_t cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

ParseTree ParseTree::Leaf(std::string token) {
  ParseTree leaf;
  leaf.token_ = std::move(token);
  leaf.span_ = {0, 1};
  return leaf;
}

ParseTree ParseTree::Node(std::string label, std::vector<ParseTree> children) {
  if (children.empty()) {
    throw PtbError(PtbError::Kind::kEmptyNode,
                   "node '" + label + "' has no children");
  }
  ParseTree node;
  node.label_ = std::move(label);
  node.children_ = std::move(children);
  node.Renumber(0);
  return node;
}

void ParseTree::Renumber(int start) {
  if (is_leaf()) {
    span_ = {start, start + 1};
    return;
  }
  int pos = start;
  for (ParseTree &child : children_) {
    child.Renumber(pos);
    pos = child.span_.end;
  }
  span_ = {start, pos};
}

std::string_view ParseTree::base_label() const { return BaseLabel(label_); }

bool operator==(const ParseTree &a, const ParseTree &b) {
  return a.label_ == b.label_ && a.token_ == b.token_ &&
         a.children_ == b.children_;
}

ParseTree ParsePtb(std::string_view text) {
  Lexer lex(text);
  switch (lex.Peek()) {
    case TokenType::kEnd:
      throw PtbError(PtbError::Kind::kEmptyNode, "no tree in input");
    case TokenType::kAtom:
      throw PtbError(PtbError::Kind::kEmptyNode,
                     "expected '(' but found '" + std::string(lex.Atom()) +
                         "'");
    case TokenType::kClose:
      throw PtbError(PtbError::Kind::kUnbalancedBrackets,
                     "unexpected ')'" + At(lex.position()));
    case TokenType::kOpen:
      break;
  }
  ParseTree tree = ParseNode(lex);
  switch (lex.Peek()) {
    case TokenType::kEnd:
      break;
    case TokenType::kClose:
      throw PtbError(PtbError::Kind::kUnbalancedBrackets,
                     "unexpected ')'" + At(lex.position()));
    default:
      throw PtbError(PtbError::Kind::kMultipleRoots,
                     "trailing content after tree" + At(lex.position()));
  }
  while (IsWrapper(tree)) {
    ParseTree inner = tree.children().front();
    tree = std::move(inner);
  }
  return tree;
}

std::string SerializePtb(const ParseTree &tree) {
  std::string out;
  Serialize(tree, &out);
  return out;
}

std::vector<std::string> Leaves(const ParseTree &tree) {
  std::vector<std::string> out;
  CollectLeaves(tree, &out);
  return out;
}

std::vector<const ParseTree *> FindSubtrees(const ParseTree &tree,
                                            std::string_view label,
                                            bool maximal_only) {
  std::vector<const ParseTree *> out;
  Find(tree, label, maximal_only, &out);
  return out;
}

Sentence Sentence::FromTree(int id, ParseTree tree) {
  Sentence sentence;
  sentence.id = id;
  sentence.tokens = Leaves(tree);
  sentence.tree = std::move(tree);
  return sentence;
}

TreebankError::TreebankError(int line, const PtbError &cause)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         PtbErrorKindName(cause.kind()) + ": " + cause.what()),
      line_(line),
      kind_(cause.kind()) {}

std::vector<Sentence> ReadTreebank(std::istream &in) {
  std::vector<Sentence> sentences;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      ParseTree tree = ParsePtb(line);
      sentences.push_back(Sentence::FromTree(
          static_cast<int>(sentences.size()) + 1, std::move(tree)));
    } catch (const PtbError &e) {
      throw TreebankError(line_number, e);
    }
  }
  return sentences;
}

}  // namespace partysent
