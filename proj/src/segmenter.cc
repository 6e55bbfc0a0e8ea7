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

#include "partysent/segmenter.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "partysent/text.h"

namespace partysent {

namespace {

// Mutable copy of a tree that remembers each leaf's parent token position.
struct WorkNode {
  std::string label;
  std::string token;
  int position = -1;
  std::vector<WorkNode> children;

  bool is_leaf() const { return children.empty(); }
  std::string_view base_label() const { return BaseLabel(label); }
};

WorkNode FromTree(const ParseTree &tree) {
  WorkNode node;
  if (tree.is_leaf()) {
    node.token = tree.token();
    node.position = tree.span().start;
    return node;
  }
  node.label = tree.label();
  for (const ParseTree &child : tree.children()) {
    node.children.push_back(FromTree(child));
  }
  return node;
}

ParseTree ToTree(const WorkNode &node) {
  if (node.is_leaf()) return ParseTree::Leaf(node.token);
  std::vector<ParseTree> children;
  children.reserve(node.children.size());
  for (const WorkNode &child : node.children) children.push_back(ToTree(child));
  return ParseTree::Node(node.label, std::move(children));
}

void CollectPositions(const WorkNode &node, std::vector<int> *out) {
  if (node.is_leaf()) {
    out->push_back(node.position);
    return;
  }
  for (const WorkNode &child : node.children) CollectPositions(child, out);
}

std::vector<Span> ToSpans(std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  std::vector<Span> spans;
  for (int p : positions) {
    if (!spans.empty() && spans.back().end == p) {
      ++spans.back().end;
    } else {
      spans.push_back({p, p + 1});
    }
  }
  return spans;
}

const char *const kComplementizers[] = {
    "that",   "because", "when",  "whenever", "while", "although",
    "though", "if",      "whether", "since",  "unless", "until",
    "after",  "before",  "as",    "once",     "where", "wherever",
    "which",  "who",     "whom",  "whose",    "why",   "how",
};

bool IsSubordinatorNode(const WorkNode &node) {
  if (node.is_leaf()) {
    std::string lower = ToLower(node.token);
    return std::any_of(std::begin(kComplementizers), std::end(kComplementizers),
                       [&](const char *c) { return lower == c; });
  }
  std::string_view label = node.base_label();
  return label == "IN" || label.substr(0, 2) == "WH";
}

// Removes maximal SBAR subtrees from `node`, appending them to `sbars`.
// Returns nothing if no leaves remain.
std::optional<WorkNode> Excise(WorkNode node, std::vector<WorkNode> *sbars) {
  if (node.is_leaf()) return node;
  if (node.base_label() == "SBAR") {
    sbars->push_back(std::move(node));
    return std::nullopt;
  }
  std::vector<WorkNode> kept;
  for (WorkNode &child : node.children) {
    std::optional<WorkNode> rest = Excise(std::move(child), sbars);
    if (rest) kept.push_back(std::move(*rest));
  }
  if (kept.empty()) return std::nullopt;
  node.children = std::move(kept);
  return node;
}

class Splitter {
 public:
  Splitter(const Sentence &sentence, std::vector<std::string> *warnings)
      : sentence_(sentence), warnings_(warnings) {}

  std::vector<SubSentence> Run() {
    Process(FromTree(sentence_.tree), {});
    std::stable_sort(out_.begin(), out_.end(),
                     [](const SubSentence &a, const SubSentence &b) {
                       return a.first_token() < b.first_token();
                     });
    for (size_t i = 0; i < out_.size(); ++i) out_[i].index = static_cast<int>(i);
    return std::move(out_);
  }

 private:
  void Process(WorkNode clause, std::vector<int> dropped) {
    std::vector<WorkNode> sbars;
    std::optional<WorkNode> residual = Excise(std::move(clause), &sbars);
    if (residual) {
      Emit(*residual, dropped);
      dropped.clear();
    } else if (warnings_ != nullptr) {
      warnings_->push_back("sentence " + std::to_string(sentence_.id) +
                           ": EmptyResidual: clause consists only of "
                           "subordinate clauses");
    }
    for (WorkNode &sbar : sbars) {
      std::vector<WorkNode> &children = sbar.children;
      // Dropped tokens of an empty residual travel with the first SBAR.
      std::vector<int> own = std::move(dropped);
      dropped.clear();
      size_t first = 0;
      if (children.size() > 1 && IsSubordinatorNode(children.front())) {
        CollectPositions(children.front(), &own);
        first = 1;
      }
      WorkNode body;
      if (children.size() - first == 1 && !children[first].is_leaf()) {
        body = std::move(children[first]);
      } else {
        body.label = "FRAG";
        body.children.assign(std::make_move_iterator(children.begin() + first),
                             std::make_move_iterator(children.end()));
      }
      Process(std::move(body), std::move(own));
    }
  }

  void Emit(const WorkNode &node, const std::vector<int> &dropped) {
    SubSentence sub;
    sub.parent_sentence_id = sentence_.id;
    sub.tree = ToTree(node);
    std::vector<int> positions;
    CollectPositions(node, &positions);
    sub.covered_spans = ToSpans(std::move(positions));
    sub.dropped_tokens = ToSpans(dropped);
    out_.push_back(std::move(sub));
  }

  const Sentence &sentence_;
  std::vector<std::string> *warnings_;
  std::vector<SubSentence> out_;
};

}  // namespace

int SubSentence::ParentPosition(int local_index) const {
  int remaining = local_index;
  for (const Span &span : covered_spans) {
    if (remaining < span.length()) return span.start + remaining;
    remaining -= span.length();
  }
  return -1;
}

std::vector<int> SubSentence::ParentPositions(const Span &local) const {
  std::vector<int> out;
  for (int i = local.start; i < local.end; ++i) out.push_back(ParentPosition(i));
  return out;
}

int SubSentence::first_token() const {
  return covered_spans.empty() ? -1 : covered_spans.front().start;
}

bool IsSubordinator(const ParseTree &tree) {
  return IsSubordinatorNode(FromTree(tree));
}

std::vector<SubSentence> SplitSubsentences(const Sentence &sentence,
                                           std::vector<std::string> *warnings) {
  return Splitter(sentence, warnings).Run();
}

}  // namespace partysent
