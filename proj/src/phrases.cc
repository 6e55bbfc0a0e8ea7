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

#include "partysent/phrases.h"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace partysent {

namespace {

const ParseTree *TopmostClause(const ParseTree &root) {
  std::deque<const ParseTree *> queue = {&root};
  while (!queue.empty()) {
    const ParseTree *node = queue.front();
    queue.pop_front();
    if (node->Is("S")) return node;
    for (const ParseTree &child : node->children()) queue.push_back(&child);
  }
  return nullptr;
}

PhraseUnit MakeUnit(PhraseKind kind, const ParseTree &tree) {
  PhraseUnit unit;
  unit.kind = kind;
  unit.tree = tree;
  unit.text = Leaves(tree);
  unit.span = tree.span();
  return unit;
}

}  // namespace

const char *PhraseKindName(PhraseKind kind) {
  switch (kind) {
    case PhraseKind::kNP: return "NP";
    case PhraseKind::kVP: return "VP";
    case PhraseKind::kWhole: return "WHOLE";
  }
  return "?";
}

std::vector<PhraseUnit> ExtractNpVp(const SubSentence &sub) {
  std::vector<PhraseUnit> units;
  const ParseTree *clause = TopmostClause(sub.tree);
  if (clause != nullptr) {
    const auto &children = clause->children();
    auto vp = std::find_if(children.begin(), children.end(),
                           [](const ParseTree &c) { return c.Is("VP"); });
    if (vp != children.end()) {
      auto np = std::find_if(children.begin(), vp,
                             [](const ParseTree &c) { return c.Is("NP"); });
      if (np != vp) units.push_back(MakeUnit(PhraseKind::kNP, *np));
      units.push_back(MakeUnit(PhraseKind::kVP, *vp));
      return units;
    }
  }
  units.push_back(MakeUnit(PhraseKind::kWhole, sub.tree));
  return units;
}

PhraseUnit AttachParty(PhraseUnit phrase, const MentionIndex &mentions,
                       const SubSentence &sub) {
  std::vector<int> positions = sub.ParentPositions(phrase.span);
  std::set<int> inside(positions.begin(), positions.end());
  phrase.member_id.reset();
  phrase.ambiguity.clear();
  for (const Mention *m : mentions.InSentence(sub.parent_sentence_id)) {
    bool contained = true;
    for (int t = m->span.start; t < m->span.end && contained; ++t) {
      contained = inside.count(t) > 0;
    }
    if (!contained) continue;
    if (!phrase.member_id) {
      phrase.member_id = m->member_id;
    } else if (m->member_id != *phrase.member_id &&
               std::find(phrase.ambiguity.begin(), phrase.ambiguity.end(),
                         m->member_id) == phrase.ambiguity.end()) {
      phrase.ambiguity.push_back(m->member_id);
    }
  }
  return phrase;
}

}  // namespace partysent
