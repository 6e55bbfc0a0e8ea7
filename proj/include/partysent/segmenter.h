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

#ifndef PARTYSENT_SEGMENTER_H_
#define PARTYSENT_SEGMENTER_H_

#include <string>
#include <vector>

#include "partysent/tree.h"

namespace partysent {

// A clause cut out of a sentence at SBAR boundaries. `tree` is renumbered
// from zero; `covered_spans` maps its leaves back to parent token positions.
struct SubSentence {
  int parent_sentence_id = 0;
  int index = 0;
  ParseTree tree;
  std::vector<Span> covered_spans;
  // Subordinating conjunctions / wh-words stripped from the SBAR that
  // introduced this clause, in parent token positions.
  std::vector<Span> dropped_tokens;

  // Parent token position of the clause's i-th leaf.
  int ParentPosition(int local_index) const;
  // Parent token positions covered by a local span, in order.
  std::vector<int> ParentPositions(const Span &local) const;
  // First parent position covered (ordering key).
  int first_token() const;
};

// Splits a sentence into sub-sentences: every subordinate clause (at any
// depth) becomes its own sub-sentence, and what remains of the enclosing
// clause becomes another. Residuals that end up empty are skipped and noted
// in `warnings`, if given.
std::vector<SubSentence> SplitSubsentences(
    const Sentence &sentence, std::vector<std::string> *warnings = nullptr);

// True if `tree` is a constituent that introduces an SBAR and should be
// dropped when the SBAR is split off: an IN/WHNP/WHADVP child or a bare
// complementizer leaf.
bool IsSubordinator(const ParseTree &tree);

}  // namespace partysent

#endif  // PARTYSENT_SEGMENTER_H_
