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

#ifndef PARTYSENT_PHRASES_H_
#define PARTYSENT_PHRASES_H_

#include <optional>
#include <string>
#include <vector>

#include "partysent/roster.h"
#include "partysent/segmenter.h"
#include "partysent/tree.h"

namespace partysent {

enum class PhraseKind { kNP, kVP, kWhole };

const char *PhraseKindName(PhraseKind kind);

struct PhraseUnit {
  PhraseKind kind = PhraseKind::kWhole;
  ParseTree tree;
  std::vector<std::string> text;
  // Leaf interval within the sub-sentence tree.
  Span span;
  std::optional<std::string> member_id;
  // Other members mentioned inside the phrase, in order, without the one
  // that was attached.
  std::vector<std::string> ambiguity;
};

// Subject NP and main VP of the topmost S of the sub-sentence. Falls back to
// a single WHOLE unit when there is no S or the S has no VP child.
std::vector<PhraseUnit> ExtractNpVp(const SubSentence &sub);

// Attaches the leftmost mention lying entirely inside the phrase.
PhraseUnit AttachParty(PhraseUnit phrase, const MentionIndex &mentions,
                       const SubSentence &sub);

}  // namespace partysent

#endif  // PARTYSENT_PHRASES_H_
