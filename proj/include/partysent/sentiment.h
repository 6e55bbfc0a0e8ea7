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

#ifndef PARTYSENT_SENTIMENT_H_
#define PARTYSENT_SENTIMENT_H_

#include <istream>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace partysent {

enum class Polarity { kNegative, kNonNegative };

const char *PolarityName(Polarity polarity);

// Polarity of a score value: negative iff value < 0.
inline Polarity PolarityOf(double value) {
  return value < 0 ? Polarity::kNegative : Polarity::kNonNegative;
}

struct SentimentScore {
  double value = 0.0;
  Polarity polarity = Polarity::kNonNegative;

  static SentimentScore Of(double value) { return {value, PolarityOf(value)}; }

  friend bool operator==(const SentimentScore &, const SentimentScore &) =
      default;
};

// Opposite score: value negated, polarity recomputed. flip(flip(s)) == s.
SentimentScore Flip(const SentimentScore &score);

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word-level sentiment knowledge. Keys are lower-cased.
class Lexicon {
 public:
  void AddPrior(std::string_view token, double score);
  void AddNegator(std::string_view token);
  void AddIntensifier(std::string_view token, double multiplier);

  const double *Prior(std::string_view token) const;
  bool IsNegator(std::string_view token) const;
  // 1.0 for tokens that are not intensifiers.
  double Multiplier(std::string_view token) const;

  size_t num_priors() const { return priors_.size(); }

 private:
  std::map<std::string, double, std::less<>> priors_;
  std::set<std::string, std::less<>> negators_;
  std::map<std::string, double, std::less<>> intensifiers_;
};

// Reads `token<TAB>kind<TAB>value` lines, kind one of prior, negator,
// intensifier. Blank lines and lines starting with '#' are skipped.
Lexicon LoadLexicon(std::istream &in);
Lexicon LoadLexiconFile(const std::string &path);

inline constexpr int kNegationWindow = 3;
inline constexpr int kIntensifierWindow = 2;

// Mean contribution of the prior-bearing tokens, clamped to [-1, 1]. A
// negator among the three preceding tokens inverts a contribution; any
// intensifiers among the two preceding tokens scale it.
SentimentScore ScorePhrase(std::span<const std::string> tokens,
                           const Lexicon &lexicon);

}  // namespace partysent

#endif  // PARTYSENT_SENTIMENT_H_
