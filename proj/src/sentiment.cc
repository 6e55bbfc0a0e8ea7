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

#include "partysent/sentiment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

#include "partysent/text.h"

namespace partysent {

const char *PolarityName(Polarity polarity) {
  return polarity == Polarity::kNegative ? "negative" : "non_negative";
}

SentimentScore Flip(const SentimentScore &score) {
  // Avoid producing -0.0 so zero stays a fixed point in every rendering.
  return SentimentScore::Of(score.value == 0.0 ? 0.0 : -score.value);
}

void Lexicon::AddPrior(std::string_view token, double score) {
  if (!std::isfinite(score) || score < -1.0 || score > 1.0) {
    throw LexiconError("prior for '" + std::string(token) +
                       "' outside [-1, 1]");
  }
  std::string key = ToLower(token);
  if (score != 0.0 && negators_.count(key)) {
    throw LexiconError("'" + key + "' is both a negator and a scored prior");
  }
  if (!priors_.emplace(key, score).second) {
    throw LexiconError("duplicate prior '" + key + "'");
  }
}

void Lexicon::AddNegator(std::string_view token) {
  std::string key = ToLower(token);
  auto prior = priors_.find(key);
  if (prior != priors_.end() && prior->second != 0.0) {
    throw LexiconError("'" + key + "' is both a negator and a scored prior");
  }
  if (!negators_.insert(key).second) {
    throw LexiconError("duplicate negator '" + key + "'");
  }
}

void Lexicon::AddIntensifier(std::string_view token, double multiplier) {
  if (!std::isfinite(multiplier) || multiplier <= 0.0) {
    throw LexiconError("intensifier '" + std::string(token) +
                       "' must have a positive multiplier");
  }
  std::string key = ToLower(token);
  if (!intensifiers_.emplace(key, multiplier).second) {
    throw LexiconError("duplicate intensifier '" + key + "'");
  }
}

const double *Lexicon::Prior(std::string_view token) const {
  auto it = priors_.find(ToLower(token));
  return it == priors_.end() ? nullptr : &it->second;
}

bool Lexicon::IsNegator(std::string_view token) const {
  return negators_.count(ToLower(token)) > 0;
}

double Lexicon::Multiplier(std::string_view token) const {
  auto it = intensifiers_.find(ToLower(token));
  return it == intensifiers_.end() ? 1.0 : it->second;
}

namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t begin = 0;
  for (;;) {
    size_t tab = line.find('\t', begin);
    fields.push_back(line.substr(begin, tab - begin));
    if (tab == std::string::npos) break;
    begin = tab + 1;
  }
  return fields;
}

double ParseNumber(const std::string &text) {
  double value = 0.0;
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw LexiconError("invalid number '" + text + "'");
  }
  return value;
}

}  // namespace

Lexicon LoadLexicon(std::istream &in) {
  Lexicon lexicon;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.front() == '#') continue;
    try {
      std::vector<std::string> fields = SplitTabs(line);
      if (fields.size() < 2 || fields.size() > 3) {
        throw LexiconError("expected token<TAB>kind<TAB>value");
      }
      const std::string &token = fields[0];
      const std::string &kind = fields[1];
      if (token.empty()) throw LexiconError("empty token");
      if (kind == "negator") {
        lexicon.AddNegator(token);
      } else if (kind == "prior" || kind == "intensifier") {
        if (fields.size() != 3) throw LexiconError("missing value");
        double value = ParseNumber(fields[2]);
        if (kind == "prior") {
          lexicon.AddPrior(token, value);
        } else {
          lexicon.AddIntensifier(token, value);
        }
      } else {
        throw LexiconError("unknown kind '" + kind + "'");
      }
    } catch (const LexiconError &e) {
      throw LexiconError("line " + std::to_string(line_number) + ": " +
                         e.what());
    }
  }
  return lexicon;
}

Lexicon LoadLexiconFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon file '" + path + "'");
  try {
    return LoadLexicon(in);
  } catch (const LexiconError &e) {
    throw LexiconError(path + ": " + e.what());
  }
}

SentimentScore ScorePhrase(std::span<const std::string> tokens,
                           const Lexicon &lexicon) {
  std::vector<double> contributions;
  const int n = static_cast<int>(tokens.size());
  for (int i = 0; i < n; ++i) {
    const double *prior = lexicon.Prior(tokens[i]);
    if (prior == nullptr) continue;
    double contribution = *prior;
    for (int j = std::max(0, i - kNegationWindow); j < i; ++j) {
      if (lexicon.IsNegator(tokens[j])) {
        contribution = -contribution;
        break;
      }
    }
    for (int j = std::max(0, i - kIntensifierWindow); j < i; ++j) {
      contribution *= lexicon.Multiplier(tokens[j]);
    }
    contributions.push_back(contribution);
  }
  // Summing in sorted order makes the result independent of token order.
  std::sort(contributions.begin(), contributions.end());
  double sum = 0.0;
  for (double c : contributions) sum += c;
  const int scored = static_cast<int>(contributions.size());
  double value = std::clamp(sum / std::max(1, scored), -1.0, 1.0);
  if (value == 0.0) value = 0.0;
  return SentimentScore::Of(value);
}

}  // namespace partysent
