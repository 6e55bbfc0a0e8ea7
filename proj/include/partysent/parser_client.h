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

#ifndef PARTYSENT_PARSER_CLIENT_H_
#define PARTYSENT_PARSER_CLIENT_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace partysent {

// Environment variable holding the default parser service URL.
inline constexpr char kParserUrlEnv[] = "PARTY_SENT_PARSER_URL";

// An HTTP constituency-parser service answering POST {base_url}/parse with
// {"sentences":[{"parse": "<bracketed tree>"}, ...]}.
struct ParserEndpoint {
  std::string base_url;
  double timeout_seconds = 30.0;
  int max_retries = 2;
  // First retry delay; doubles on every further attempt.
  double initial_backoff_seconds = 0.5;

  // Throws std::invalid_argument on a bad URL, timeout or retry count.
  void Validate() const;

  // Endpoint from PARTY_SENT_PARSER_URL, if the variable is set.
  static bool FromEnvironment(ParserEndpoint *endpoint);
};

class ParserError : public std::runtime_error {
 public:
  enum class Kind { kUnreachable, kBadResponse, kTimeout };

  ParserError(Kind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char *ParserErrorKindName(ParserError::Kind kind);

// Sends `text` to the service and returns one validated bracketed tree per
// sentence, in document order. Transport failures are retried with
// exponential backoff. Throws std::invalid_argument for empty text.
std::vector<std::string> ParseDocument(const ParserEndpoint &endpoint,
                                       const std::string &text);

inline constexpr int kDefaultMaxConnections = 4;

// ParseDocument over several documents with at most `max_connections`
// requests in flight. Results are in input order; the first failing
// document's error is rethrown.
std::vector<std::vector<std::string>> ParseDocuments(
    const ParserEndpoint &endpoint, const std::vector<std::string> &texts,
    int max_connections = kDefaultMaxConnections);

}  // namespace partysent

#endif  // PARTYSENT_PARSER_CLIENT_H_
