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

#include "partysent/parser_client.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <semaphore>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "partysent/tree.h"

namespace partysent {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Url {
  std::string origin;  // scheme://host[:port]
  std::string path_prefix;
};

Url SplitUrl(const std::string &base_url) {
  const std::string scheme = "http://";
  if (base_url.rfind(scheme, 0) != 0) {
    throw std::invalid_argument("parser URL must start with http://: '" +
                                base_url + "'");
  }
  size_t slash = base_url.find('/', scheme.size());
  Url url;
  url.origin = base_url.substr(0, slash);
  if (slash != std::string::npos) url.path_prefix = base_url.substr(slash);
  while (!url.path_prefix.empty() && url.path_prefix.back() == '/') {
    url.path_prefix.pop_back();
  }
  if (url.origin.size() == scheme.size()) {
    throw std::invalid_argument("parser URL has no host: '" + base_url + "'");
  }
  return url;
}

void SetTimeout(httplib::Client &client, double seconds) {
  auto whole = static_cast<time_t>(seconds);
  auto micros = static_cast<time_t>((seconds - whole) * 1e6);
  client.set_connection_timeout(whole, micros);
  client.set_read_timeout(whole, micros);
  client.set_write_timeout(whole, micros);
}

std::vector<std::string> DecodeResponse(const std::string &body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error &e) {
    throw ParserError(ParserError::Kind::kBadResponse,
                      std::string("response is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("sentences") ||
      !doc["sentences"].is_array()) {
    throw ParserError(ParserError::Kind::kBadResponse,
                      "response lacks a 'sentences' array");
  }
  std::vector<std::string> trees;
  const json &sentences = doc["sentences"];
  if (sentences.empty()) {
    throw ParserError(ParserError::Kind::kBadResponse,
                      "response contains no parses");
  }
  for (size_t i = 0; i < sentences.size(); ++i) {
    const json &entry = sentences[i];
    if (!entry.is_object() || !entry.contains("parse") ||
        !entry["parse"].is_string()) {
      throw ParserError(ParserError::Kind::kBadResponse,
                        "sentence " + std::to_string(i) + " has no parse");
    }
    std::string tree = entry["parse"].get<std::string>();
    try {
      ParsePtb(tree);
    } catch (const PtbError &e) {
      throw ParserError(ParserError::Kind::kBadResponse,
                        "sentence " + std::to_string(i) + ": " +
                            PtbErrorKindName(e.kind()) + ": " + e.what());
    }
    trees.push_back(std::move(tree));
  }
  return trees;
}

}  // namespace

const char *ParserErrorKindName(ParserError::Kind kind) {
  switch (kind) {
    case ParserError::Kind::kUnreachable: return "Unreachable";
    case ParserError::Kind::kBadResponse: return "BadResponse";
    case ParserError::Kind::kTimeout: return "Timeout";
  }
  return "Unknown";
}

void ParserEndpoint::Validate() const {
  SplitUrl(base_url);
  if (!(timeout_seconds > 0)) {
    throw std::invalid_argument("parser timeout must be positive");
  }
  if (max_retries < 0) {
    throw std::invalid_argument("parser max_retries must be >= 0");
  }
  if (initial_backoff_seconds < 0) {
    throw std::invalid_argument("parser backoff must be >= 0");
  }
}

bool ParserEndpoint::FromEnvironment(ParserEndpoint *endpoint) {
  const char *url = std::getenv(kParserUrlEnv);
  if (url == nullptr || *url == '\0') return false;
  endpoint->base_url = url;
  return true;
}

std::vector<std::string> ParseDocument(const ParserEndpoint &endpoint,
                                       const std::string &text) {
  if (text.empty()) throw std::invalid_argument("cannot parse empty text");
  endpoint.Validate();
  Url url = SplitUrl(endpoint.base_url);
  const std::string body = json{{"text", text}}.dump();

  double backoff = endpoint.initial_backoff_seconds;
  std::string last_error;
  bool timed_out = false;
  for (int attempt = 0; attempt <= endpoint.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::duration<double>(backoff));
      backoff *= 2;
    }
    httplib::Client client(url.origin);
    SetTimeout(client, endpoint.timeout_seconds);
    auto start = Clock::now();
    httplib::Result result =
        client.Post(url.path_prefix + "/parse", body, "application/json");
    if (result) {
      if (result->status != 200) {
        throw ParserError(ParserError::Kind::kBadResponse,
                          "parser returned HTTP " +
                              std::to_string(result->status));
      }
      return DecodeResponse(result->body);
    }
    double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    httplib::Error error = result.error();
    timed_out = error == httplib::Error::ConnectionTimeout ||
                (error == httplib::Error::Read &&
                 elapsed >= endpoint.timeout_seconds * 0.9);
    last_error = httplib::to_string(error);
  }
  const std::string attempts = std::to_string(endpoint.max_retries + 1);
  if (timed_out) {
    throw ParserError(ParserError::Kind::kTimeout,
                      "parser at " + endpoint.base_url + " timed out after " +
                          attempts + " attempt(s)");
  }
  throw ParserError(ParserError::Kind::kUnreachable,
                    "parser at " + endpoint.base_url + " unreachable after " +
                        attempts + " attempt(s): " + last_error);
}

std::vector<std::vector<std::string>> ParseDocuments(
    const ParserEndpoint &endpoint, const std::vector<std::string> &texts,
    int max_connections) {
  if (max_connections < 1) {
    throw std::invalid_argument("max_connections must be >= 1");
  }
  std::vector<std::vector<std::string>> results(texts.size());
  std::vector<std::exception_ptr> errors(texts.size());
  std::counting_semaphore<> slots(max_connections);
  std::vector<std::thread> workers;
  workers.reserve(texts.size());
  for (size_t i = 0; i < texts.size(); ++i) {
    slots.acquire();
    workers.emplace_back([&, i] {
      try {
        results[i] = ParseDocument(endpoint, texts[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
      slots.release();
    });
  }
  for (std::thread &worker : workers) worker.join();
  for (const std::exception_ptr &error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

}  // namespace partysent
