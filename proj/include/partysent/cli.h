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

#ifndef PARTYSENT_CLI_H_
#define PARTYSENT_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partysent/aggregator.h"
#include "partysent/parser_client.h"
#include "partysent/pipeline.h"

namespace partysent {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitParser = 4;

enum class InputMode { kTrees, kText };
enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  std::string roster_path;
  std::string lexicon_path;
  InputMode input_mode = InputMode::kTrees;
  // One document per file.
  std::vector<std::string> inputs;
  NpFallback np_fallback = NpFallback::kSame;
  int coref_window = kDefaultCorefWindow;
  std::string output_path = "-";
  OutputFormat format = OutputFormat::kJson;
  // 0 means one worker per available core.
  int workers = 0;
  ParserEndpoint endpoint;
  int max_connections = kDefaultMaxConnections;
};

// Runs the full pipeline and writes the report to config.output_path
// ("-" for stdout) via a temporary file and rename. Returns an exit code;
// diagnostics go to `err`.
int RunAnalyze(const RunConfig &config, std::ostream &out, std::ostream &err);

int RunInspect(const RunConfig &config, InspectStage stage, std::ostream &out,
               std::ostream &err);

// Command-line entry point: `analyze` and `inspect` subcommands.
int CliMain(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

}  // namespace partysent

#endif  // PARTYSENT_CLI_H_
