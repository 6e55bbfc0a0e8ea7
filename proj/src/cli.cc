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

#include "partysent/cli.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

namespace partysent {

using json = nlohmann::json;

namespace {

// Aborts a run with an exit code and a diagnostic.
struct RunFailure {
  int code;
  std::string message;
};

struct Inputs {
  std::optional<PartyRoster> roster;
  Lexicon lexicon;
  std::vector<std::vector<Sentence>> documents;
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RunFailure{kExitConfig, "cannot open input '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void ValidateConfig(const RunConfig &config) {
  namespace fs = std::filesystem;
  if (config.inputs.empty()) {
    throw RunFailure{kExitConfig, "no input given (use --trees or --text)"};
  }
  for (const std::string &path :
       {config.roster_path, config.lexicon_path}) {
    if (path.empty() || !fs::is_regular_file(path)) {
      throw RunFailure{kExitConfig, "file not found: '" + path + "'"};
    }
  }
  for (const std::string &path : config.inputs) {
    if (!fs::is_regular_file(path)) {
      throw RunFailure{kExitConfig, "input not found: '" + path + "'"};
    }
  }
  if (config.coref_window < 0) {
    throw RunFailure{kExitConfig, "--coref-window must be >= 0"};
  }
  if (config.workers < 0) {
    throw RunFailure{kExitConfig, "--workers must be >= 0"};
  }
}

std::vector<std::vector<Sentence>> LoadTrees(const RunConfig &config) {
  std::vector<std::vector<Sentence>> documents;
  for (const std::string &path : config.inputs) {
    std::ifstream in(path);
    if (!in) throw RunFailure{kExitConfig, "cannot open input '" + path + "'"};
    try {
      documents.push_back(ReadTreebank(in));
    } catch (const TreebankError &e) {
      throw RunFailure{kExitInput, path + ":" + std::to_string(e.line()) +
                                       ": " + e.what()};
    }
  }
  return documents;
}

std::vector<std::vector<Sentence>> LoadText(const RunConfig &config) {
  ParserEndpoint endpoint = config.endpoint;
  if (endpoint.base_url.empty() && !ParserEndpoint::FromEnvironment(&endpoint)) {
    throw RunFailure{kExitConfig, std::string("--text needs --parser-url or ") +
                                      kParserUrlEnv};
  }
  try {
    endpoint.Validate();
  } catch (const std::invalid_argument &e) {
    throw RunFailure{kExitConfig, e.what()};
  }
  if (config.max_connections < 1) {
    throw RunFailure{kExitConfig, "--max-connections must be >= 1"};
  }
  std::vector<std::string> texts;
  std::vector<size_t> nonempty;
  for (size_t i = 0; i < config.inputs.size(); ++i) {
    std::string text = ReadFile(config.inputs[i]);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    nonempty.push_back(i);
    texts.push_back(std::move(text));
  }
  std::vector<std::vector<std::string>> parsed;
  try {
    parsed = ParseDocuments(endpoint, texts, config.max_connections);
  } catch (const ParserError &e) {
    throw RunFailure{kExitParser, std::string(ParserErrorKindName(e.kind())) +
                                      ": " + e.what()};
  }
  std::vector<std::vector<Sentence>> documents(config.inputs.size());
  for (size_t k = 0; k < nonempty.size(); ++k) {
    std::vector<Sentence> &sentences = documents[nonempty[k]];
    for (const std::string &tree : parsed[k]) {
      sentences.push_back(Sentence::FromTree(
          static_cast<int>(sentences.size()) + 1, ParsePtb(tree)));
    }
  }
  return documents;
}

Inputs LoadInputs(const RunConfig &config) {
  ValidateConfig(config);
  Inputs inputs;
  try {
    inputs.roster.emplace(LoadRosterFile(config.roster_path));
  } catch (const RosterError &e) {
    throw RunFailure{kExitConfig, e.what()};
  }
  try {
    inputs.lexicon = LoadLexiconFile(config.lexicon_path);
  } catch (const LexiconError &e) {
    throw RunFailure{kExitConfig, e.what()};
  }
  inputs.documents = config.input_mode == InputMode::kTrees ? LoadTrees(config)
                                                            : LoadText(config);
  return inputs;
}

std::vector<DocumentAnalysis> AnalyzeAll(const RunConfig &config,
                                         Inputs &inputs) {
  AnalysisOptions options;
  options.np_fallback = config.np_fallback;
  options.coref_window = config.coref_window;
  const size_t count = inputs.documents.size();
  std::vector<DocumentAnalysis> results(count);
  std::vector<std::exception_ptr> errors(count);
  size_t workers = config.workers > 0
                       ? static_cast<size_t>(config.workers)
                       : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        results[i] = AnalyzeDocument(std::move(inputs.documents[i]),
                                     *inputs.roster, inputs.lexicon, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread &t : pool) t.join();
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

json ConfigEcho(const RunConfig &config, const std::string &input) {
  return {
      {"input_mode", config.input_mode == InputMode::kTrees ? "trees" : "text"},
      {"input", input},
      {"roster", config.roster_path},
      {"lexicon", config.lexicon_path},
      {"np_fallback", NpFallbackName(config.np_fallback)},
      {"coref_window", config.coref_window},
      {"format", config.format == OutputFormat::kJson ? "json" : "csv"},
  };
}

void WriteOutput(const std::string &path, const std::string &content,
                 std::ostream &out) {
  if (path == "-") {
    out << content;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    file << content;
    file.close();
    if (!file) {
      throw RunFailure{kExitConfig, "cannot write output '" + path + "'"};
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw RunFailure{kExitConfig, "cannot write output '" + path + "'"};
  }
}

template <typename Fn>
int Guarded(std::ostream &err, Fn &&fn) {
  try {
    return fn();
  } catch (const RunFailure &failure) {
    err << "error: " << failure.message << "\n";
    return failure.code;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

void AddCommonOptions(CLI::App *cmd, RunConfig *config,
                      std::vector<std::string> *trees,
                      std::vector<std::string> *texts, std::string *fallback) {
  auto *trees_opt =
      cmd->add_option("--trees", *trees, "Bracketed parse file(s), one document each");
  auto *text_opt = cmd->add_option(
      "--text", *texts, "Raw text file(s) sent to the parser service");
  trees_opt->excludes(text_opt);
  cmd->add_option("--roster", config->roster_path, "Party roster JSON")
      ->required();
  cmd->add_option("--lexicon", config->lexicon_path, "Sentiment lexicon TSV")
      ->required();
  cmd->add_option("--np-fallback", *fallback,
                  "Subject score when the VP names no party")
      ->check(CLI::IsMember({"same", "flip"}))
      ->default_val("same");
  cmd->add_option("--coref-window", config->coref_window,
                  "Pronoun look-back in sentences")
      ->check(CLI::NonNegativeNumber)
      ->default_val(kDefaultCorefWindow);
  cmd->add_option("--workers", config->workers,
                  "Documents analysed in parallel (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--parser-url", config->endpoint.base_url,
                  std::string("Parser service URL (default $") + kParserUrlEnv +
                      ")");
  cmd->add_option("--parser-timeout", config->endpoint.timeout_seconds,
                  "Parser request timeout in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--parser-retries", config->endpoint.max_retries,
                  "Parser retries on transport failure")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-connections", config->max_connections,
                  "Concurrent parser requests")
      ->check(CLI::PositiveNumber);
}

void FinishConfig(RunConfig *config, std::vector<std::string> trees,
                  std::vector<std::string> texts, const std::string &fallback) {
  if (!texts.empty()) {
    config->input_mode = InputMode::kText;
    config->inputs = std::move(texts);
  } else {
    config->input_mode = InputMode::kTrees;
    config->inputs = std::move(trees);
  }
  config->np_fallback = *ParseNpFallback(fallback);
}

}  // namespace

int RunAnalyze(const RunConfig &config, std::ostream &out, std::ostream &err) {
  return Guarded(err, [&] {
    Inputs inputs = LoadInputs(config);
    std::vector<DocumentAnalysis> analyses = AnalyzeAll(config, inputs);
    std::string content;
    if (config.format == OutputFormat::kCsv) {
      content = std::string(kCsvHeader) + "\n";
      for (size_t i = 0; i < analyses.size(); ++i) {
        content += AssignmentsToCsv(analyses[i], config.inputs[i]);
      }
    } else {
      json reports = json::array();
      for (size_t i = 0; i < analyses.size(); ++i) {
        reports.push_back(ReportToJson(analyses[i], *inputs.roster,
                                       ConfigEcho(config, config.inputs[i])));
      }
      const json &doc = reports.size() == 1 ? reports[0] : reports;
      content = doc.dump(2) + "\n";
    }
    WriteOutput(config.output_path, content, out);
    return kExitOk;
  });
}

int RunInspect(const RunConfig &config, InspectStage stage, std::ostream &out,
               std::ostream &err) {
  return Guarded(err, [&] {
    Inputs inputs = LoadInputs(config);
    std::vector<DocumentAnalysis> analyses = AnalyzeAll(config, inputs);
    std::string content;
    for (size_t i = 0; i < analyses.size(); ++i) {
      content += "# " + config.inputs[i] + "\n";
      content += InspectDocument(analyses[i], stage);
    }
    WriteOutput(config.output_path, content, out);
    return kExitOk;
  });
}

int CliMain(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app("Party-level sentiment for legal opinion texts", "partysent");
  app.require_subcommand(1);

  RunConfig analyze_config;
  std::vector<std::string> analyze_trees, analyze_texts;
  std::string analyze_fallback;
  std::string format = "json";
  CLI::App *analyze = app.add_subcommand("analyze", "Write a party report");
  AddCommonOptions(analyze, &analyze_config, &analyze_trees, &analyze_texts,
                   &analyze_fallback);
  analyze->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  analyze->add_option("--out", analyze_config.output_path,
                      "Report path ('-' for stdout)")
      ->required();

  RunConfig inspect_config;
  std::vector<std::string> inspect_trees, inspect_texts;
  std::string inspect_fallback;
  std::string stage_name;
  CLI::App *inspect = app.add_subcommand("inspect", "Dump one pipeline stage");
  AddCommonOptions(inspect, &inspect_config, &inspect_trees, &inspect_texts,
                   &inspect_fallback);
  inspect->add_option("--stage", stage_name, "Stage to print")
      ->required()
      ->check(CLI::IsMember({"mentions", "subsentences", "phrases", "scores"}));
  inspect->add_option("--out", inspect_config.output_path,
                      "Dump path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitConfig;
  }

  if (analyze->parsed()) {
    FinishConfig(&analyze_config, std::move(analyze_trees),
                 std::move(analyze_texts), analyze_fallback);
    analyze_config.format =
        format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    return RunAnalyze(analyze_config, out, err);
  }
  FinishConfig(&inspect_config, std::move(inspect_trees),
               std::move(inspect_texts), inspect_fallback);
  return RunInspect(inspect_config, *ParseInspectStage(stage_name), out, err);
}

}  // namespace partysent
