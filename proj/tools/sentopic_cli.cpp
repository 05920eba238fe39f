// Copyright 2026 The Sentopic Authors
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

// Command-line front end. Talks to the engine only through the C API.
//
//   sentopic <stage> --config run.toml [--seed N] [--threads N]
//            [--output DIR] [--lexicon FILE] [--set section.key=value]...
//   sentopic run ...           all stages except sweep-k, in order
//   sentopic sentiment --lines FILE   score one text per line to stdout

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <cli11/CLI11.hpp>

#include "sentopic/sentopic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDependency = 3;
constexpr int kExitData = 4;

int exit_code(sentopic_status s) {
  switch (s) {
    case SENTOPIC_OK: return kExitOk;
    case SENTOPIC_ERR_USAGE: return kExitUsage;
    case SENTOPIC_ERR_DEPENDENCY: return kExitDependency;
    case SENTOPIC_ERR_DATA:
    case SENTOPIC_ERR_IO: return kExitData;
    case SENTOPIC_ERR_INTERNAL: break;
  }
  return kExitInternal;
}

int report_failure(sentopic_status s) {
  std::cerr << "sentopic: " << sentopic_status_name(s) << ": " << sentopic_last_error() << "\n";
  return exit_code(s);
}

struct ConfigDeleter {
  void operator()(sentopic_config* c) const { sentopic_config_free(c); }
};
using ConfigPtr = std::unique_ptr<sentopic_config, ConfigDeleter>;

struct Options {
  std::string config;
  std::string output;
  std::string lexicon;
  std::string seed;
  std::string threads;
  std::vector<std::string> overrides;
  std::string lines;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("-c,--config", o.config, "TOML run configuration")->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", o.output, "Output directory (overrides output.dir)");
  cmd->add_option("--seed", o.seed, "Sampler seed (overrides lda.seed)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", o.threads, "Worker thread cap (overrides run.threads)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--lexicon", o.lexicon, "Sentiment lexicon TSV (overrides resources.lexicon)");
  cmd->add_option("--set", o.overrides, "Override a config key: section.key=value");
  cmd->add_flag("-q,--quiet", o.quiet, "Do not print the stage summary");
}

sentopic_status build_config(const Options& o, ConfigPtr& out) {
  sentopic_config* raw = nullptr;
  sentopic_status s = o.config.empty() ? sentopic_config_new(&raw) : sentopic_config_load(o.config.c_str(), &raw);
  if (s != SENTOPIC_OK) return s;
  out.reset(raw);
  const auto apply = [&](const char* key, const std::string& value) {
    return value.empty() ? SENTOPIC_OK : sentopic_config_set(out.get(), key, value.c_str());
  };
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::fprintf(stderr, "sentopic: --set expects section.key=value, got '%s'\n", kv.c_str());
      return SENTOPIC_ERR_USAGE;
    }
    if ((s = sentopic_config_set(out.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str())) != SENTOPIC_OK) {
      return s;
    }
  }
  // Dedicated flags win over --set.
  if ((s = apply("output.dir", o.output)) != SENTOPIC_OK) return s;
  if ((s = apply("lda.seed", o.seed)) != SENTOPIC_OK) return s;
  if ((s = apply("run.threads", o.threads)) != SENTOPIC_OK) return s;
  if ((s = apply("resources.lexicon", o.lexicon)) != SENTOPIC_OK) return s;
  return SENTOPIC_OK;
}

int run_stages(const Options& o, const std::vector<const char*>& stages) {
  ConfigPtr config;
  sentopic_status s = build_config(o, config);
  if (s != SENTOPIC_OK) return sentopic_last_error()[0] != '\0' ? report_failure(s) : exit_code(s);
  for (const char* stage : stages) {
    char* summary = nullptr;
    s = sentopic_run(config.get(), stage, &summary);
    if (s != SENTOPIC_OK) return report_failure(s);
    if (!o.quiet) std::cout << summary << "\n";
    sentopic_string_free(summary);
  }
  return kExitOk;
}

int score_lines(const Options& o) {
  std::ifstream in(o.lines);
  if (!in) {
    std::cerr << "sentopic: cannot open " << o.lines << "\n";
    return kExitData;
  }
  sentopic_analyzer* analyzer = nullptr;
  sentopic_status s = sentopic_analyzer_load(o.lexicon.empty() ? nullptr : o.lexicon.c_str(), nullptr, &analyzer);
  if (s != SENTOPIC_OK) return report_failure(s);
  std::printf("pos\tneu\tneg\tcompound\tpolarity\ttext\n");
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    sentopic_score sc{};
    if ((s = sentopic_analyzer_score(analyzer, line.data(), line.size(), &sc)) != SENTOPIC_OK) break;
    const sentopic_polarity p = sentopic_classify(sc.compound);
    std::printf("%.3f\t%.3f\t%.3f\t%.4f\t%s\t%s\n", sc.pos, sc.neu, sc.neg, sc.compound,
                p == SENTOPIC_POSITIVE ? "positive" : p == SENTOPIC_NEGATIVE ? "negative" : "neutral",
                line.c_str());
  }
  sentopic_analyzer_free(analyzer);
  return s == SENTOPIC_OK ? kExitOk : report_failure(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tweet sentiment and topic mining pipeline"};
  app.set_version_flag("--version", std::string(sentopic_version()));
  app.require_subcommand(1);

  Options o;
  struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> stages;
  };
  const std::vector<Command> commands = {
      {"ingest", "Load the CSV corpus into tweets.jsonl", {"ingest"}},
      {"preprocess", "Normalize tweets into documents.jsonl", {"preprocess"}},
      {"sentiment", "Score every tweet into sentiment.csv", {"sentiment"}},
      {"topics", "Fit the topic model into model.json", {"topics"}},
      {"sweep-k", "Coherence sweep over the topic-count range", {"sweep-k"}},
      {"report", "Write the report bundle", {"report"}},
      {"run", "ingest, preprocess, sentiment, topics and report in order",
       {"ingest", "preprocess", "sentiment", "topics", "report"}},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    if (std::string(c.name) == "sentiment") {
      sub->add_option("--lines", o.lines, "Score each line of this file and print TSV")
          ->check(CLI::ExistingFile);
    }
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    if (!o.lines.empty()) return score_lines(o);
    return run_stages(o, cmd->stages);
  }
  return kExitUsage;
}
