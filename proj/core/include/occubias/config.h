// Copyright 2026 The Occubias Authors.
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

// Configuration and the assembled engine runtime.
//
// The config file is flat TOML-style `key = value`: strings are
// double-quoted, numbers are bare integers, '#' starts a comment. Relative
// paths are resolved against the directory holding the file.
//
//   occupations = "occupations.csv"
//   names = "names.csv"
//   kb_types = "kb_types.csv"
//   countries = "countries.csv"
//   backend = "fixture"            # or "remote"
//   fixture = "evidence_fixture.jsonl"
//   endpoint = "https://dbpedia.org/sparql"
//   timeout_seconds = 10
//   retries = 2
//   max_in_flight = 4
//   cache_ttl_seconds = 3600
//   cache_capacity = 1024
//   evidence_cap = 10
//   evidence_threshold = 1
//   bind_address = "127.0.0.1"
//   port = 8080
//   cors_origin = "*"
//   workers = 0                    # 0 = one per CPU

#ifndef OCCUBIAS_CONFIG_H_
#define OCCUBIAS_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "occubias/bias_engine.h"
#include "occubias/evidence.h"
#include "occubias/lexicon.h"
#include "occubias/sparql.h"

namespace occubias {

inline constexpr char kConfigEnvVar[] = "OCCUBIAS_CONFIG";
inline constexpr std::size_t kMaxTextBytes = 64 * 1024;

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &message, std::size_t line = 0)
      : std::runtime_error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class BackendMode { kFixture, kRemote };

std::string_view BackendModeName(BackendMode mode);

struct Config {
  std::filesystem::path occupations;
  std::filesystem::path names;
  std::filesystem::path kb_types;
  std::filesystem::path countries;
  std::filesystem::path fixture;

  BackendMode backend = BackendMode::kFixture;
  EndpointOptions endpoint;
  ProviderOptions provider;
  EngineOptions engine;

  std::string bind_address = "127.0.0.1";
  int port = 8080;
  std::string cors_origin = "*";
  // Corpus worker threads; 0 means hardware concurrency.
  std::size_t workers = 0;
};

// Directory holding the bundled lexicons and fixture: $OCCUBIAS_DATA_DIR,
// else the source tree data directory, else <prefix>/share/occubias next to
// an installed binary.
std::filesystem::path DefaultDataDir();

// Config pointing at the bundled data in fixture mode.
Config DefaultConfig();

// Parses `source` over DefaultConfig(); relative paths resolve against
// `base_dir`. Throws ConfigError.
Config ParseConfig(std::istream &source, const std::filesystem::path &base_dir);
Config LoadConfigFile(const std::filesystem::path &path);

// --config wins, then $OCCUBIAS_CONFIG, then DefaultConfig().
Config ResolveConfig(const std::filesystem::path &flag_path);

// Loaded lexicons plus an evidence provider; shared (read-only apart from
// the provider's internally synchronized cache) by CLI runs and service
// requests.
class Runtime {
 public:
  // Loads every file named by `config`. Throws LexiconError, EvidenceError
  // or ConfigError.
  explicit Runtime(const Config &config);

  // Test hook: explicit parts instead of files.
  Runtime(Lexicons lexicons, CountryAliases countries,
          std::unique_ptr<EvidenceProvider> provider, EngineOptions options);

  // Canonicalizes the country and runs Analyze(). Throws
  // std::invalid_argument for an invalid context.
  AnalysisReport Analyze(std::string_view text, int year_start, int year_end,
                         std::string_view country) const;

  QueryContext MakeContext(int year_start, int year_end,
                           std::string_view country) const;

  const Lexicons &lexicons() const { return lexicons_; }
  const CountryAliases &countries() const { return countries_; }
  EvidenceProvider &provider() const { return *provider_; }
  const EngineOptions &options() const { return options_; }

 private:
  Lexicons lexicons_;
  CountryAliases countries_;
  std::unique_ptr<EvidenceProvider> provider_;
  EngineOptions options_;
};

}  // namespace occubias

#endif  // OCCUBIAS_CONFIG_H_
