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

#include "occubias/config.h"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <variant>

#ifndef OCCUBIAS_DEFAULT_DATA_DIR
#define OCCUBIAS_DEFAULT_DATA_DIR "data"
#endif

namespace occubias {
namespace {

using Value = std::variant<std::string, long long, bool>;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void Fail(std::size_t line_no, const std::string &what) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + what,
                    line_no);
}

// Parses the value part of a line, dropping a trailing comment.
Value ParseValue(std::string_view text, std::size_t line_no) {
  text = Trim(text);
  if (text.empty()) Fail(line_no, "missing value");
  if (text.front() == '"') {
    std::string out;
    std::size_t i = 1;
    for (; i < text.size() && text[i] != '"'; ++i) {
      if (text[i] == '\\' && i + 1 < text.size()) {
        const char next = text[++i];
        out.push_back(next == 'n' ? '\n' : next == 't' ? '\t' : next);
      } else {
        out.push_back(text[i]);
      }
    }
    if (i >= text.size()) Fail(line_no, "unterminated string");
    const std::string_view rest = Trim(text.substr(i + 1));
    if (!rest.empty() && rest.front() != '#') {
      Fail(line_no, "unexpected text after string");
    }
    return out;
  }
  const auto hash = text.find('#');
  if (hash != std::string_view::npos) text = Trim(text.substr(0, hash));
  if (text == "true") return true;
  if (text == "false") return false;
  long long number = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), number);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    Fail(line_no, "value must be a quoted string, integer or boolean");
  }
  return number;
}

std::string AsString(const Value &v, std::string_view key, std::size_t line_no) {
  if (const auto *s = std::get_if<std::string>(&v)) return *s;
  Fail(line_no, std::string(key) + " must be a string");
}

long long AsInt(const Value &v, std::string_view key, std::size_t line_no,
                long long min_value) {
  const auto *n = std::get_if<long long>(&v);
  if (n == nullptr) Fail(line_no, std::string(key) + " must be an integer");
  if (*n < min_value) {
    Fail(line_no, std::string(key) + " must be >= " + std::to_string(min_value));
  }
  return *n;
}

std::filesystem::path ResolvePath(const std::string &value,
                                  const std::filesystem::path &base_dir) {
  std::filesystem::path path(value);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  return path;
}

void Apply(Config &config, std::string_view key, const Value &value,
           std::size_t line_no, const std::filesystem::path &base_dir) {
  auto path = [&] { return ResolvePath(AsString(value, key, line_no), base_dir); };
  if (key == "occupations") {
    config.occupations = path();
  } else if (key == "names") {
    config.names = path();
  } else if (key == "kb_types") {
    config.kb_types = path();
  } else if (key == "countries") {
    config.countries = path();
  } else if (key == "fixture") {
    config.fixture = path();
  } else if (key == "backend") {
    const std::string mode = AsString(value, key, line_no);
    if (mode == "fixture") {
      config.backend = BackendMode::kFixture;
    } else if (mode == "remote") {
      config.backend = BackendMode::kRemote;
    } else {
      Fail(line_no, "backend must be \"fixture\" or \"remote\"");
    }
  } else if (key == "endpoint") {
    config.endpoint.url = AsString(value, key, line_no);
  } else if (key == "timeout_seconds") {
    config.endpoint.timeout = std::chrono::seconds(AsInt(value, key, line_no, 1));
  } else if (key == "retries") {
    config.endpoint.retries = static_cast<int>(AsInt(value, key, line_no, 0));
  } else if (key == "max_in_flight") {
    config.provider.max_in_flight = AsInt(value, key, line_no, 1);
  } else if (key == "cache_ttl_seconds") {
    config.provider.cache_ttl = std::chrono::seconds(AsInt(value, key, line_no, 0));
  } else if (key == "cache_capacity") {
    config.provider.cache_capacity = AsInt(value, key, line_no, 0);
  } else if (key == "evidence_cap") {
    config.engine.evidence_cap = AsInt(value, key, line_no, 1);
  } else if (key == "evidence_threshold") {
    config.engine.evidence_threshold = AsInt(value, key, line_no, 1);
  } else if (key == "bind_address") {
    config.bind_address = AsString(value, key, line_no);
  } else if (key == "port") {
    const long long port = AsInt(value, key, line_no, 0);
    if (port > 65535) Fail(line_no, "port out of range");
    config.port = static_cast<int>(port);
  } else if (key == "cors_origin") {
    config.cors_origin = AsString(value, key, line_no);
  } else if (key == "workers") {
    config.workers = AsInt(value, key, line_no, 0);
  } else {
    Fail(line_no, "unknown key '" + std::string(key) + "'");
  }
}

}  // namespace

std::string_view BackendModeName(BackendMode mode) {
  return mode == BackendMode::kFixture ? "fixture" : "remote";
}

std::filesystem::path DefaultDataDir() {
  if (const char *dir = std::getenv("OCCUBIAS_DATA_DIR"); dir && *dir) {
    return dir;
  }
  std::error_code ec;
  const std::filesystem::path built_in = OCCUBIAS_DEFAULT_DATA_DIR;
  if (std::filesystem::is_directory(built_in, ec)) return built_in;
  // Installed layout: <prefix>/bin/occubias and <prefix>/share/occubias.
  const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto installed = exe.parent_path().parent_path() / "share" / "occubias";
    if (std::filesystem::is_directory(installed, ec)) return installed;
  }
  return built_in;
}

Config DefaultConfig() {
  const auto dir = DefaultDataDir();
  Config config;
  config.occupations = dir / "occupations.csv";
  config.names = dir / "names.csv";
  config.kb_types = dir / "kb_types.csv";
  config.countries = dir / "countries.csv";
  config.fixture = dir / "evidence_fixture.jsonl";
  config.endpoint.url = "https://dbpedia.org/sparql";
  return config;
}

Config ParseConfig(std::istream &source, const std::filesystem::path &base_dir) {
  Config config = DefaultConfig();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (trimmed.front() == '[') Fail(line_no, "tables are not supported");
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos) Fail(line_no, "expected key = value");
    const std::string_view key = Trim(trimmed.substr(0, eq));
    if (key.empty()) Fail(line_no, "empty key");
    Apply(config, key, ParseValue(trimmed.substr(eq + 1), line_no), line_no,
          base_dir);
  }
  return config;
}

Config LoadConfigFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return ParseConfig(in, path.parent_path());
}

Config ResolveConfig(const std::filesystem::path &flag_path) {
  if (!flag_path.empty()) return LoadConfigFile(flag_path);
  if (const char *env = std::getenv(kConfigEnvVar); env && *env) {
    return LoadConfigFile(env);
  }
  return DefaultConfig();
}

Runtime::Runtime(const Config &config)
    : lexicons_{LoadOccupationsFile(config.occupations),
                LoadNamesFile(config.names)},
      options_(config.engine) {
  if (!config.countries.empty()) {
    countries_ = LoadCountryAliasesFile(config.countries);
  }
  std::unique_ptr<EvidenceSource> source;
  if (config.backend == BackendMode::kFixture) {
    if (config.fixture.empty()) throw ConfigError("fixture mode needs a fixture");
    source = FixtureSource::FromFile(config.fixture, &countries_);
  } else {
    if (config.endpoint.url.empty()) throw ConfigError("remote mode needs an endpoint");
    if (config.kb_types.empty()) throw ConfigError("remote mode needs kb_types");
    try {
      source = std::make_unique<SparqlEndpointSource>(
          config.endpoint, LoadKbTypeMapFile(config.kb_types));
    } catch (const std::invalid_argument &e) {
      throw ConfigError(e.what());
    }
  }
  provider_ = std::make_unique<EvidenceProvider>(std::move(source),
                                                 config.provider);
}

Runtime::Runtime(Lexicons lexicons, CountryAliases countries,
                 std::unique_ptr<EvidenceProvider> provider,
                 EngineOptions options)
    : lexicons_(std::move(lexicons)),
      countries_(std::move(countries)),
      provider_(std::move(provider)),
      options_(options) {}

QueryContext Runtime::MakeContext(int year_start, int year_end,
                                  std::string_view country) const {
  return QueryContext(year_start, year_end, countries_.Canonicalize(country));
}

AnalysisReport Runtime::Analyze(std::string_view text, int year_start,
                                int year_end, std::string_view country) const {
  return occubias::Analyze(text, MakeContext(year_start, year_end, country),
                           lexicons_, *provider_, options_);
}

}  // namespace occubias
