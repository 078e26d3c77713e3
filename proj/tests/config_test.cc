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

#include <cstdlib>
#include <sstream>

#include "gtest/gtest.h"
#include "test_support.h"

namespace occubias {
namespace {

Config Parse(const std::string &text, const std::filesystem::path &base = "/cfg") {
  std::istringstream in(text);
  return ParseConfig(in, base);
}

TEST(ParseConfigTest, ReadsEveryKey) {
  const Config c = Parse(R"(# comment
occupations = "occ.csv"
names = "/abs/names.csv"
kb_types = "kb.csv"
countries = "countries.csv"
fixture = "fx.jsonl"
backend = "remote"   # trailing comment
endpoint = "http://localhost:8890/sparql"
timeout_seconds = 3
retries = 5
max_in_flight = 7
cache_ttl_seconds = 60
cache_capacity = 9
evidence_cap = 4
evidence_threshold = 2
bind_address = "0.0.0.0"
port = 9090
cors_origin = "https://example.org"
workers = 3
)");
  EXPECT_EQ(c.occupations, std::filesystem::path("/cfg/occ.csv"));
  EXPECT_EQ(c.names, std::filesystem::path("/abs/names.csv"));
  EXPECT_EQ(c.kb_types, std::filesystem::path("/cfg/kb.csv"));
  EXPECT_EQ(c.fixture, std::filesystem::path("/cfg/fx.jsonl"));
  EXPECT_EQ(c.backend, BackendMode::kRemote);
  EXPECT_EQ(c.endpoint.url, "http://localhost:8890/sparql");
  EXPECT_EQ(c.endpoint.timeout, std::chrono::seconds(3));
  EXPECT_EQ(c.endpoint.retries, 5);
  EXPECT_EQ(c.provider.max_in_flight, 7u);
  EXPECT_EQ(c.provider.cache_ttl, std::chrono::seconds(60));
  EXPECT_EQ(c.provider.cache_capacity, 9u);
  EXPECT_EQ(c.engine.evidence_cap, 4u);
  EXPECT_EQ(c.engine.evidence_threshold, 2u);
  EXPECT_EQ(c.bind_address, "0.0.0.0");
  EXPECT_EQ(c.port, 9090);
  EXPECT_EQ(c.cors_origin, "https://example.org");
  EXPECT_EQ(c.workers, 3u);
}

TEST(ParseConfigTest, EmptyFileGivesDefaults) {
  const Config c = Parse("");
  const Config d = DefaultConfig();
  EXPECT_EQ(c.occupations, d.occupations);
  EXPECT_EQ(c.backend, BackendMode::kFixture);
  EXPECT_EQ(c.engine.evidence_threshold, 1u);
  EXPECT_EQ(c.port, 8080);
}

TEST(ParseConfigTest, Errors) {
  for (const char *bad : {"unknown = 1", "[server]", "port = \"80\"",
                          "port = 70000", "backend = \"cloud\"",
                          "names = 3", "evidence_threshold = 0",
                          "retries = -1", "endpoint = \"unterminated",
                          "just some words", " = 4", "port = 80x"}) {
    EXPECT_THROW(Parse(bad), ConfigError) << bad;
  }
}

TEST(ParseConfigTest, ErrorCarriesLineNumber) {
  try {
    Parse("port = 1\n\nbogus = 2\n");
    FAIL();
  } catch (const ConfigError &e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

class EnvGuard {
 public:
  EnvGuard(const char *name, const std::string &value) : name_(name) {
    if (const char *old = std::getenv(name)) old_ = old;
    setenv(name, value.c_str(), 1);
  }
  ~EnvGuard() {
    if (old_) {
      setenv(name_, old_->c_str(), 1);
    } else {
      unsetenv(name_);
    }
  }

 private:
  const char *name_;
  std::optional<std::string> old_;
};

TEST(ResolveConfigTest, FlagBeatsEnvBeatsDefault) {
  test::TempDir dir;
  const auto flag = dir.Write("flag.toml", "port = 1111\n");
  const auto env = dir.Write("env.toml", "port = 2222\n");
  {
    EnvGuard guard(kConfigEnvVar, env.string());
    EXPECT_EQ(ResolveConfig(flag).port, 1111);
    EXPECT_EQ(ResolveConfig("").port, 2222);
  }
  {
    EnvGuard guard(kConfigEnvVar, "");
    EXPECT_EQ(ResolveConfig("").port, 8080);
  }
}

TEST(ResolveConfigTest, MissingFileIsAnError) {
  EXPECT_THROW(LoadConfigFile("/nonexistent/occubias.toml"), ConfigError);
}

TEST(RuntimeTest, LoadsBundledDefaults) {
  Config config = DefaultConfig();
  config.occupations = test::DataPath("occupations.csv");
  config.names = test::DataPath("names.csv");
  config.kb_types = test::DataPath("kb_types.csv");
  config.countries = test::DataPath("countries.csv");
  config.fixture = test::DataPath("evidence_fixture.jsonl");
  const Runtime runtime(config);
  EXPECT_EQ(runtime.provider().backend_mode(), "fixture");
  EXPECT_EQ(runtime.lexicons().occupations.size(),
            test::BundledLexicons().occupations.size());
  const auto report = runtime.Analyze("John is a doctor.", 1980, 2000, "USA");
  EXPECT_EQ(report.context.country(), "United States");
  EXPECT_EQ(report.flagged(), 1u);

  config.backend = BackendMode::kRemote;
  config.endpoint.url = "http://127.0.0.1:1/sparql";
  EXPECT_EQ(Runtime(config).provider().backend_mode(), "remote");
}

TEST(RuntimeTest, ConfigRelativePathsLoad) {
  test::TempDir dir;
  std::filesystem::copy_file(test::DataPath("occupations.csv"),
                             dir.path() / "occ.csv");
  std::filesystem::copy_file(test::DataPath("names.csv"), dir.path() / "names.csv");
  dir.Write("fx.jsonl", "");
  const auto cfg = dir.Write("occubias.toml",
                             "occupations = \"occ.csv\"\n"
                             "names = \"names.csv\"\n"
                             "fixture = \"fx.jsonl\"\n"
                             "evidence_threshold = 3\n");
  const Runtime runtime(LoadConfigFile(cfg));
  EXPECT_EQ(runtime.options().evidence_threshold, 3u);
  EXPECT_EQ(runtime.Analyze("John is a doctor.", 1980, 2000, "US").flagged(), 0u);
}

TEST(RuntimeTest, MissingFilesFail) {
  Config config = DefaultConfig();
  config.occupations = "/nonexistent/occ.csv";
  EXPECT_THROW(Runtime{config}, LexiconError);
  config = DefaultConfig();
  config.fixture = "/nonexistent/fixture.jsonl";
  EXPECT_THROW(Runtime{config}, EvidenceError);
  config = DefaultConfig();
  config.backend = BackendMode::kRemote;
  config.endpoint.url = "gopher://x";
  EXPECT_THROW(Runtime{config}, ConfigError);
}

TEST(RuntimeTest, InvalidContextThrows) {
  auto runtime = test::MakeFixtureRuntime({});
  EXPECT_THROW(runtime->Analyze("x", 2000, 1990, "US"), std::invalid_argument);
  EXPECT_THROW(runtime->Analyze("x", 1990, 2000, "  "), std::invalid_argument);
}

}  // namespace
}  // namespace occubias
