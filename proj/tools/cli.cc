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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "occubias/report.h"
#include "occubias/service.h"
#include "occubias/version.h"

namespace occubias::cli {
namespace {

namespace fs = std::filesystem;

std::string JsonString(const std::string &s) {
  return nlohmann::json(s).dump(-1, ' ', false,
                                nlohmann::json::error_handler_t::replace);
}

std::optional<std::string> ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  // A directory opens fine on Linux but yields nothing readable.
  std::error_code ec;
  if (fs::is_directory(path, ec)) return std::nullopt;
  return buffer.str();
}

std::string Lifetime(const EvidenceRecord &r) {
  return std::to_string(r.birth_year) + "-" +
         (r.death_year ? std::to_string(*r.death_year) : std::string());
}

// Shared by analyze/corpus: config file, then a --fixture override.
Config BuildConfig(const std::string &config_path,
                   const std::string &fixture_path) {
  Config config = ResolveConfig(config_path);
  if (!fixture_path.empty()) {
    config.backend = BackendMode::kFixture;
    config.fixture = fixture_path;
  }
  return config;
}

std::atomic<Server *> g_server{nullptr};

void HandleSignal(int) {
  if (Server *server = g_server.load()) server->Stop();
}

}  // namespace

int ExitCodeFor(const AnalysisReport &report) {
  if (report.partial()) return kExitBackend;
  return report.flagged() > 0 ? kExitFlagged : kExitClean;
}

std::string RenderPretty(const AnalysisReport &report) {
  std::ostringstream out;
  out << "Context: " << report.context.country() << ", "
      << report.context.year_start() << "-" << report.context.year_end()
      << "\n";

  std::set<Span> marks;
  for (const auto &v : report.verdicts) {
    marks.insert(v.highlight_spans.begin(), v.highlight_spans.end());
  }
  std::string marked;
  std::size_t pos = 0;
  for (Span span : marks) {
    if (span.begin < pos) continue;
    marked += report.input_text.substr(pos, span.begin - pos);
    marked += "[" + report.input_text.substr(span.begin, span.size()) + "]";
    pos = span.end;
  }
  marked += report.input_text.substr(std::min(pos, report.input_text.size()));
  out << "Text: " << marked << "\n";

  if (report.verdicts.empty()) {
    out << "No person/occupation attributions found.\n";
  }
  std::size_t n = 0;
  for (const auto &v : report.verdicts) {
    const Attribution &a = v.attribution;
    out << ++n << ". " << a.person.name << " (" << GenderName(a.gender)
        << ") -> " << a.occupation.lemma << " ["
        << a.occupation.occupation_class.name() << "]: ";
    switch (v.status) {
      case VerdictStatus::kNotApplicableGenderSpecific:
        out << "gender-specific occupation, not checked\n";
        break;
      case VerdictStatus::kFreeOfBias:
        out << "free of bias (no counter-evidence)\n";
        break;
      case VerdictStatus::kEvidenceUnavailable:
        out << "EVIDENCE UNAVAILABLE: " << v.error.value_or("") << "\n";
        break;
      case VerdictStatus::kPossiblyBiased:
        out << "POSSIBLY BIASED\n   Counter-evidence (showing "
            << v.evidence.size() << " of " << v.evidence_total << "):\n";
        for (const auto &r : v.evidence) {
          out << "   - " << r.person_name << ", " << r.occupation_lemma
              << ", born " << r.birth_city << ", " << r.country << " ("
              << Lifetime(r) << ")\n";
        }
        break;
    }
  }
  return out.str();
}

std::string CorpusSummary::ToJson() const {
  nlohmann::ordered_json summary;
  summary["files"] = files;
  summary["reports"] = reports;
  summary["errors"] = errors;
  summary["flagged_files"] = flagged_files;
  summary["flagged_verdicts"] = flagged_verdicts;
  summary["partial_files"] = partial_files;
  nlohmann::ordered_json line;
  line["summary"] = std::move(summary);
  return line.dump();
}

int CorpusSummary::ExitCode() const {
  if (partial_files > 0) return kExitBackend;
  return flagged_files > 0 ? kExitFlagged : kExitClean;
}

std::vector<fs::path> ListCorpus(const fs::path &dir) {
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".txt") continue;
    std::error_code ec;
    if (entry.is_directory(ec)) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path &a, const fs::path &b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

CorpusSummary RunCorpus(const Runtime &runtime, const CorpusOptions &options,
                        std::ostream &out) {
  std::error_code ec;
  if (!fs::is_directory(options.dir, ec)) {
    throw std::invalid_argument("not a directory: " + options.dir.string());
  }
  // Validates the context up front so a bad one fails before any work.
  runtime.MakeContext(options.year_start, options.year_end, options.country);

  const std::vector<fs::path> files = ListCorpus(options.dir);
  struct Outcome {
    std::string line;
    std::optional<AnalysisReport> report;
  };
  std::vector<Outcome> outcomes(files.size());

  auto process = [&](std::size_t i) {
    const std::string name = files[i].filename().string();
    const auto text = ReadFile(files[i]);
    if (!text) {
      outcomes[i].line = "{\"file\":" + JsonString(name) +
                         ",\"error\":\"cannot read file\"}";
      return;
    }
    try {
      AnalysisReport report = runtime.Analyze(*text, options.year_start,
                                              options.year_end, options.country);
      outcomes[i].line = "{\"file\":" + JsonString(name) +
                         ",\"report\":" + ReportToJson(report) + "}";
      outcomes[i].report = std::move(report);
    } catch (const std::exception &e) {
      outcomes[i].line = "{\"file\":" + JsonString(name) +
                         ",\"error\":" + JsonString(e.what()) + "}";
    }
  };

  std::size_t workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, files.size()));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) process(i);
      });
    }
  }

  CorpusSummary summary;
  summary.files = files.size();
  for (const auto &outcome : outcomes) {
    out << outcome.line << '\n';
    if (!outcome.report) {
      ++summary.errors;
      continue;
    }
    ++summary.reports;
    const std::size_t flagged = outcome.report->flagged();
    summary.flagged_verdicts += flagged;
    if (flagged > 0) ++summary.flagged_files;
    if (outcome.report->partial()) ++summary.partial_files;
  }
  out << summary.ToJson() << '\n';
  return summary;
}

int Main(int argc, char **argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Occupation gender-stereotype checker with counter-evidence"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  std::string config_path;
  std::string fixture_path;
  int year_start = 0;
  int year_end = 0;
  std::string country;

  auto add_context = [&](CLI::App *cmd) {
    cmd->add_option("--from", year_start, "First year of the timespan")->required();
    cmd->add_option("--to", year_end, "Last year of the timespan")->required();
    cmd->add_option("--country", country, "Country, e.g. \"United States\"")
        ->required();
    cmd->add_option("--fixture", fixture_path,
                    "Offline evidence fixture (JSONL); forces fixture mode");
    cmd->add_option("--config", config_path, "Config file")
        ->envname(kConfigEnvVar);
  };

  auto *analyze = app.add_subcommand("analyze", "Check one text");
  std::string text;
  std::string file;
  auto *input = analyze->add_option_group("input", "Exactly one of --text/--file");
  input->add_option("--text", text, "Text to analyze");
  input->add_option("--file", file, "UTF-8 text file to analyze");
  input->require_option(1);
  add_context(analyze);
  bool json_flag = false;
  bool pretty_flag = false;
  auto *json_opt = analyze->add_flag("--json", json_flag, "Canonical JSON (default)");
  analyze->add_flag("--pretty", pretty_flag, "Human-readable report")
      ->excludes(json_opt);

  auto *corpus = app.add_subcommand("corpus", "Check every .txt file in a directory");
  CorpusOptions corpus_options;
  std::string out_path;
  corpus->add_option("--dir", corpus_options.dir, "Directory of .txt files")
      ->required();
  corpus->add_option("--out", out_path, "JSONL output file")->required();
  corpus->add_option("--workers", corpus_options.workers,
                     "Worker threads (default: config, then CPU count)");
  add_context(corpus);

  auto *serve = app.add_subcommand("serve", "Run the HTTP service");
  std::string bind_address;
  int port = -1;
  serve->add_option("--config", config_path, "Config file")->envname(kConfigEnvVar);
  serve->add_option("--bind", bind_address, "Bind address (overrides config)");
  serve->add_option("--port", port, "Port (overrides config)");

  auto *stats = app.add_subcommand("stats", "Print lexicon statistics");
  stats->add_option("--config", config_path, "Config file")->envname(kConfigEnvVar);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::CallForVersion &) {
    out << kEngineVersion << "\n";
    return kExitClean;
  } catch (const CLI::ParseError &e) {
    err << "occubias: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  std::unique_ptr<Runtime> runtime;
  Config config;
  try {
    config = BuildConfig(config_path, fixture_path);
    runtime = std::make_unique<Runtime>(config);
  } catch (const EvidenceError &e) {
    err << "occubias: evidence backend: " << e.what() << "\n";
    return kExitBackend;
  } catch (const std::exception &e) {
    err << "occubias: " << e.what() << "\n";
    return kExitUsage;
  }

  if (analyze->parsed()) {
    if (!file.empty()) {
      auto contents = ReadFile(file);
      if (!contents) {
        err << "occubias: cannot read " << file << "\n";
        return kExitUsage;
      }
      text = std::move(*contents);
    }
    std::optional<AnalysisReport> analyzed;
    try {
      analyzed = runtime->Analyze(text, year_start, year_end, country);
    } catch (const std::invalid_argument &e) {
      err << "occubias: " << e.what() << "\n";
      return kExitUsage;
    }
    const AnalysisReport &report = *analyzed;
    out << (pretty_flag ? RenderPretty(report) : ReportToJson(report) + "\n");
    return ExitCodeFor(report);
  }

  if (corpus->parsed()) {
    corpus_options.year_start = year_start;
    corpus_options.year_end = year_end;
    corpus_options.country = country;
    if (corpus_options.workers == 0) corpus_options.workers = config.workers;
    std::ofstream sink(out_path, std::ios::binary | std::ios::trunc);
    if (!sink) {
      err << "occubias: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    CorpusSummary summary;
    try {
      summary = RunCorpus(*runtime, corpus_options, sink);
    } catch (const std::invalid_argument &e) {
      err << "occubias: " << e.what() << "\n";
      return kExitUsage;
    }
    err << summary.ToJson() << "\n";
    return summary.ExitCode();
  }

  if (stats->parsed()) {
    const LexiconStats s = runtime->lexicons().Stats();
    nlohmann::ordered_json j;
    j["occupations"] = s.occupations;
    j["neutral_occupations"] = s.neutral_occupations;
    j["male_occupations"] = s.male_occupations;
    j["female_occupations"] = s.female_occupations;
    j["male_names"] = s.male_names;
    j["female_names"] = s.female_names;
    out << j.dump(2) << "\n";
    return kExitClean;
  }

  // serve
  ServerOptions server_options{config.bind_address, config.port,
                               config.cors_origin};
  if (!bind_address.empty()) server_options.bind_address = bind_address;
  if (port >= 0) server_options.port = port;
  Server server(*runtime, server_options);
  const int bound = server.Bind();
  err << "occubias: serving on " << server_options.bind_address << ":" << bound
      << " (" << runtime->provider().backend_mode() << " backend)\n";
  g_server = &server;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  server.Serve();
  g_server = nullptr;
  return kExitClean;
}

}  // namespace occubias::cli
