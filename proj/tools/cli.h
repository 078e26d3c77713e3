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

// `occubias` command implementations. Exit codes:
//   0  no text was flagged
//   1  usage or configuration error
//   2  the evidence backend failed (takes precedence over 3)
//   3  at least one attribution was flagged as possibly biased

#ifndef OCCUBIAS_TOOLS_CLI_H_
#define OCCUBIAS_TOOLS_CLI_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "occubias/bias_engine.h"
#include "occubias/config.h"

namespace occubias::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBackend = 2;
inline constexpr int kExitFlagged = 3;

// Exit code for a finished analysis.
int ExitCodeFor(const AnalysisReport &report);

// Human-readable rendering: the text with flagged spans in [brackets],
// followed by one block per verdict.
std::string RenderPretty(const AnalysisReport &report);

struct CorpusOptions {
  std::filesystem::path dir;
  int year_start = 0;
  int year_end = 0;
  std::string country;
  // 0 means one worker per CPU.
  std::size_t workers = 0;
};

struct CorpusSummary {
  std::size_t files = 0;
  std::size_t reports = 0;
  std::size_t errors = 0;
  std::size_t flagged_files = 0;
  std::size_t flagged_verdicts = 0;
  std::size_t partial_files = 0;

  std::string ToJson() const;
  int ExitCode() const;
};

// The .txt entries of `dir` in lexicographic order (not recursive).
std::vector<std::filesystem::path> ListCorpus(const std::filesystem::path &dir);

// Writes one JSON line per file, {"file": name, "report": {...}} or
// {"file": name, "error": "..."}, in file order, then a
// {"summary": {...}} line. Throws std::invalid_argument for a bad context
// or a missing directory.
CorpusSummary RunCorpus(const Runtime &runtime, const CorpusOptions &options,
                        std::ostream &out);

// Entry point used by main(); returns the process exit code.
int Main(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace occubias::cli

#endif  // OCCUBIAS_TOOLS_CLI_H_
