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

#ifndef OCCUBIAS_BIAS_ENGINE_H_
#define OCCUBIAS_BIAS_ENGINE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "occubias/evidence.h"
#include "occubias/lexicon.h"
#include "occubias/model.h"

namespace occubias {

struct EngineOptions {
  // Minimum number of counter-evidence records needed to flag.
  std::size_t evidence_threshold = 1;
  // Records kept per verdict (oldest birth year first).
  std::size_t evidence_cap = 10;
};

// The evidence backend failed while checking an attribution. Never a
// "no bias" answer.
class EvidenceUnavailable : public std::runtime_error {
 public:
  explicit EvidenceUnavailable(const EvidenceError &cause)
      : std::runtime_error(cause.what()), cause_(cause.kind()) {}

  EvidenceError::Kind cause() const { return cause_; }

 private:
  EvidenceError::Kind cause_;
};

// Decides one attribution:
//   gender-specific occupation            -> kNotApplicableGenderSpecific
//   neutral, >= threshold counter-records -> kPossiblyBiased (+ evidence)
//   neutral, fewer                        -> kFreeOfBias
// Throws EvidenceUnavailable when the provider fails.
BiasVerdict CheckBias(const Attribution &attribution, const QueryContext &ctx,
                      EvidenceProvider &provider,
                      const EngineOptions &options = {});

struct AnalysisReport {
  std::string input_text;
  QueryContext context;
  std::vector<BiasVerdict> verdicts;
  std::size_t attributions_total = 0;
  std::string engine_version;

  std::size_t flagged() const;
  // True if any verdict is kEvidenceUnavailable.
  bool partial() const;
};

// Full pipeline over `text`. Backend failures are recorded per verdict as
// kEvidenceUnavailable; the rest of the report is still filled in.
AnalysisReport Analyze(std::string_view text, const QueryContext &ctx,
                       const Lexicons &lexicons, EvidenceProvider &provider,
                       const EngineOptions &options = {});

}  // namespace occubias

#endif  // OCCUBIAS_BIAS_ENGINE_H_
