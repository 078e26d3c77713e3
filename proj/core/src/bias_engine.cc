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

#include "occubias/bias_engine.h"

#include <algorithm>

#include "occubias/analysis.h"
#include "occubias/version.h"

namespace occubias {

BiasVerdict CheckBias(const Attribution &attribution, const QueryContext &ctx,
                      EvidenceProvider &provider,
                      const EngineOptions &options) {
  BiasVerdict verdict;
  verdict.attribution = attribution;
  if (!attribution.occupation.occupation_class.is_neutral()) {
    verdict.status = VerdictStatus::kNotApplicableGenderSpecific;
    return verdict;
  }

  std::vector<EvidenceRecord> evidence;
  try {
    evidence = CounterEvidence(provider, attribution.occupation.lemma,
                               attribution.gender, ctx);
  } catch (const EvidenceError &e) {
    throw EvidenceUnavailable(e);
  }
  std::stable_sort(evidence.begin(), evidence.end(),
                   [](const EvidenceRecord &a, const EvidenceRecord &b) {
                     return a.birth_year < b.birth_year;
                   });
  verdict.evidence_total = evidence.size();
  const std::size_t threshold = std::max<std::size_t>(1, options.evidence_threshold);
  if (evidence.size() < threshold) {
    verdict.status = VerdictStatus::kFreeOfBias;
    return verdict;
  }
  verdict.status = VerdictStatus::kPossiblyBiased;
  const std::size_t cap = std::max<std::size_t>(1, options.evidence_cap);
  if (evidence.size() > cap) evidence.resize(cap);
  verdict.evidence = std::move(evidence);
  verdict.highlight_spans = {attribution.person.span,
                             attribution.occupation.span};
  return verdict;
}

std::size_t AnalysisReport::flagged() const {
  return std::count_if(verdicts.begin(), verdicts.end(), [](const auto &v) {
    return v.status == VerdictStatus::kPossiblyBiased;
  });
}

bool AnalysisReport::partial() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const auto &v) {
    return v.status == VerdictStatus::kEvidenceUnavailable;
  });
}

AnalysisReport Analyze(std::string_view text, const QueryContext &ctx,
                       const Lexicons &lexicons, EvidenceProvider &provider,
                       const EngineOptions &options) {
  AnalysisReport report{std::string(text), ctx, {}, 0, kEngineVersion};
  const TextAnalysis analysis = AnalyzeText(text, lexicons);
  for (const Attribution &attribution : analysis.attributions) {
    try {
      report.verdicts.push_back(CheckBias(attribution, ctx, provider, options));
    } catch (const EvidenceUnavailable &e) {
      BiasVerdict verdict;
      verdict.attribution = attribution;
      verdict.status = VerdictStatus::kEvidenceUnavailable;
      verdict.error = e.what();
      report.verdicts.push_back(std::move(verdict));
    }
  }
  report.attributions_total = report.verdicts.size();
  return report;
}

}  // namespace occubias
