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

// Canonical JSON serialization of analysis reports. Field order is fixed and
// the output contains no timestamps, so equal reports serialize to equal
// bytes.
//
// {
//   "engine_version": "occubias/1.0.0",
//   "input_text": "...",
//   "context": {"year_start": 1980, "year_end": 2000, "country": "..."},
//   "attributions_total": 1,
//   "flagged": 1,
//   "partial": false,
//   "verdicts": [{
//     "person": {"name", "gender_resolution", "span": [b, e], "sentence_index"},
//     "gender": "male",
//     "occupation": {"lemma", "surface", "class", "span": [b, e],
//                    "sentence_index"},
//     "evidence_sentence_index": 0,
//     "status": "possibly_biased",
//     "evidence_total": 3,
//     "evidence": [{"name", "gender", "occupation", "birth_city", "country",
//                   "birth_year", "death_year"}],
//     "highlight_spans": [[b, e], [b, e]],
//     "error": null
//   }]
// }

#ifndef OCCUBIAS_REPORT_H_
#define OCCUBIAS_REPORT_H_

#include <string>

#include "occubias/bias_engine.h"
#include "occubias/lexicon.h"

namespace occubias {

// Compact canonical form when indent < 0, indented otherwise.
std::string ReportToJson(const AnalysisReport &report, int indent = -1);

// [{"lemma": "...", "class": "neutral"}, ...] sorted by lemma.
std::string OccupationsToJson(const OccupationLexicon &lexicon);

}  // namespace occubias

#endif  // OCCUBIAS_REPORT_H_
