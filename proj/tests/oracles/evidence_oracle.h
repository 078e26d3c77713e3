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

// Brute-force reference for counter-evidence selection. Walks every year of
// the timespan instead of comparing interval endpoints.

#ifndef OCCUBIAS_TESTS_ORACLES_EVIDENCE_ORACLE_H_
#define OCCUBIAS_TESTS_ORACLES_EVIDENCE_ORACLE_H_

#include <string>
#include <vector>

#include "occubias/model.h"

namespace occubias::oracle {

inline bool AliveInSomeYear(const EvidenceRecord &record, int year_start,
                            int year_end) {
  for (int year = year_start; year <= year_end; ++year) {
    const bool born = record.birth_year <= year;
    const bool not_dead = !record.death_year || year <= *record.death_year;
    if (born && not_dead) return true;
  }
  return false;
}

inline std::vector<EvidenceRecord> CounterEvidence(
    const std::vector<EvidenceRecord> &all, const std::string &lemma,
    Gender subject_gender, const std::string &country, int year_start,
    int year_end) {
  const Gender wanted =
      subject_gender == Gender::kMale ? Gender::kFemale : Gender::kMale;
  std::vector<EvidenceRecord> out;
  for (const EvidenceRecord &record : all) {
    if (record.occupation_lemma != lemma) continue;
    if (record.gender != wanted) continue;
    if (record.country != country) continue;
    if (!AliveInSomeYear(record, year_start, year_end)) continue;
    out.push_back(record);
  }
  return out;
}

}  // namespace occubias::oracle

#endif  // OCCUBIAS_TESTS_ORACLES_EVIDENCE_ORACLE_H_
