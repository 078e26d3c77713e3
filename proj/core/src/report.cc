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

#include "occubias/report.h"

#include "json.hpp"

namespace occubias {
namespace {

using ojson = nlohmann::ordered_json;

ojson SpanJson(Span span) { return ojson::array({span.begin, span.end}); }

ojson RecordJson(const EvidenceRecord &r) {
  ojson out;
  out["name"] = r.person_name;
  out["gender"] = GenderName(r.gender);
  out["occupation"] = r.occupation_lemma;
  out["birth_city"] = r.birth_city;
  out["country"] = r.country;
  out["birth_year"] = r.birth_year;
  out["death_year"] = r.death_year ? ojson(*r.death_year) : ojson(nullptr);
  return out;
}

ojson VerdictJson(const BiasVerdict &v) {
  const Attribution &a = v.attribution;
  ojson person;
  person["name"] = a.person.name;
  person["gender_resolution"] = a.person.gender_resolution.name();
  person["span"] = SpanJson(a.person.span);
  person["sentence_index"] = a.person.sentence_index;

  ojson occupation;
  occupation["lemma"] = a.occupation.lemma;
  occupation["surface"] = a.occupation.surface;
  occupation["class"] = a.occupation.occupation_class.name();
  occupation["span"] = SpanJson(a.occupation.span);
  occupation["sentence_index"] = a.occupation.sentence_index;

  ojson out;
  out["person"] = std::move(person);
  out["gender"] = GenderName(a.gender);
  out["occupation"] = std::move(occupation);
  out["evidence_sentence_index"] = a.evidence_sentence_index;
  out["status"] = VerdictStatusName(v.status);
  out["evidence_total"] = v.evidence_total;
  ojson evidence = ojson::array();
  for (const auto &record : v.evidence) evidence.push_back(RecordJson(record));
  out["evidence"] = std::move(evidence);
  ojson highlights = ojson::array();
  for (Span span : v.highlight_spans) highlights.push_back(SpanJson(span));
  out["highlight_spans"] = std::move(highlights);
  out["error"] = v.error ? ojson(*v.error) : ojson(nullptr);
  return out;
}

}  // namespace

std::string ReportToJson(const AnalysisReport &report, int indent) {
  ojson out;
  out["engine_version"] = report.engine_version;
  out["input_text"] = report.input_text;
  out["context"] = {{"year_start", report.context.year_start()},
                    {"year_end", report.context.year_end()},
                    {"country", report.context.country()}};
  out["attributions_total"] = report.attributions_total;
  out["flagged"] = report.flagged();
  out["partial"] = report.partial();
  ojson verdicts = ojson::array();
  for (const auto &verdict : report.verdicts) {
    verdicts.push_back(VerdictJson(verdict));
  }
  out["verdicts"] = std::move(verdicts);
  // Invalid UTF-8 in user text is replaced rather than rejected.
  return out.dump(indent < 0 ? -1 : indent, ' ', false,
                  ojson::error_handler_t::replace);
}

std::string OccupationsToJson(const OccupationLexicon &lexicon) {
  ojson out = ojson::array();
  for (const auto &[lemma, cls] : lexicon.entries()) {
    out.push_back({{"lemma", lemma}, {"class", cls.name()}});
  }
  return out.dump(-1, ' ', false, ojson::error_handler_t::replace);
}

}  // namespace occubias
