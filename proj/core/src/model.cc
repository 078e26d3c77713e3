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

#include "occubias/model.h"

#include <stdexcept>

namespace occubias {

bool SpanOverlaps(Span a, Span b) {
  if (a.empty() || b.empty()) return false;
  return a.begin < b.end && b.begin < a.end;
}

bool SpanContains(Span outer, Span inner) {
  return outer.begin <= inner.begin && inner.end <= outer.end &&
         inner.begin <= inner.end;
}

std::string_view Slice(std::string_view text, Span span) {
  if (span.begin > span.end || span.end > text.size()) {
    throw std::out_of_range("span outside of text");
  }
  return text.substr(span.begin, span.size());
}

Gender Opposite(Gender g) {
  return g == Gender::kFemale ? Gender::kMale : Gender::kFemale;
}

std::string_view GenderName(Gender g) {
  return g == Gender::kFemale ? "female" : "male";
}

std::optional<Gender> ParseGender(std::string_view text) {
  if (text == "female" || text == "f") return Gender::kFemale;
  if (text == "male" || text == "m") return Gender::kMale;
  return std::nullopt;
}

std::string_view GenderResolution::name() const {
  switch (kind_) {
    case Kind::kResolved:
      return GenderName(*gender_);
    case Kind::kAmbiguous:
      return "ambiguous";
    case Kind::kUnknown:
      break;
  }
  return "unknown";
}

std::string_view OccupationClass::name() const {
  return specific_ ? GenderName(*specific_) : "neutral";
}

std::optional<OccupationClass> OccupationClass::Parse(std::string_view text) {
  if (text == "neutral") return Neutral();
  if (text == "male") return Specific(Gender::kMale);
  if (text == "female") return Specific(Gender::kFemale);
  return std::nullopt;
}

QueryContext::QueryContext(int year_start, int year_end, std::string country)
    : year_start_(year_start),
      year_end_(year_end),
      country_(std::move(country)) {
  if (year_start_ > year_end_) {
    throw std::invalid_argument("year_start must not exceed year_end");
  }
  if (country_.empty()) {
    throw std::invalid_argument("country must not be empty");
  }
}

std::string_view VerdictStatusName(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kNotApplicableGenderSpecific:
      return "not_applicable_gender_specific";
    case VerdictStatus::kFreeOfBias:
      return "free_of_bias";
    case VerdictStatus::kPossiblyBiased:
      return "possibly_biased";
    case VerdictStatus::kEvidenceUnavailable:
      break;
  }
  return "evidence_unavailable";
}

}  // namespace occubias
