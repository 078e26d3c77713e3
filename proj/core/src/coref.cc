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

#include <algorithm>

#include "occubias/analysis.h"

namespace occubias {

const PronounResolution *ResolvedDocument::Find(std::size_t token_index) const {
  auto it = std::lower_bound(
      resolutions.begin(), resolutions.end(), token_index,
      [](const PronounResolution &r, std::size_t t) { return r.token_index < t; });
  if (it == resolutions.end() || it->token_index != token_index) return nullptr;
  return &*it;
}

ResolvedDocument ChainPronouns(const Document &doc,
                               const std::vector<PersonMention> &persons) {
  ResolvedDocument resolved{doc, {}};
  // Most recent person of each gender seen so far, as an index into persons.
  std::optional<std::size_t> last_male;
  std::optional<std::size_t> last_female;
  std::size_t next_person = 0;
  const auto &tokens = doc.tokens();
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const Token &token = tokens[t];
    while (next_person < persons.size() &&
           persons[next_person].span.end <= token.span.begin) {
      const auto gender = persons[next_person].gender_resolution.gender();
      if (gender == Gender::kMale) last_male = next_person;
      if (gender == Gender::kFemale) last_female = next_person;
      ++next_person;
    }
    if (!token.is_pronoun) continue;
    const auto &antecedent =
        *token.pronoun_gender == Gender::kMale ? last_male : last_female;
    if (!antecedent) continue;
    resolved.resolutions.push_back({t, *antecedent, persons[*antecedent]});
  }
  return resolved;
}

}  // namespace occubias
