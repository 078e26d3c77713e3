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

#include <string>

#include "occubias/analysis.h"

namespace occubias {
namespace {

bool IsCapitalized(const Token &token) {
  return token.is_word && !token.surface.empty() && token.surface[0] >= 'A' &&
         token.surface[0] <= 'Z';
}

bool IsNameToken(const Token &token, const NameLexicon &names) {
  return IsCapitalized(token) && !token.is_pronoun &&
         names.Contains(token.surface);
}

}  // namespace

std::vector<PersonMention> TagPersons(const Document &doc,
                                      const NameLexicon &names) {
  std::vector<PersonMention> persons;
  const auto &tokens = doc.tokens();
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!IsNameToken(tokens[i], names)) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < tokens.size() &&
           tokens[end].sentence_index == tokens[i].sentence_index &&
           IsNameToken(tokens[end], names)) {
      ++end;
    }
    PersonMention mention;
    mention.span = {tokens[i].span.begin, tokens[end - 1].span.end};
    mention.name = std::string(doc.text(mention.span));
    mention.gender_resolution = LookupGender(names, tokens[i].surface);
    mention.sentence_index = tokens[i].sentence_index;
    persons.push_back(std::move(mention));
    i = end;
  }
  return persons;
}

std::vector<OccupationMention> TagOccupations(const Document &doc,
                                              const OccupationLexicon &occ) {
  std::vector<OccupationMention> mentions;
  const auto &tokens = doc.tokens();
  const std::size_t max_words = occ.max_phrase_words();
  for (const Sentence &sentence : doc.sentences()) {
    std::size_t i = sentence.first_token;
    while (i < sentence.end_token) {
      if (!tokens[i].is_word) {
        ++i;
        continue;
      }
      // Longest run of consecutive word tokens starting at i.
      std::size_t limit = i;
      while (limit < sentence.end_token && tokens[limit].is_word &&
             limit - i < max_words) {
        ++limit;
      }
      bool matched = false;
      for (std::size_t end = limit; end > i; --end) {
        std::string phrase = CaseFold(tokens[i].surface);
        for (std::size_t k = i + 1; k < end; ++k) {
          phrase += ' ';
          phrase += CaseFold(tokens[k].surface);
        }
        auto match = occ.LookupNormalized(phrase);
        if (!match) continue;
        OccupationMention mention;
        mention.lemma = match->lemma;
        mention.occupation_class = match->occupation_class;
        mention.span = {tokens[i].span.begin, tokens[end - 1].span.end};
        mention.surface = std::string(doc.text(mention.span));
        mention.sentence_index = tokens[i].sentence_index;
        mentions.push_back(std::move(mention));
        i = end;
        matched = true;
        break;
      }
      if (!matched) ++i;
    }
  }
  return mentions;
}

}  // namespace occubias
