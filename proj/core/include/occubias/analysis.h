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

// Rule-based linguistic pipeline that turns raw text into person/occupation
// attributions:
//
//   Tokenize -> TagPersons / TagOccupations -> ChainPronouns -> ExtractSvo
//            -> LinkAttributions
//
// Every stage is a pure function of its inputs.

#ifndef OCCUBIAS_ANALYSIS_H_
#define OCCUBIAS_ANALYSIS_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "occubias/lexicon.h"
#include "occubias/model.h"

namespace occubias {

// Splits text into word and punctuation tokens and sentences. Sentences end
// at a run of '.', '!' or '?' followed by whitespace or end of text (common
// title abbreviations such as "Dr." do not end a sentence). Word tokens are
// maximal runs of letters, digits and non-ASCII letters; an apostrophe or
// hyphen between two word characters stays inside the word. Every other
// non-space character is a single punctuation token. Gendered third-person
// pronouns (he, him, his, she, her, hers) are flagged.
Document Tokenize(std::string_view text);

// Maximal runs of capitalized tokens found in the names lexicon. The run's
// gender is looked up from its first token.
std::vector<PersonMention> TagPersons(const Document &doc,
                                      const NameLexicon &names);

// Leftmost-longest n-gram scan (up to the lexicon's longest phrase) over
// consecutive word tokens of a sentence.
std::vector<OccupationMention> TagOccupations(const Document &doc,
                                              const OccupationLexicon &occ);

struct PronounResolution {
  std::size_t token_index = 0;
  // Index into the person list passed to ChainPronouns.
  std::size_t person_index = 0;
  PersonMention antecedent;

  friend bool operator==(const PronounResolution &,
                         const PronounResolution &) = default;
};

// A document together with pronoun -> person links. The base document is
// never modified; resolutions are sorted by token index.
struct ResolvedDocument {
  Document base;
  std::vector<PronounResolution> resolutions;

  // Antecedent for the pronoun at `token_index`, if one was found.
  const PronounResolution *Find(std::size_t token_index) const;
};

// Links each gendered pronoun to the nearest preceding person whose resolved
// gender matches. Ambiguous and unknown persons are never antecedents.
// `persons` must be sorted by offset.
ResolvedDocument ChainPronouns(const Document &doc,
                               const std::vector<PersonMention> &persons);

enum class SvoPattern { kCopula, kApposition, kPronounCopula };

struct SvoTuple {
  Span subject_span;
  Span verb_span;
  Span object_span;
  std::size_t sentence_index = 0;
  SvoPattern pattern = SvoPattern::kCopula;
  // Person filling the subject slot (directly or through a pronoun), as an
  // index into the person list.
  std::size_t person_index = 0;
  // Object occupation, as an index into the occupation list.
  std::size_t occupation_index = 0;

  friend bool operator==(const SvoTuple &, const SvoTuple &) = default;
};

// Pattern-based subject/verb/object extraction. Per sentence, at each
// position, in priority order:
//   (a) PERSON COPULA [a|an|the] OCCUPATION
//   (b) PERSON , [a|an|the] OCCUPATION           (verb span = the comma)
//   (c) PRONOUN COPULA [a|an|the] OCCUPATION     (pronoun resolved to PERSON)
// COPULA is one of is/was/are/were/be/became/becomes. Only subject pronouns
// (he, she) can fill the subject slot.
std::vector<SvoTuple> ExtractSvo(const ResolvedDocument &rdoc,
                                 const std::vector<PersonMention> &persons,
                                 const std::vector<OccupationMention> &occupations);

// One attribution per tuple whose person has a resolved gender, deduplicated
// by (person name, lemma) keeping the earliest.
std::vector<Attribution> LinkAttributions(
    const std::vector<SvoTuple> &tuples,
    const std::vector<PersonMention> &persons,
    const std::vector<OccupationMention> &occupations);

// Runs the whole pipeline.
struct TextAnalysis {
  ResolvedDocument document;
  std::vector<PersonMention> persons;
  std::vector<OccupationMention> occupations;
  std::vector<SvoTuple> tuples;
  std::vector<Attribution> attributions;
};

TextAnalysis AnalyzeText(std::string_view text, const Lexicons &lexicons);

}  // namespace occubias

#endif  // OCCUBIAS_ANALYSIS_H_
