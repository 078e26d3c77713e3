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

// Occupation and given-name gazetteers.
//
// Occupations file: one `<lemma>,<class>` record per line, class one of
// neutral/male/female. Names file: one `<given_name>,<m|f>` record per line.
// Lines starting with '#' and blank lines are skipped in both.

#ifndef OCCUBIAS_LEXICON_H_
#define OCCUBIAS_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "occubias/model.h"

namespace occubias {

class LexiconError : public std::runtime_error {
 public:
  enum class Kind { kMalformedLine, kConflictingClass, kEmptyLexicon, kIo };

  LexiconError(Kind kind, const std::string &message, std::size_t line = 0)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based line number for kMalformedLine, 0 otherwise.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// ASCII case folding; other bytes are left untouched.
std::string CaseFold(std::string_view text);

// Case-folds, trims and collapses internal whitespace runs to one space.
std::string NormalizePhrase(std::string_view text);

// Plural surface forms generated for a (singular) lemma. The last word is
// inflected: sibilant endings take "es", consonant+y becomes "ies",
// "-man" becomes "-men", everything else takes "s".
std::vector<std::string> PluralVariants(std::string_view lemma);

struct OccupationMatch {
  std::string lemma;
  OccupationClass occupation_class;

  friend bool operator==(const OccupationMatch &,
                         const OccupationMatch &) = default;
};

class OccupationLexicon {
 public:
  // Adds a lemma (normalized on entry). Re-adding with the same class is a
  // no-op; a different class throws kConflictingClass.
  void Add(std::string_view lemma, OccupationClass occupation_class);

  // Exact lookup of an already normalized surface form.
  std::optional<OccupationMatch> LookupNormalized(
      std::string_view normalized) const;

  // Lemma -> class, ordered by lemma.
  const std::map<std::string, OccupationClass> &entries() const {
    return entries_;
  }
  const std::unordered_map<std::string, std::string> &surface_index() const {
    return surface_index_;
  }
  // Longest phrase in the index, in words.
  std::size_t max_phrase_words() const { return max_phrase_words_; }
  std::size_t size() const { return entries_.size(); }

  // Writes the lexicon back in file format, sorted by lemma.
  void Serialize(std::ostream &out) const;

 private:
  std::map<std::string, OccupationClass> entries_;
  std::unordered_map<std::string, std::string> surface_index_;
  std::size_t max_phrase_words_ = 0;
};

class NameLexicon {
 public:
  void Add(std::string_view name, Gender gender);

  const std::set<std::string> &male_names() const { return male_; }
  const std::set<std::string> &female_names() const { return female_; }
  bool Contains(std::string_view name) const;

  // Writes one record per (name, gender) pair, sorted.
  void Serialize(std::ostream &out) const;

 private:
  std::set<std::string> male_;
  std::set<std::string> female_;
};

OccupationLexicon LoadOccupations(std::istream &source);
NameLexicon LoadNames(std::istream &source);

// File variants; throw LexiconError(kIo) when the file cannot be opened.
OccupationLexicon LoadOccupationsFile(const std::filesystem::path &path);
NameLexicon LoadNamesFile(const std::filesystem::path &path);

// Classifies a free-text occupation surface ("Doctors", "nurse
// practitioner"). Returns nullopt when the phrase is not in the lexicon.
std::optional<OccupationMatch> ClassifyOccupation(const OccupationLexicon &lex,
                                                  std::string_view surface);

GenderResolution LookupGender(const NameLexicon &lex,
                              std::string_view given_name);

struct LexiconStats {
  std::size_t occupations = 0;
  std::size_t neutral_occupations = 0;
  std::size_t male_occupations = 0;
  std::size_t female_occupations = 0;
  std::size_t male_names = 0;
  std::size_t female_names = 0;
};

// Both gazetteers, loaded together.
struct Lexicons {
  OccupationLexicon occupations;
  NameLexicon names;

  LexiconStats Stats() const;
};

}  // namespace occubias

#endif  // OCCUBIAS_LEXICON_H_
