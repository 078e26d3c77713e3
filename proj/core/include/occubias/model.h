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

// Shared domain types. Everything here is a plain value type that is
// immutable once the pipeline stage producing it has returned, so instances
// can be shared read-only between concurrent analyses.

#ifndef OCCUBIAS_MODEL_H_
#define OCCUBIAS_MODEL_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace occubias {

// Half-open byte range [begin, end) into UTF-8 text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return end <= begin; }

  friend auto operator<=>(const Span &, const Span &) = default;
};

// True iff the two spans share at least one byte. Empty spans never overlap.
bool SpanOverlaps(Span a, Span b);

// True iff `inner` lies within `outer`.
bool SpanContains(Span outer, Span inner);

// Returns the bytes of `text` covered by `span`. The span must lie in `text`.
std::string_view Slice(std::string_view text, Span span);

enum class Gender { kFemale, kMale };

Gender Opposite(Gender g);

// "female" / "male".
std::string_view GenderName(Gender g);

// Accepts "female"/"male" and the single-letter forms "f"/"m".
std::optional<Gender> ParseGender(std::string_view text);

struct Token {
  std::string surface;
  Span span;
  std::size_t sentence_index = 0;
  // False for punctuation tokens.
  bool is_word = true;
  bool is_pronoun = false;
  std::optional<Gender> pronoun_gender;

  friend bool operator==(const Token &, const Token &) = default;
};

struct Sentence {
  Span span;
  // Tokens [first_token, end_token) belong to this sentence.
  std::size_t first_token = 0;
  std::size_t end_token = 0;

  friend bool operator==(const Sentence &, const Sentence &) = default;
};

// Tokenized, sentence-segmented text. Token spans are strictly increasing,
// non-overlapping, and separated only by whitespace. Build with Tokenize().
class Document {
 public:
  Document() = default;
  Document(std::string raw_text, std::vector<Sentence> sentences,
           std::vector<Token> tokens)
      : raw_text_(std::move(raw_text)),
        sentences_(std::move(sentences)),
        tokens_(std::move(tokens)) {}

  const std::string &raw_text() const { return raw_text_; }
  const std::vector<Sentence> &sentences() const { return sentences_; }
  const std::vector<Token> &tokens() const { return tokens_; }

  std::string_view text(Span span) const { return Slice(raw_text_, span); }

  friend bool operator==(const Document &, const Document &) = default;

 private:
  std::string raw_text_;
  std::vector<Sentence> sentences_;
  std::vector<Token> tokens_;
};

// Outcome of looking a given name up in the names dataset.
class GenderResolution {
 public:
  enum class Kind { kResolved, kAmbiguous, kUnknown };

  static GenderResolution Resolved(Gender g) {
    return GenderResolution(Kind::kResolved, g);
  }
  static GenderResolution Ambiguous() {
    return GenderResolution(Kind::kAmbiguous, std::nullopt);
  }
  static GenderResolution Unknown() {
    return GenderResolution(Kind::kUnknown, std::nullopt);
  }

  Kind kind() const { return kind_; }
  bool is_resolved() const { return kind_ == Kind::kResolved; }
  // Set iff kind() == kResolved.
  std::optional<Gender> gender() const { return gender_; }

  // "male", "female", "ambiguous" or "unknown".
  std::string_view name() const;

  friend bool operator==(const GenderResolution &,
                         const GenderResolution &) = default;

 private:
  GenderResolution(Kind kind, std::optional<Gender> gender)
      : kind_(kind), gender_(gender) {}

  Kind kind_;
  std::optional<Gender> gender_;
};

// Either gender-neutral or specific to one gender.
class OccupationClass {
 public:
  static OccupationClass Neutral() { return OccupationClass(std::nullopt); }
  static OccupationClass Specific(Gender g) { return OccupationClass(g); }

  bool is_neutral() const { return !specific_.has_value(); }
  std::optional<Gender> specific_gender() const { return specific_; }

  // "neutral", "male" or "female"; the same vocabulary as the lexicon file.
  std::string_view name() const;
  static std::optional<OccupationClass> Parse(std::string_view text);

  friend bool operator==(const OccupationClass &,
                         const OccupationClass &) = default;

 private:
  explicit OccupationClass(std::optional<Gender> specific)
      : specific_(specific) {}

  std::optional<Gender> specific_;
};

struct PersonMention {
  std::string name;
  GenderResolution gender_resolution = GenderResolution::Unknown();
  Span span;
  std::size_t sentence_index = 0;

  friend bool operator==(const PersonMention &,
                         const PersonMention &) = default;
};

struct OccupationMention {
  // Canonical lexicon key.
  std::string lemma;
  std::string surface;
  Span span;
  std::size_t sentence_index = 0;
  OccupationClass occupation_class = OccupationClass::Neutral();

  friend bool operator==(const OccupationMention &,
                         const OccupationMention &) = default;
};

// A <person, gender, occupation> triple read off the text. `gender` is
// always the person's resolved gender.
struct Attribution {
  PersonMention person;
  Gender gender = Gender::kFemale;
  OccupationMention occupation;
  std::size_t evidence_sentence_index = 0;

  friend bool operator==(const Attribution &, const Attribution &) = default;
};

// The user's timespan (closed, in years) and country.
class QueryContext {
 public:
  // Throws std::invalid_argument unless year_start <= year_end and the
  // country is non-empty.
  QueryContext(int year_start, int year_end, std::string country);

  int year_start() const { return year_start_; }
  int year_end() const { return year_end_; }
  const std::string &country() const { return country_; }

  friend bool operator==(const QueryContext &, const QueryContext &) = default;

 private:
  int year_start_;
  int year_end_;
  std::string country_;
};

// A real person returned by the knowledge base.
struct EvidenceRecord {
  std::string person_name;
  Gender gender = Gender::kFemale;
  std::string occupation_lemma;
  std::string birth_city;
  std::string country;
  int birth_year = 0;
  // Absent when the person is alive or the date is unknown.
  std::optional<int> death_year;

  friend bool operator==(const EvidenceRecord &,
                         const EvidenceRecord &) = default;
};

enum class VerdictStatus {
  kNotApplicableGenderSpecific,
  kFreeOfBias,
  kPossiblyBiased,
  // The evidence backend failed; the attribution is undecided.
  kEvidenceUnavailable,
};

// "not_applicable_gender_specific", "free_of_bias", "possibly_biased",
// "evidence_unavailable".
std::string_view VerdictStatusName(VerdictStatus status);

struct BiasVerdict {
  Attribution attribution;
  VerdictStatus status = VerdictStatus::kFreeOfBias;
  // Non-empty iff status == kPossiblyBiased; capped for display.
  std::vector<EvidenceRecord> evidence;
  // Number of matching records before the display cap was applied.
  std::size_t evidence_total = 0;
  // Person span then occupation span iff status == kPossiblyBiased.
  std::vector<Span> highlight_spans;
  // Set iff status == kEvidenceUnavailable.
  std::optional<std::string> error;

  friend bool operator==(const BiasVerdict &, const BiasVerdict &) = default;
};

}  // namespace occubias

#endif  // OCCUBIAS_MODEL_H_
