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

#include "occubias/lexicon.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace occubias {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::size_t CountWords(std::string_view normalized) {
  if (normalized.empty()) return 0;
  return std::count(normalized.begin(), normalized.end(), ' ') + 1;
}

// Splits a record into exactly two trimmed fields or returns false.
bool SplitRecord(std::string_view line, std::string_view *key,
                 std::string_view *value) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos) return false;
  if (line.find(',', comma + 1) != std::string_view::npos) return false;
  *key = Trim(line.substr(0, comma));
  *value = Trim(line.substr(comma + 1));
  return !key->empty() && !value->empty();
}

// Calls `fn(line_no, key, value)` for every record line.
template <typename Fn>
void ForEachRecord(std::istream &source, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::string_view key, value;
    if (!SplitRecord(trimmed, &key, &value)) {
      throw LexiconError(LexiconError::Kind::kMalformedLine,
                         "malformed record at line " + std::to_string(line_no),
                         line_no);
    }
    fn(line_no, key, value);
  }
}

std::ifstream OpenOrThrow(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw LexiconError(LexiconError::Kind::kIo,
                       "cannot open lexicon file " + path.string());
  }
  return in;
}

}  // namespace

std::string CaseFold(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string NormalizePhrase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : Trim(text)) {
    if (IsSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

std::vector<std::string> PluralVariants(std::string_view lemma) {
  if (lemma.empty()) return {};
  const std::string base(lemma);
  std::vector<std::string> out;
  if (EndsWith(base, "s") || EndsWith(base, "x") || EndsWith(base, "z") ||
      EndsWith(base, "ch") || EndsWith(base, "sh")) {
    out.push_back(base + "es");
  } else if (base.size() >= 2 && base.back() == 'y' &&
             !IsVowel(base[base.size() - 2])) {
    out.push_back(base.substr(0, base.size() - 1) + "ies");
  } else if (EndsWith(base, "man")) {
    out.push_back(base.substr(0, base.size() - 3) + "men");
  } else {
    out.push_back(base + "s");
  }
  return out;
}

void OccupationLexicon::Add(std::string_view lemma,
                            OccupationClass occupation_class) {
  std::string key = NormalizePhrase(lemma);
  if (key.empty()) {
    throw LexiconError(LexiconError::Kind::kMalformedLine, "empty lemma");
  }
  auto [it, inserted] = entries_.emplace(key, occupation_class);
  if (!inserted) {
    if (it->second == occupation_class) return;
    throw LexiconError(LexiconError::Kind::kConflictingClass,
                       "conflicting classes for occupation '" + key + "'");
  }
  // A lemma always wins over a plural variant generated from another lemma.
  surface_index_[key] = key;
  for (std::string &variant : PluralVariants(key)) {
    if (entries_.count(variant) > 0) continue;
    surface_index_.emplace(std::move(variant), key);
  }
  max_phrase_words_ = std::max(max_phrase_words_, CountWords(key));
}

std::optional<OccupationMatch> OccupationLexicon::LookupNormalized(
    std::string_view normalized) const {
  auto it = surface_index_.find(std::string(normalized));
  if (it == surface_index_.end()) return std::nullopt;
  return OccupationMatch{it->second, entries_.at(it->second)};
}

void OccupationLexicon::Serialize(std::ostream &out) const {
  for (const auto &[lemma, cls] : entries_) {
    out << lemma << ',' << cls.name() << '\n';
  }
}

void NameLexicon::Add(std::string_view name, Gender gender) {
  std::string key = CaseFold(Trim(name));
  if (key.empty()) {
    throw LexiconError(LexiconError::Kind::kMalformedLine, "empty name");
  }
  (gender == Gender::kMale ? male_ : female_).insert(std::move(key));
}

bool NameLexicon::Contains(std::string_view name) const {
  const std::string key = CaseFold(Trim(name));
  return male_.count(key) > 0 || female_.count(key) > 0;
}

void NameLexicon::Serialize(std::ostream &out) const {
  for (const auto &name : male_) out << name << ",m\n";
  for (const auto &name : female_) out << name << ",f\n";
}

OccupationLexicon LoadOccupations(std::istream &source) {
  OccupationLexicon lex;
  ForEachRecord(source, [&](std::size_t line_no, std::string_view lemma,
                            std::string_view cls) {
    const auto parsed = OccupationClass::Parse(cls);
    if (!parsed) {
      throw LexiconError(LexiconError::Kind::kMalformedLine,
                         "unknown occupation class '" + std::string(cls) +
                             "' at line " + std::to_string(line_no),
                         line_no);
    }
    lex.Add(lemma, *parsed);
  });
  if (lex.size() == 0) {
    throw LexiconError(LexiconError::Kind::kEmptyLexicon,
                       "occupation lexicon is empty");
  }
  return lex;
}

NameLexicon LoadNames(std::istream &source) {
  NameLexicon lex;
  ForEachRecord(source, [&](std::size_t line_no, std::string_view name,
                            std::string_view gender) {
    if (gender != "m" && gender != "f") {
      throw LexiconError(LexiconError::Kind::kMalformedLine,
                         "gender must be m or f at line " +
                             std::to_string(line_no),
                         line_no);
    }
    lex.Add(name, gender == "m" ? Gender::kMale : Gender::kFemale);
  });
  if (lex.male_names().empty() && lex.female_names().empty()) {
    throw LexiconError(LexiconError::Kind::kEmptyLexicon,
                       "name lexicon is empty");
  }
  return lex;
}

OccupationLexicon LoadOccupationsFile(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadOccupations(in);
}

NameLexicon LoadNamesFile(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadNames(in);
}

std::optional<OccupationMatch> ClassifyOccupation(const OccupationLexicon &lex,
                                                  std::string_view surface) {
  return lex.LookupNormalized(NormalizePhrase(surface));
}

GenderResolution LookupGender(const NameLexicon &lex,
                              std::string_view given_name) {
  const std::string key = CaseFold(Trim(given_name));
  const bool male = lex.male_names().count(key) > 0;
  const bool female = lex.female_names().count(key) > 0;
  if (male && female) return GenderResolution::Ambiguous();
  if (male) return GenderResolution::Resolved(Gender::kMale);
  if (female) return GenderResolution::Resolved(Gender::kFemale);
  return GenderResolution::Unknown();
}

LexiconStats Lexicons::Stats() const {
  LexiconStats stats;
  stats.occupations = occupations.size();
  for (const auto &[lemma, cls] : occupations.entries()) {
    if (cls.is_neutral()) {
      ++stats.neutral_occupations;
    } else if (cls.specific_gender() == Gender::kMale) {
      ++stats.male_occupations;
    } else {
      ++stats.female_occupations;
    }
  }
  stats.male_names = names.male_names().size();
  stats.female_names = names.female_names().size();
  return stats;
}

}  // namespace occubias
