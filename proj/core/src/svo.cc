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

#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "occubias/analysis.h"

namespace occubias {
namespace {

bool IsCopula(const Token &token) {
  const std::string word = CaseFold(token.surface);
  return word == "is" || word == "was" || word == "are" || word == "were" ||
         word == "be" || word == "became" || word == "becomes";
}

bool IsDeterminer(const Token &token) {
  const std::string word = CaseFold(token.surface);
  return word == "a" || word == "an" || word == "the";
}

bool IsSubjectPronoun(const Token &token) {
  if (!token.is_pronoun) return false;
  const std::string word = CaseFold(token.surface);
  return word == "he" || word == "she";
}

// Maps mentions to the token range they cover.
struct TokenRange {
  std::size_t first = 0;
  std::size_t end = 0;
  std::size_t mention = 0;
};

template <typename Mention>
std::unordered_map<std::size_t, TokenRange> IndexByFirstToken(
    const Document &doc, const std::vector<Mention> &mentions) {
  std::unordered_map<std::size_t, std::size_t> by_begin;
  const auto &tokens = doc.tokens();
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    by_begin.emplace(tokens[t].span.begin, t);
  }
  std::unordered_map<std::size_t, TokenRange> index;
  for (std::size_t m = 0; m < mentions.size(); ++m) {
    auto it = by_begin.find(mentions[m].span.begin);
    if (it == by_begin.end()) continue;
    std::size_t end = it->second;
    while (end < tokens.size() && tokens[end].span.end <= mentions[m].span.end) {
      ++end;
    }
    index.emplace(it->second, TokenRange{it->second, end, m});
  }
  return index;
}

class SentenceMatcher {
 public:
  SentenceMatcher(const ResolvedDocument &rdoc, const Sentence &sentence,
                  const std::unordered_map<std::size_t, TokenRange> &persons,
                  const std::unordered_map<std::size_t, TokenRange> &occupations)
      : tokens_(rdoc.base.tokens()),
        rdoc_(rdoc),
        sentence_(sentence),
        persons_(persons),
        occupations_(occupations) {}

  // Tries the patterns at token `i`; on success appends a tuple and returns
  // the token index just past the object.
  std::optional<std::size_t> MatchAt(std::size_t i, std::vector<SvoTuple> *out,
                                     std::size_t sentence_index) const {
    if (auto person = persons_.find(i); person != persons_.end()) {
      const TokenRange &subject = person->second;
      if (subject.end < sentence_.end_token) {
        const Token &link = tokens_[subject.end];
        const SvoPattern pattern =
            IsCopula(link) ? SvoPattern::kCopula : SvoPattern::kApposition;
        if (IsCopula(link) || link.surface == ",") {
          if (auto object = ObjectAfter(subject.end + 1)) {
            out->push_back(MakeTuple(subject, subject.mention, subject.end,
                                     *object, pattern, sentence_index));
            return object->end;
          }
        }
      }
    }
    if (IsSubjectPronoun(tokens_[i]) && i + 1 < sentence_.end_token &&
        IsCopula(tokens_[i + 1])) {
      if (const PronounResolution *res = rdoc_.Find(i)) {
        if (auto object = ObjectAfter(i + 2)) {
          TokenRange subject{i, i + 1, res->person_index};
          out->push_back(MakeTuple(subject, res->person_index, i + 1, *object,
                                   SvoPattern::kPronounCopula,
                                   sentence_index));
          return object->end;
        }
      }
    }
    return std::nullopt;
  }

 private:
  // [a|an|the] OCCUPATION starting at token k.
  std::optional<TokenRange> ObjectAfter(std::size_t k) const {
    if (k < sentence_.end_token && IsDeterminer(tokens_[k])) ++k;
    if (k >= sentence_.end_token) return std::nullopt;
    auto it = occupations_.find(k);
    if (it == occupations_.end() || it->second.end > sentence_.end_token) {
      return std::nullopt;
    }
    return it->second;
  }

  SvoTuple MakeTuple(const TokenRange &subject, std::size_t person_index,
                     std::size_t verb_token, const TokenRange &object,
                     SvoPattern pattern, std::size_t sentence_index) const {
    SvoTuple tuple;
    tuple.subject_span = {tokens_[subject.first].span.begin,
                          tokens_[subject.end - 1].span.end};
    tuple.verb_span = tokens_[verb_token].span;
    tuple.object_span = {tokens_[object.first].span.begin,
                         tokens_[object.end - 1].span.end};
    tuple.sentence_index = sentence_index;
    tuple.pattern = pattern;
    tuple.person_index = person_index;
    tuple.occupation_index = object.mention;
    return tuple;
  }

  const std::vector<Token> &tokens_;
  const ResolvedDocument &rdoc_;
  const Sentence &sentence_;
  const std::unordered_map<std::size_t, TokenRange> &persons_;
  const std::unordered_map<std::size_t, TokenRange> &occupations_;
};

}  // namespace

std::vector<SvoTuple> ExtractSvo(
    const ResolvedDocument &rdoc, const std::vector<PersonMention> &persons,
    const std::vector<OccupationMention> &occupations) {
  const auto person_index = IndexByFirstToken(rdoc.base, persons);
  const auto occupation_index = IndexByFirstToken(rdoc.base, occupations);
  std::vector<SvoTuple> tuples;
  const auto &sentences = rdoc.base.sentences();
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    SentenceMatcher matcher(rdoc, sentences[s], person_index, occupation_index);
    std::size_t i = sentences[s].first_token;
    while (i < sentences[s].end_token) {
      if (auto next = matcher.MatchAt(i, &tuples, s)) {
        i = *next;
      } else {
        ++i;
      }
    }
  }
  return tuples;
}

std::vector<Attribution> LinkAttributions(
    const std::vector<SvoTuple> &tuples,
    const std::vector<PersonMention> &persons,
    const std::vector<OccupationMention> &occupations) {
  std::vector<Attribution> attributions;
  std::set<std::pair<std::string, std::string>> seen;
  for (const SvoTuple &tuple : tuples) {
    if (tuple.person_index >= persons.size() ||
        tuple.occupation_index >= occupations.size()) {
      continue;
    }
    const PersonMention &person = persons[tuple.person_index];
    const OccupationMention &occupation = occupations[tuple.occupation_index];
    const auto gender = person.gender_resolution.gender();
    if (!person.gender_resolution.is_resolved() || !gender) continue;
    if (!seen.emplace(person.name, occupation.lemma).second) continue;
    attributions.push_back(
        Attribution{person, *gender, occupation, tuple.sentence_index});
  }
  return attributions;
}

TextAnalysis AnalyzeText(std::string_view text, const Lexicons &lexicons) {
  TextAnalysis analysis;
  Document doc = Tokenize(text);
  analysis.persons = TagPersons(doc, lexicons.names);
  analysis.occupations = TagOccupations(doc, lexicons.occupations);
  analysis.document = ChainPronouns(doc, analysis.persons);
  analysis.tuples =
      ExtractSvo(analysis.document, analysis.persons, analysis.occupations);
  analysis.attributions =
      LinkAttributions(analysis.tuples, analysis.persons, analysis.occupations);
  return analysis;
}

}  // namespace occubias
