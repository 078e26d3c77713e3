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

#include <array>
#include <cstdint>
#include <string>

#include "occubias/analysis.h"

namespace occubias {
namespace {

enum class CharClass { kSpace, kWord, kPunct };

struct CodePoint {
  char32_t value = 0;
  std::size_t length = 1;
};

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 sequence. An invalid byte decodes as U+FFFD with length
// 1, so it is treated as a word character.
CodePoint Decode(std::string_view text, std::size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) return {lead, 1};
  std::size_t length = 0;
  char32_t value = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return {kReplacement, 1};
  }
  if (pos + length > text.size()) return {kReplacement, 1};
  for (std::size_t i = 1; i < length; ++i) {
    const auto cont = static_cast<unsigned char>(text[pos + i]);
    if ((cont & 0xC0) != 0x80) return {kReplacement, 1};
    value = (value << 6) | (cont & 0x3F);
  }
  return {value, length};
}

CharClass Classify(char32_t c) {
  if (c < 0x80) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v') {
      return CharClass::kSpace;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
        (c >= '0' && c <= '9')) {
      return CharClass::kWord;
    }
    return CharClass::kPunct;
  }
  if (c == 0x85 || c == 0xA0 || c == 0x1680 || (c >= 0x2000 && c <= 0x200A) ||
      c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F ||
      c == 0x3000) {
    return CharClass::kSpace;
  }
  if (c >= 0xA1 && c <= 0xBF && c != 0xAA && c != 0xB2 && c != 0xB3 &&
      c != 0xB5 && c != 0xB9 && c != 0xBA) {
    return CharClass::kPunct;
  }
  if (c == 0xD7 || c == 0xF7 || (c >= 0x2010 && c <= 0x2027) ||
      (c >= 0x2030 && c <= 0x205E) || (c >= 0x3001 && c <= 0x303F)) {
    return CharClass::kPunct;
  }
  return CharClass::kWord;
}

// Characters that may sit inside a word between two word characters.
bool IsWordJoiner(char32_t c) {
  return c == '\'' || c == '-' || c == 0x2019 || c == 0x2010 || c == 0x2011;
}

bool IsTerminal(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?" ||
         surface == "…";
}

bool IsClosing(std::string_view surface) {
  return surface == "\"" || surface == "'" || surface == ")" ||
         surface == "]" || surface == "”" || surface == "’" ||
         surface == "»";
}

// Words that are routinely followed by a period inside a sentence.
bool IsAbbreviation(std::string_view word) {
  static constexpr std::array<std::string_view, 14> kAbbreviations = {
      "Mr", "Mrs", "Ms", "Dr", "Prof", "St", "Jr", "Sr",
      "Mt", "vs", "etc", "Rev", "Gen", "Capt"};
  for (auto abbrev : kAbbreviations) {
    if (word == abbrev) return true;
  }
  // Initials, but not the pronoun "I".
  return word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z' && word != "I";
}

std::optional<Gender> PronounGender(std::string_view surface) {
  if (surface.size() > 4) return std::nullopt;
  std::string lower(surface);
  for (char &c : lower) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  if (lower == "he" || lower == "him" || lower == "his") return Gender::kMale;
  if (lower == "she" || lower == "her" || lower == "hers") {
    return Gender::kFemale;
  }
  return std::nullopt;
}

std::vector<Token> SplitTokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint cp = Decode(text, pos);
    const CharClass cls = Classify(cp.value);
    if (cls == CharClass::kSpace) {
      pos += cp.length;
      continue;
    }
    const std::size_t begin = pos;
    pos += cp.length;
    if (cls == CharClass::kWord) {
      while (pos < text.size()) {
        const CodePoint next = Decode(text, pos);
        const CharClass next_cls = Classify(next.value);
        if (next_cls == CharClass::kWord) {
          pos += next.length;
          continue;
        }
        if (IsWordJoiner(next.value) && pos + next.length < text.size()) {
          const CodePoint after = Decode(text, pos + next.length);
          if (Classify(after.value) == CharClass::kWord) {
            pos += next.length + after.length;
            continue;
          }
        }
        break;
      }
    }
    Token token;
    token.surface = std::string(text.substr(begin, pos - begin));
    token.span = {begin, pos};
    token.is_word = cls == CharClass::kWord;
    if (token.is_word) {
      token.pronoun_gender = PronounGender(token.surface);
      token.is_pronoun = token.pronoun_gender.has_value();
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

// True if a sentence ends right after tokens[i].
bool EndsSentence(const std::vector<Token> &tokens, std::size_t i) {
  const bool last = i + 1 == tokens.size();
  if (!last && tokens[i].span.end == tokens[i + 1].span.begin) return false;
  // Walk back over the contiguous run of closing/terminal punctuation.
  std::size_t j = i;
  bool saw_terminal = false;
  while (true) {
    const auto &surface = tokens[j].surface;
    if (IsTerminal(surface)) {
      saw_terminal = true;
    } else if (!IsClosing(surface)) {
      break;
    }
    if (j == 0 || tokens[j - 1].span.end != tokens[j].span.begin) {
      // Run starts the text or follows whitespace.
      return saw_terminal;
    }
    --j;
  }
  if (!saw_terminal) return false;
  // tokens[j] is the word (or other token) glued to the terminal run.
  if (tokens[j].is_word && tokens[j + 1].surface == "." &&
      IsAbbreviation(tokens[j].surface) && !last) {
    return false;
  }
  return true;
}

}  // namespace

Document Tokenize(std::string_view text) {
  std::vector<Token> tokens = SplitTokens(text);
  std::vector<Sentence> sentences;
  std::size_t first = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    tokens[i].sentence_index = sentences.size();
    if (i + 1 == tokens.size() || EndsSentence(tokens, i)) {
      Sentence sentence;
      sentence.first_token = first;
      sentence.end_token = i + 1;
      sentence.span = {tokens[first].span.begin, tokens[i].span.end};
      sentences.push_back(sentence);
      first = i + 1;
    }
  }
  return Document(std::string(text), std::move(sentences), std::move(tokens));
}

}  // namespace occubias
