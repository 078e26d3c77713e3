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

#include "oracles/sparql_checker.h"

#include <cctype>
#include <stdexcept>

namespace occubias::oracle {
namespace {

enum class Tok { kKeyword, kVar, kIri, kPname, kLiteral, kPunct, kEnd };

struct Token {
  Tok type;
  std::string text;
};

class SyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool IsPnChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || static_cast<unsigned char>(c) >= 0x80;
}

std::vector<Token> Lex(std::string_view q) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < q.size()) {
    const char c = q[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < q.size() && q[i] != '\n') ++i;
    } else if (c == '<') {
      const std::size_t close = q.find('>', i + 1);
      if (close == std::string_view::npos) throw SyntaxError("unclosed IRI");
      std::string iri(q.substr(i + 1, close - i - 1));
      for (char ch : iri) {
        const auto u = static_cast<unsigned char>(ch);
        if (u <= 0x20 || std::string_view("<\"{}|^`\\").find(ch) !=
                             std::string_view::npos) {
          throw SyntaxError("bad IRI character in <" + iri + ">");
        }
      }
      out.push_back({Tok::kIri, iri});
      i = close + 1;
    } else if (c == '?' || c == '$') {
      std::size_t j = i + 1;
      while (j < q.size() && (std::isalnum(static_cast<unsigned char>(q[j])) ||
                              q[j] == '_')) {
        ++j;
      }
      if (j == i + 1) throw SyntaxError("empty variable name");
      out.push_back({Tok::kVar, "?" + std::string(q.substr(i + 1, j - i - 1))});
      i = j;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < q.size() && q[j] != '"') {
        if (q[j] == '\\') ++j;
        if (q[j] == '\n') throw SyntaxError("newline in literal");
        ++j;
      }
      if (j >= q.size()) throw SyntaxError("unclosed literal");
      ++j;
      if (j < q.size() && q[j] == '@') {
        std::size_t k = j + 1;
        while (k < q.size() && (std::isalpha(static_cast<unsigned char>(q[k])) ||
                                q[k] == '-')) {
          ++k;
        }
        if (k == j + 1) throw SyntaxError("empty language tag");
        j = k;
      }
      out.push_back({Tok::kLiteral, std::string(q.substr(i, j - i))});
      i = j;
    } else if (c == '{' || c == '}' || c == '.' || c == '*') {
      out.push_back({Tok::kPunct, std::string(1, c)});
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == ':') {
      std::size_t j = i;
      while (j < q.size() && (IsPnChar(q[j]) || q[j] == ':')) ++j;
      // A trailing '.' ends the triple, not the name.
      while (j > i && q[j - 1] == '.') --j;
      std::string word(q.substr(i, j - i));
      out.push_back({word.find(':') == std::string::npos ? Tok::kKeyword
                                                         : Tok::kPname,
                     word});
      i = j;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, ""});
  return out;
}

std::string Upper(std::string s) {
  for (char &c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  void Run(ParsedQuery &out) {
    while (IsKeyword("PREFIX")) {
      ++pos_;
      const Token &ns = Next();
      if (ns.type != Tok::kPname || ns.text.back() != ':' ||
          ns.text.find(':') != ns.text.size() - 1) {
        throw SyntaxError("bad prefix name " + ns.text);
      }
      const Token &iri = Next();
      if (iri.type != Tok::kIri) throw SyntaxError("PREFIX needs an IRI");
      out.prefixes[ns.text.substr(0, ns.text.size() - 1)] = iri.text;
    }
    if (!IsKeyword("SELECT")) throw SyntaxError("expected SELECT");
    ++pos_;
    if (IsKeyword("DISTINCT") || IsKeyword("REDUCED")) ++pos_;
    if (Peek().type == Tok::kPunct && Peek().text == "*") {
      ++pos_;
      out.select_vars.push_back("*");
    } else {
      while (Peek().type == Tok::kVar) out.select_vars.push_back(Next().text);
      if (out.select_vars.empty()) throw SyntaxError("SELECT without variables");
    }
    if (IsKeyword("WHERE")) ++pos_;
    Group(out, false);
    if (Peek().type != Tok::kEnd) throw SyntaxError("trailing tokens");
  }

 private:
  const Token &Peek() const { return toks_[pos_]; }
  const Token &Next() {
    if (toks_[pos_].type == Tok::kEnd) throw SyntaxError("unexpected end");
    return toks_[pos_++];
  }
  bool IsKeyword(const char *kw) const {
    return Peek().type == Tok::kKeyword && Upper(Peek().text) == kw;
  }
  bool IsPunct(const char *p) const {
    return Peek().type == Tok::kPunct && Peek().text == p;
  }

  std::string Term(const ParsedQuery &out, bool predicate, bool object) {
    const Token &t = Next();
    switch (t.type) {
      case Tok::kVar:
        return t.text;
      case Tok::kIri:
        return t.text;
      case Tok::kPname: {
        const std::size_t colon = t.text.find(':');
        const auto it = out.prefixes.find(t.text.substr(0, colon));
        if (it == out.prefixes.end()) {
          throw SyntaxError("undeclared prefix in " + t.text);
        }
        return it->second + t.text.substr(colon + 1);
      }
      case Tok::kLiteral:
        if (!object) throw SyntaxError("literal outside object position");
        return t.text;
      case Tok::kKeyword:
        if (predicate && t.text == "a") {
          return "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
        }
        break;
      default:
        break;
    }
    throw SyntaxError("unexpected token '" + t.text + "'");
  }

  void Group(ParsedQuery &out, bool optional) {
    if (!IsPunct("{")) throw SyntaxError("expected '{'");
    ++pos_;
    while (!IsPunct("}")) {
      if (IsKeyword("OPTIONAL")) {
        ++pos_;
        Group(out, true);
        if (IsPunct(".")) ++pos_;
        continue;
      }
      Triple triple;
      triple.subject = Term(out, false, false);
      triple.predicate = Term(out, true, false);
      triple.object = Term(out, false, true);
      triple.optional = optional;
      out.triples.push_back(triple);
      if (IsPunct(".")) {
        ++pos_;
      } else if (!IsPunct("}")) {
        throw SyntaxError("expected '.' or '}' after triple");
      }
    }
    ++pos_;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedQuery ParseSparql(std::string_view query) {
  ParsedQuery out;
  try {
    Parser(Lex(query)).Run(out);
    out.ok = true;
  } catch (const SyntaxError &e) {
    out.ok = false;
    out.error = e.what();
  }
  return out;
}

}  // namespace occubias::oracle
