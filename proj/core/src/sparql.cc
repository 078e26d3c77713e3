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

#include "occubias/sparql.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "occubias/lexicon.h"

namespace occubias {
namespace {

using json = nlohmann::json;

constexpr std::string_view kPrologue =
    "PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>\n"
    "PREFIX foaf: <http://xmlns.com/foaf/0.1/>\n"
    "PREFIX dbo: <http://dbpedia.org/ontology/>\n";

bool IsIriForbidden(unsigned char c) {
  return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
         c == '}' || c == '|' || c == '^' || c == '`' || c == '\\';
}

std::string Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

[[noreturn]] void Malformed(const std::string &what) {
  throw EvidenceError(EvidenceError::Kind::kMalformedResponse,
                      "malformed SPARQL results: " + what);
}

// Value of a binding term, or nullptr if absent or not a term object.
const json *TermValue(const json &binding, const char *var) {
  auto it = binding.find(var);
  if (it == binding.end() || !it->is_object()) return nullptr;
  auto value = it->find("value");
  if (value == it->end() || !value->is_string()) return nullptr;
  return &*value;
}

bool IsUri(const json &binding, const char *var) {
  auto it = binding.find(var);
  if (it == binding.end()) return false;
  auto type = it->find("type");
  return type != it->end() && type->is_string() && *type == "uri";
}

}  // namespace

void KbTypeMap::Add(std::string_view lemma, std::string_view iri) {
  if (!IsValidIriRef(iri)) {
    throw std::invalid_argument("invalid KB type IRI: " + std::string(iri));
  }
  types_[NormalizePhrase(lemma)] = std::string(iri);
}

std::optional<std::string> KbTypeMap::Find(std::string_view lemma) const {
  auto it = types_.find(NormalizePhrase(lemma));
  if (it == types_.end()) return std::nullopt;
  return it->second;
}

KbTypeMap LoadKbTypeMap(std::istream &source) {
  KbTypeMap types;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto comma = trimmed.find(',');
    if (comma == std::string::npos) {
      throw EvidenceError(EvidenceError::Kind::kMalformedFixture,
                          "malformed KB type mapping at line " +
                              std::to_string(line_no),
                          static_cast<int>(line_no));
    }
    try {
      types.Add(Trim(trimmed.substr(0, comma)), Trim(trimmed.substr(comma + 1)));
    } catch (const std::invalid_argument &e) {
      throw EvidenceError(EvidenceError::Kind::kMalformedFixture,
                          std::string(e.what()) + " at line " +
                              std::to_string(line_no),
                          static_cast<int>(line_no));
    }
  }
  return types;
}

KbTypeMap LoadKbTypeMapFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw EvidenceError(EvidenceError::Kind::kIo,
                        "cannot open KB type map " + path.string());
  }
  return LoadKbTypeMap(in);
}

bool IsValidIriRef(std::string_view iri) {
  if (iri.empty() || iri.find(':') == std::string_view::npos) return false;
  for (char c : iri) {
    if (IsIriForbidden(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string CountryIri(std::string_view country) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out = kDbpediaResourcePrefix;
  for (char ch : Trim(country)) {
    const auto c = static_cast<unsigned char>(ch);
    if (c == ' ') {
      out.push_back('_');
    } else if (IsIriForbidden(c) || c == '%') {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    } else {
      out.push_back(ch);
    }
  }
  return out;
}

std::string BuildQuery(const EvidenceQuery &query, const KbTypeMap &types) {
  query.Validate();
  const auto type_iri = types.Find(query.occupation_lemma);
  if (!type_iri) {
    throw EvidenceError(EvidenceError::Kind::kUnmappableOccupation,
                        "no knowledge-base type for occupation '" +
                            query.occupation_lemma + "'");
  }
  std::ostringstream out;
  out << kPrologue;
  out << "SELECT ?person ?bCity ?bDate ?dDate WHERE {\n"
      << "  ?person rdf:type <" << *type_iri << "> .\n"
      << "  ?person foaf:gender \"" << GenderName(query.gender) << "\"@en .\n"
      << "  ?person dbo:birthPlace ?bCity .\n"
      << "  ?bCity dbo:country <" << CountryIri(query.country) << "> .\n"
      << "  ?person dbo:birthDate ?bDate .\n"
      << "  OPTIONAL { ?person dbo:deathDate ?dDate . }\n"
      << "}\n";
  return out.str();
}

std::optional<int> ParseYear(std::string_view literal) {
  const std::string text = Trim(literal);
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::size_t digits = 0;
  while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) {
    ++digits;
  }
  if (digits == 0 || digits > 6) return std::nullopt;
  int year = 0;
  std::from_chars(s.data(), s.data() + digits, year);
  std::string_view rest = s.substr(digits);
  const bool valid_rest =
      rest.empty() || rest.front() == 'Z' || rest.front() == '+' ||
      rest.front() == 'T' ||
      (rest.size() >= 2 && rest[0] == '-' &&
       std::isdigit(static_cast<unsigned char>(rest[1])));
  if (!valid_rest) return std::nullopt;
  return negative ? -year : year;
}

std::string LabelFromIri(std::string_view iri) {
  std::string_view segment = iri;
  while (!segment.empty() && segment.back() == '/') segment.remove_suffix(1);
  const auto slash = segment.find_last_of("/#");
  if (slash != std::string_view::npos) segment.remove_prefix(slash + 1);
  std::string out;
  for (std::size_t i = 0; i < segment.size(); ++i) {
    if (segment[i] == '%' && i + 2 < segment.size() &&
        HexValue(segment[i + 1]) >= 0 && HexValue(segment[i + 2]) >= 0) {
      out.push_back(static_cast<char>(HexValue(segment[i + 1]) * 16 +
                                      HexValue(segment[i + 2])));
      i += 2;
    } else if (segment[i] == '_') {
      out.push_back(' ');
    } else {
      out.push_back(segment[i]);
    }
  }
  return out;
}

ParsedResults ParseSparqlResults(std::string_view body,
                                 const EvidenceQuery &query) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error &e) {
    Malformed(e.what());
  }
  if (!doc.is_object()) Malformed("top level is not an object");
  auto results = doc.find("results");
  if (results == doc.end() || !results->is_object()) Malformed("no results");
  auto bindings = results->find("bindings");
  if (bindings == results->end() || !bindings->is_array()) {
    Malformed("no bindings array");
  }
  ParsedResults parsed;
  std::set<std::string> seen;
  for (const json &binding : *bindings) {
    if (!binding.is_object()) Malformed("binding is not an object");
    const json *person = TermValue(binding, "person");
    const json *birth = TermValue(binding, "bDate");
    const auto birth_year =
        birth ? ParseYear(birth->get<std::string>()) : std::nullopt;
    if (person == nullptr || !birth_year) {
      ++parsed.dropped;
      continue;
    }
    const std::string person_id = person->get<std::string>();
    if (!seen.insert(person_id).second) continue;
    EvidenceRecord record;
    record.person_name =
        IsUri(binding, "person") ? LabelFromIri(person_id) : person_id;
    record.gender = query.gender;
    record.occupation_lemma = query.occupation_lemma;
    if (const json *city = TermValue(binding, "bCity")) {
      record.birth_city = IsUri(binding, "bCity")
                              ? LabelFromIri(city->get<std::string>())
                              : city->get<std::string>();
    }
    record.country = query.country;
    record.birth_year = *birth_year;
    if (const json *death = TermValue(binding, "dDate")) {
      const auto death_year = ParseYear(death->get<std::string>());
      if (death_year && *death_year >= record.birth_year) {
        record.death_year = death_year;
      }
    }
    parsed.records.push_back(std::move(record));
  }
  return parsed;
}

}  // namespace occubias
