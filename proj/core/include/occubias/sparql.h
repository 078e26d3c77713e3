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

// SPARQL evidence queries against a DBpedia-style knowledge base.

#ifndef OCCUBIAS_SPARQL_H_
#define OCCUBIAS_SPARQL_H_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "occubias/evidence.h"

namespace occubias {

inline constexpr char kDbpediaResourcePrefix[] = "http://dbpedia.org/resource/";

// Occupation lemma -> knowledge-base class IRI. File format:
// `<lemma>,<kb_type_iri>` per line, '#' comments.
class KbTypeMap {
 public:
  // Throws std::invalid_argument when the IRI is not a valid IRIREF body.
  void Add(std::string_view lemma, std::string_view iri);
  std::optional<std::string> Find(std::string_view lemma) const;
  const std::map<std::string, std::string> &entries() const { return types_; }

 private:
  std::map<std::string, std::string> types_;
};

KbTypeMap LoadKbTypeMap(std::istream &source);
KbTypeMap LoadKbTypeMapFile(const std::filesystem::path &path);

// Resource IRI for a canonical country name ("United States" ->
// http://dbpedia.org/resource/United_States).
std::string CountryIri(std::string_view country);

// True if `iri` may appear between '<' and '>' in SPARQL.
bool IsValidIriRef(std::string_view iri);

// Instantiates the evidence query template for `query`. Throws
// EvidenceError(kUnmappableOccupation) if the lemma has no KB type.
std::string BuildQuery(const EvidenceQuery &query, const KbTypeMap &types);

// Year of an xsd:date / xsd:dateTime / xsd:gYear lexical form
// ("1950-03-01", "1950", "-0350-01-01"); nullopt if unparseable.
std::optional<int> ParseYear(std::string_view literal);

// Human-readable label from a resource IRI's last path segment
// (".../Mae_Jemison" -> "Mae Jemison").
std::string LabelFromIri(std::string_view iri);

struct ParsedResults {
  std::vector<EvidenceRecord> records;
  // Bindings dropped for a missing or unparseable birth date.
  std::size_t dropped = 0;
};

// Parses a SPARQL 1.1 JSON results document for the evidence template. The
// query supplies occupation, gender and country. Duplicate rows for the same
// person keep the first. Throws EvidenceError(kMalformedResponse).
ParsedResults ParseSparqlResults(std::string_view body,
                                 const EvidenceQuery &query);

struct EndpointOptions {
  // e.g. "https://dbpedia.org/sparql".
  std::string url;
  std::chrono::milliseconds timeout{10000};
  int retries = 2;
};

// EvidenceSource speaking the SPARQL 1.1 protocol (form-encoded POST,
// JSON results).
class SparqlEndpointSource : public EvidenceSource {
 public:
  SparqlEndpointSource(EndpointOptions options, KbTypeMap types);

  std::vector<EvidenceRecord> Fetch(const EvidenceQuery &query) override;
  std::string_view mode() const override { return "remote"; }
  std::size_t dropped_records() const override { return dropped_; }

  const EndpointOptions &options() const { return options_; }

 private:
  std::string Post(const std::string &sparql) const;

  EndpointOptions options_;
  KbTypeMap types_;
  std::string scheme_host_port_;
  std::string path_;
  std::atomic<std::size_t> dropped_{0};
};

}  // namespace occubias

#endif  // OCCUBIAS_SPARQL_H_
