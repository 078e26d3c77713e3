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

#include <stdexcept>

#include "httplib.h"
#include "occubias/sparql.h"

namespace occubias {
namespace {

constexpr char kResultsMediaType[] = "application/sparql-results+json";

bool IsRetriableStatus(int status) {
  return status == 429 || (status >= 500 && status <= 599);
}

}  // namespace

SparqlEndpointSource::SparqlEndpointSource(EndpointOptions options,
                                           KbTypeMap types)
    : options_(std::move(options)), types_(std::move(types)) {
  const auto scheme_end = options_.url.find("://");
  if (scheme_end == std::string::npos) {
    throw std::invalid_argument("endpoint URL needs a scheme: " + options_.url);
  }
  const std::string scheme = options_.url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw std::invalid_argument("unsupported endpoint scheme: " + scheme);
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") {
    throw std::invalid_argument("https endpoints need a build with OpenSSL");
  }
#endif
  const auto path_begin = options_.url.find('/', scheme_end + 3);
  scheme_host_port_ = options_.url.substr(0, path_begin);
  path_ = path_begin == std::string::npos ? "/" : options_.url.substr(path_begin);
  if (options_.retries < 0) options_.retries = 0;
}

std::string SparqlEndpointSource::Post(const std::string &sparql) const {
  httplib::Client client(scheme_host_port_);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_write_timeout(options_.timeout);
  const httplib::Headers headers = {{"Accept", kResultsMediaType}};
  const httplib::Params params = {{"query", sparql}};

  std::string last_error;
  int last_status = 0;
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    auto result = client.Post(path_, headers, params);
    if (!result) {
      last_status = 0;
      last_error = httplib::to_string(result.error());
      continue;
    }
    if (result->status >= 200 && result->status < 300) return result->body;
    last_status = result->status;
    if (!IsRetriableStatus(result->status)) break;
  }
  if (last_status != 0) {
    throw EvidenceError(EvidenceError::Kind::kHttpStatus,
                        "SPARQL endpoint returned HTTP " +
                            std::to_string(last_status),
                        last_status);
  }
  // Connection failures and timeouts both mean the endpoint did not answer.
  throw EvidenceError(EvidenceError::Kind::kTimeout,
                      "SPARQL endpoint " + options_.url +
                          " did not answer: " + last_error);
}

std::vector<EvidenceRecord> SparqlEndpointSource::Fetch(
    const EvidenceQuery &query) {
  const std::string sparql = BuildQuery(query, types_);
  ParsedResults parsed = ParseSparqlResults(Post(sparql), query);
  dropped_ += parsed.dropped;
  return std::move(parsed.records);
}

}  // namespace occubias
