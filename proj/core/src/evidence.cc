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

#include "occubias/evidence.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "occubias/lexicon.h"

namespace occubias {
namespace {

using json = nlohmann::json;

std::string Trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

[[noreturn]] void FixtureError(std::size_t line_no, const std::string &what) {
  throw EvidenceError(EvidenceError::Kind::kMalformedFixture,
                      "fixture line " + std::to_string(line_no) + ": " + what,
                      static_cast<int>(line_no));
}

EvidenceRecord ParseFixtureLine(const std::string &line, std::size_t line_no,
                                const CountryAliases *aliases) {
  static const std::vector<std::string> kFields = {
      "name",    "gender",     "occupation", "birth_city",
      "country", "birth_year", "death_year"};
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error &e) {
    FixtureError(line_no, e.what());
  }
  if (!obj.is_object()) FixtureError(line_no, "expected a JSON object");
  if (obj.size() != kFields.size()) {
    FixtureError(line_no, "expected exactly the fields name, gender, "
                          "occupation, birth_city, country, birth_year, "
                          "death_year");
  }
  for (const auto &field : kFields) {
    if (!obj.contains(field)) FixtureError(line_no, "missing field " + field);
  }
  auto require_string = [&](const char *field) {
    const auto &v = obj.at(field);
    if (!v.is_string()) FixtureError(line_no, std::string(field) + " must be a string");
    return v.get<std::string>();
  };
  EvidenceRecord record;
  record.person_name = require_string("name");
  const auto gender = ParseGender(require_string("gender"));
  if (!gender) FixtureError(line_no, "gender must be male or female");
  record.gender = *gender;
  record.occupation_lemma = NormalizePhrase(require_string("occupation"));
  record.birth_city = require_string("birth_city");
  record.country = require_string("country");
  if (aliases != nullptr) record.country = aliases->Canonicalize(record.country);
  const auto &birth = obj.at("birth_year");
  if (!birth.is_number_integer()) FixtureError(line_no, "birth_year must be an integer");
  record.birth_year = birth.get<int>();
  const auto &death = obj.at("death_year");
  if (!death.is_null()) {
    if (!death.is_number_integer()) {
      FixtureError(line_no, "death_year must be an integer or null");
    }
    record.death_year = death.get<int>();
    if (*record.death_year < record.birth_year) {
      FixtureError(line_no, "death_year precedes birth_year");
    }
  }
  if (record.person_name.empty() || record.occupation_lemma.empty() ||
      record.country.empty()) {
    FixtureError(line_no, "name, occupation and country must be non-empty");
  }
  return record;
}

}  // namespace

void EvidenceQuery::Validate() const {
  if (occupation_lemma.empty()) {
    throw std::invalid_argument("evidence query needs an occupation");
  }
  if (country.empty()) {
    throw std::invalid_argument("evidence query needs a country");
  }
}

void CountryAliases::Add(std::string_view alias, std::string_view canonical) {
  const std::string target = Trimmed(canonical);
  aliases_[NormalizePhrase(alias)] = target;
  aliases_.emplace(NormalizePhrase(target), target);
}

std::string CountryAliases::Canonicalize(std::string_view name) const {
  auto it = aliases_.find(NormalizePhrase(name));
  if (it != aliases_.end()) return it->second;
  return Trimmed(name);
}

CountryAliases LoadCountryAliases(std::istream &source) {
  CountryAliases aliases;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string trimmed = Trimmed(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto comma = trimmed.find(',');
    if (comma == std::string::npos ||
        trimmed.find(',', comma + 1) != std::string::npos) {
      throw EvidenceError(EvidenceError::Kind::kMalformedFixture,
                          "malformed country alias at line " +
                              std::to_string(line_no),
                          static_cast<int>(line_no));
    }
    const std::string alias = Trimmed(trimmed.substr(0, comma));
    const std::string canonical = Trimmed(trimmed.substr(comma + 1));
    if (alias.empty() || canonical.empty()) {
      throw EvidenceError(EvidenceError::Kind::kMalformedFixture,
                          "empty country alias at line " +
                              std::to_string(line_no),
                          static_cast<int>(line_no));
    }
    aliases.Add(alias, canonical);
  }
  return aliases;
}

CountryAliases LoadCountryAliasesFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw EvidenceError(EvidenceError::Kind::kIo,
                        "cannot open country alias file " + path.string());
  }
  return LoadCountryAliases(in);
}

std::vector<EvidenceRecord> LoadFixture(std::istream &source,
                                        const CountryAliases *aliases) {
  std::vector<EvidenceRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (Trimmed(line).empty()) continue;
    records.push_back(ParseFixtureLine(line, line_no, aliases));
  }
  return records;
}

void WriteFixture(std::ostream &out,
                  const std::vector<EvidenceRecord> &records) {
  for (const auto &r : records) {
    nlohmann::ordered_json obj;
    obj["name"] = r.person_name;
    obj["gender"] = GenderName(r.gender);
    obj["occupation"] = r.occupation_lemma;
    obj["birth_city"] = r.birth_city;
    obj["country"] = r.country;
    obj["birth_year"] = r.birth_year;
    obj["death_year"] = r.death_year ? json(*r.death_year) : json(nullptr);
    out << obj.dump() << '\n';
  }
}

std::unique_ptr<FixtureSource> FixtureSource::FromFile(
    const std::filesystem::path &path, const CountryAliases *aliases) {
  std::ifstream in(path);
  if (!in) {
    throw EvidenceError(EvidenceError::Kind::kIo,
                        "cannot open evidence fixture " + path.string());
  }
  return std::make_unique<FixtureSource>(LoadFixture(in, aliases));
}

std::vector<EvidenceRecord> FixtureSource::Fetch(const EvidenceQuery &query) {
  std::vector<EvidenceRecord> out;
  for (const auto &record : records_) {
    if (record.occupation_lemma == query.occupation_lemma &&
        record.gender == query.gender && record.country == query.country) {
      out.push_back(record);
    }
  }
  return out;
}

EvidenceProvider::EvidenceProvider(std::unique_ptr<EvidenceSource> source,
                                   ProviderOptions options, Clock clock)
    : source_(std::move(source)),
      options_(options),
      clock_(std::move(clock)),
      in_flight_(static_cast<std::ptrdiff_t>(
          std::max<std::size_t>(1, options.max_in_flight))) {
  if (!source_) throw std::invalid_argument("evidence provider needs a source");
}

std::vector<EvidenceRecord> EvidenceProvider::FetchCandidates(
    const EvidenceQuery &query) {
  query.Validate();
  const bool caching = options_.cache_capacity > 0 &&
                       options_.cache_ttl.count() > 0;
  if (caching) {
    std::shared_lock lock(mu_);
    auto it = cache_.find(query);
    if (it != cache_.end() &&
        clock_() - it->second.fetched_at < options_.cache_ttl) {
      ++hits_;
      return it->second.records;
    }
  }
  ++misses_;
  std::vector<EvidenceRecord> records;
  {
    in_flight_.acquire();
    struct Release {
      std::counting_semaphore<> &sem;
      ~Release() { sem.release(); }
    } release{in_flight_};
    records = source_->Fetch(query);
  }
  if (caching) {
    std::unique_lock lock(mu_);
    const auto now = clock_();
    if (cache_.size() >= options_.cache_capacity && !cache_.contains(query)) {
      std::erase_if(cache_, [&](const auto &entry) {
        return now - entry.second.fetched_at >= options_.cache_ttl;
      });
    }
    while (cache_.size() >= options_.cache_capacity && !cache_.contains(query)) {
      auto oldest = std::min_element(
          cache_.begin(), cache_.end(), [](const auto &a, const auto &b) {
            return a.second.fetched_at < b.second.fetched_at;
          });
      cache_.erase(oldest);
    }
    cache_[query] = CacheEntry{records, now};
  }
  return records;
}

EvidenceProvider::Stats EvidenceProvider::stats() const {
  Stats stats;
  stats.hits = hits_;
  stats.misses = misses_;
  stats.dropped_records = source_->dropped_records();
  std::shared_lock lock(mu_);
  stats.cached_queries = cache_.size();
  return stats;
}

void EvidenceProvider::ClearCache() {
  std::unique_lock lock(mu_);
  cache_.clear();
}

std::vector<EvidenceRecord> FetchCandidates(EvidenceProvider &provider,
                                            const EvidenceQuery &query) {
  return provider.FetchCandidates(query);
}

bool LifetimeOverlaps(const EvidenceRecord &record, int year_start,
                      int year_end) {
  return record.birth_year <= year_end &&
         (!record.death_year || *record.death_year >= year_start);
}

std::vector<EvidenceRecord> FilterByTimeframe(
    const std::vector<EvidenceRecord> &records, int year_start, int year_end) {
  if (year_start > year_end) {
    throw std::invalid_argument("year_start must not exceed year_end");
  }
  std::vector<EvidenceRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [&](const EvidenceRecord &r) {
                 return LifetimeOverlaps(r, year_start, year_end);
               });
  return out;
}

std::vector<EvidenceRecord> CounterEvidence(EvidenceProvider &provider,
                                            std::string_view occupation_lemma,
                                            Gender subject_gender,
                                            const QueryContext &ctx) {
  EvidenceQuery query{std::string(occupation_lemma), Opposite(subject_gender),
                      ctx.country()};
  return FilterByTimeframe(provider.FetchCandidates(query), ctx.year_start(),
                           ctx.year_end());
}

}  // namespace occubias
