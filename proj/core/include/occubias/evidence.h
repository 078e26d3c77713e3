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

// Evidence retrieval: people of a given gender and occupation born in a
// country, filtered to those whose lifetime overlaps the user's timespan.
//
// An EvidenceProvider fronts an EvidenceSource (an offline JSONL fixture or
// a remote SPARQL endpoint, see sparql.h) with a TTL cache and a cap on the
// number of concurrent backend requests.

#ifndef OCCUBIAS_EVIDENCE_H_
#define OCCUBIAS_EVIDENCE_H_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <semaphore>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "occubias/model.h"

namespace occubias {

class EvidenceError : public std::runtime_error {
 public:
  enum class Kind {
    kTimeout,
    kHttpStatus,
    kMalformedResponse,
    kUnmappableOccupation,
    kMalformedFixture,
    kIo,
  };

  EvidenceError(Kind kind, const std::string &message, int detail = 0)
      : std::runtime_error(message), kind_(kind), detail_(detail) {}

  Kind kind() const { return kind_; }
  // HTTP status for kHttpStatus, 1-based line for kMalformedFixture.
  int detail() const { return detail_; }

 private:
  Kind kind_;
  int detail_;
};

struct EvidenceQuery {
  std::string occupation_lemma;
  Gender gender = Gender::kFemale;
  std::string country;

  // Throws std::invalid_argument on an empty lemma or country.
  void Validate() const;

  friend auto operator<=>(const EvidenceQuery &,
                          const EvidenceQuery &) = default;
};

// Country name canonicalization ("US" -> "United States"). File format:
// `<alias>,<canonical>` per line, '#' comments.
class CountryAliases {
 public:
  void Add(std::string_view alias, std::string_view canonical);

  // Canonical name for `name` (case-insensitive); unknown names are returned
  // trimmed but otherwise unchanged.
  std::string Canonicalize(std::string_view name) const;

  std::size_t size() const { return aliases_.size(); }

 private:
  std::unordered_map<std::string, std::string> aliases_;
};

CountryAliases LoadCountryAliases(std::istream &source);
CountryAliases LoadCountryAliasesFile(const std::filesystem::path &path);

// A backend that answers evidence queries. Implementations must be safe to
// call concurrently.
class EvidenceSource {
 public:
  virtual ~EvidenceSource() = default;

  // Candidates for (occupation, gender, country), not yet filtered by time.
  // Throws EvidenceError on backend failure.
  virtual std::vector<EvidenceRecord> Fetch(const EvidenceQuery &query) = 0;

  // "fixture" or "remote".
  virtual std::string_view mode() const = 0;

  // Records dropped because their dates could not be parsed.
  virtual std::size_t dropped_records() const { return 0; }
};

// Reads fixture JSONL: one object per line with exactly the fields name,
// gender, occupation, birth_city, country, birth_year, death_year (nullable).
// Countries are canonicalized through `aliases` when given.
std::vector<EvidenceRecord> LoadFixture(std::istream &source,
                                        const CountryAliases *aliases = nullptr);
void WriteFixture(std::ostream &out, const std::vector<EvidenceRecord> &records);

// Offline backend over an in-memory record list; never touches the network.
class FixtureSource : public EvidenceSource {
 public:
  explicit FixtureSource(std::vector<EvidenceRecord> records)
      : records_(std::move(records)) {}

  static std::unique_ptr<FixtureSource> FromFile(
      const std::filesystem::path &path,
      const CountryAliases *aliases = nullptr);

  std::vector<EvidenceRecord> Fetch(const EvidenceQuery &query) override;
  std::string_view mode() const override { return "fixture"; }

  const std::vector<EvidenceRecord> &records() const { return records_; }

 private:
  std::vector<EvidenceRecord> records_;
};

struct ProviderOptions {
  std::chrono::seconds cache_ttl{3600};
  std::size_t cache_capacity = 1024;
  // Concurrent backend fetches; further callers wait.
  std::size_t max_in_flight = 4;
};

class EvidenceProvider {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  explicit EvidenceProvider(std::unique_ptr<EvidenceSource> source,
                            ProviderOptions options = {},
                            Clock clock = std::chrono::steady_clock::now);

  EvidenceProvider(const EvidenceProvider &) = delete;
  EvidenceProvider &operator=(const EvidenceProvider &) = delete;

  // Cached fetch. Failures are not cached.
  std::vector<EvidenceRecord> FetchCandidates(const EvidenceQuery &query);

  std::string_view backend_mode() const { return source_->mode(); }
  const EvidenceSource &source() const { return *source_; }

  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t cached_queries = 0;
    std::size_t dropped_records = 0;
  };
  Stats stats() const;

  void ClearCache();

 private:
  struct CacheEntry {
    std::vector<EvidenceRecord> records;
    std::chrono::steady_clock::time_point fetched_at;
  };

  std::unique_ptr<EvidenceSource> source_;
  ProviderOptions options_;
  Clock clock_;
  std::counting_semaphore<> in_flight_;

  mutable std::shared_mutex mu_;
  std::map<EvidenceQuery, CacheEntry> cache_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

// Thin wrapper over EvidenceProvider::FetchCandidates.
std::vector<EvidenceRecord> FetchCandidates(EvidenceProvider &provider,
                                            const EvidenceQuery &query);

// Keeps records whose [birth, death] lifetime (open-ended when death is
// unknown) intersects the closed interval [year_start, year_end]. Order is
// preserved.
std::vector<EvidenceRecord> FilterByTimeframe(
    const std::vector<EvidenceRecord> &records, int year_start, int year_end);

bool LifetimeOverlaps(const EvidenceRecord &record, int year_start,
                      int year_end);

// People of the opposite gender to `subject_gender` with the occupation,
// born in ctx.country, alive at some point in ctx's timespan.
std::vector<EvidenceRecord> CounterEvidence(EvidenceProvider &provider,
                                            std::string_view occupation_lemma,
                                            Gender subject_gender,
                                            const QueryContext &ctx);

}  // namespace occubias

#endif  // OCCUBIAS_EVIDENCE_H_
