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

#include "occubias/bias_engine.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "occubias/analysis.h"
#include "oracles/evidence_oracle.h"
#include "test_support.h"

namespace occubias {
namespace {

Attribution Make(const std::string &name, Gender g, const std::string &lemma,
                 OccupationClass cls) {
  Attribution a;
  a.person = {name, GenderResolution::Resolved(g), {0, name.size()}, 0};
  a.gender = g;
  a.occupation = {lemma, lemma, {name.size() + 6, name.size() + 6 + lemma.size()},
                  0, cls};
  return a;
}

std::unique_ptr<EvidenceProvider> Provider(std::vector<EvidenceRecord> records) {
  return std::make_unique<EvidenceProvider>(
      std::make_unique<FixtureSource>(std::move(records)));
}

TEST(CheckBiasTest, GenderSpecificOccupationIsNotApplicable) {
  auto source = std::make_unique<test::CountingSource>(test::BundledFixture());
  auto *counter = source.get();
  EvidenceProvider provider(std::move(source));
  const auto verdict = CheckBias(
      Make("Jane", Gender::kFemale, "actress",
           OccupationClass::Specific(Gender::kFemale)),
      QueryContext(1900, 2000, "United States"), provider);
  EXPECT_EQ(verdict.status, VerdictStatus::kNotApplicableGenderSpecific);
  EXPECT_TRUE(verdict.evidence.empty());
  EXPECT_TRUE(verdict.highlight_spans.empty());
  EXPECT_EQ(counter->calls(), 0);
}

TEST(CheckBiasTest, FlagsWithSortedEvidenceAndHighlights) {
  auto provider = Provider(test::BundledFixture());
  const auto attr =
      Make("John", Gender::kMale, "doctor", OccupationClass::Neutral());
  const auto verdict =
      CheckBias(attr, QueryContext(1980, 2000, "United States"), *provider);
  EXPECT_EQ(verdict.status, VerdictStatus::kPossiblyBiased);
  EXPECT_EQ(verdict.evidence.size(), 6u);
  EXPECT_EQ(verdict.evidence_total, 6u);
  EXPECT_TRUE(std::is_sorted(
      verdict.evidence.begin(), verdict.evidence.end(),
      [](const auto &a, const auto &b) { return a.birth_year < b.birth_year; }));
  for (const auto &r : verdict.evidence) {
    EXPECT_EQ(r.gender, Gender::kFemale);
    EXPECT_EQ(r.occupation_lemma, "doctor");
  }
  EXPECT_EQ(verdict.highlight_spans,
            (std::vector<Span>{attr.person.span, attr.occupation.span}));
}

TEST(CheckBiasTest, NoEvidenceIsFreeOfBias) {
  auto provider = Provider(test::BundledFixture());
  const auto attr =
      Make("John", Gender::kMale, "doctor", OccupationClass::Neutral());
  for (const QueryContext &ctx : {QueryContext(1700, 1800, "United States"),
                                  QueryContext(1980, 2000, "Russia")}) {
    const auto verdict = CheckBias(attr, ctx, *provider);
    EXPECT_EQ(verdict.status, VerdictStatus::kFreeOfBias);
    EXPECT_TRUE(verdict.evidence.empty());
    EXPECT_TRUE(verdict.highlight_spans.empty());
  }
}

TEST(CheckBiasTest, EvidenceCapLimitsDisplayOnly) {
  auto provider = Provider(test::BundledFixture());
  EngineOptions options;
  options.evidence_cap = 2;
  const auto verdict = CheckBias(
      Make("John", Gender::kMale, "doctor", OccupationClass::Neutral()),
      QueryContext(1980, 2000, "United States"), *provider, options);
  EXPECT_EQ(verdict.status, VerdictStatus::kPossiblyBiased);
  EXPECT_EQ(verdict.evidence.size(), 2u);
  EXPECT_EQ(verdict.evidence_total, 6u);
}

TEST(CheckBiasTest, ThresholdAboveEvidenceCountIsFree) {
  auto provider = Provider(test::BundledFixture());
  EngineOptions options;
  options.evidence_threshold = 7;
  const auto verdict = CheckBias(
      Make("John", Gender::kMale, "doctor", OccupationClass::Neutral()),
      QueryContext(1980, 2000, "United States"), *provider, options);
  EXPECT_EQ(verdict.status, VerdictStatus::kFreeOfBias);
  EXPECT_TRUE(verdict.evidence.empty());
}

TEST(CheckBiasTest, BackendFailureIsNeverFreeOfBias) {
  EvidenceProvider provider(
      std::make_unique<test::FailingSource>(EvidenceError::Kind::kTimeout));
  try {
    CheckBias(Make("John", Gender::kMale, "doctor", OccupationClass::Neutral()),
              QueryContext(1980, 2000, "United States"), provider);
    FAIL();
  } catch (const EvidenceUnavailable &e) {
    EXPECT_EQ(e.cause(), EvidenceError::Kind::kTimeout);
  }
}

TEST(AnalyzeTest, BackendFailureMarksReportPartial) {
  EvidenceProvider provider(
      std::make_unique<test::FailingSource>(EvidenceError::Kind::kHttpStatus));
  const auto report =
      Analyze("John is a doctor. Jane is an actress.",
              QueryContext(1980, 2000, "United States"), test::BundledLexicons(),
              provider);
  ASSERT_EQ(report.verdicts.size(), 2u);
  EXPECT_EQ(report.verdicts[0].status, VerdictStatus::kEvidenceUnavailable);
  EXPECT_TRUE(report.verdicts[0].error.has_value());
  EXPECT_EQ(report.verdicts[1].status,
            VerdictStatus::kNotApplicableGenderSpecific);
  EXPECT_TRUE(report.partial());
  EXPECT_EQ(report.flagged(), 0u);
}

TEST(AnalyzeTest, ReportCarriesInputAndCounts) {
  auto provider = Provider(test::BundledFixture());
  const std::string text = "John is a doctor. Mary met him. Jane is a dancer.";
  const auto report =
      Analyze(text, QueryContext(1980, 2000, "United States"),
              test::BundledLexicons(), *provider);
  EXPECT_EQ(report.input_text, text);
  EXPECT_EQ(report.attributions_total, 2u);
  EXPECT_EQ(report.verdicts.size(), 2u);
  EXPECT_FALSE(report.partial());
  EXPECT_FALSE(report.engine_version.empty());
}

TEST(CheckBiasPropertyTest, FollowsDecisionTable) {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> year(1700, 2020);
  const std::vector<std::string> lemmas = {"doctor", "pilot"};
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<EvidenceRecord> records;
    const int n = static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) {
      const int birth = year(rng);
      records.push_back({"P" + std::to_string(i),
                         rng() % 2 ? Gender::kMale : Gender::kFemale,
                         lemmas[rng() % 2], "City", "United States", birth,
                         rng() % 2 ? std::optional<int>(birth + 60)
                                   : std::nullopt});
    }
    auto provider = Provider(records);
    int a = year(rng), b = year(rng);
    if (a > b) std::swap(a, b);
    const QueryContext ctx(a, b, "United States");
    const Gender g = rng() % 2 ? Gender::kMale : Gender::kFemale;
    const std::string lemma = lemmas[rng() % 2];
    const bool neutral = rng() % 3 != 0;
    EngineOptions options;
    options.evidence_threshold = 1 + rng() % 3;
    options.evidence_cap = 1 + rng() % 5;
    const auto verdict = CheckBias(
        Make("X", g, lemma,
             neutral ? OccupationClass::Neutral() : OccupationClass::Specific(g)),
        ctx, *provider, options);

    const auto expected =
        oracle::CounterEvidence(records, lemma, g, "United States", a, b);
    if (!neutral) {
      ASSERT_EQ(verdict.status, VerdictStatus::kNotApplicableGenderSpecific);
    } else if (expected.size() >= options.evidence_threshold) {
      ASSERT_EQ(verdict.status, VerdictStatus::kPossiblyBiased);
      ASSERT_EQ(verdict.evidence_total, expected.size());
      ASSERT_EQ(verdict.evidence.size(),
                std::min(expected.size(), options.evidence_cap));
    } else {
      ASSERT_EQ(verdict.status, VerdictStatus::kFreeOfBias);
    }
    ASSERT_EQ(verdict.status == VerdictStatus::kPossiblyBiased,
              !verdict.evidence.empty());
    ASSERT_EQ(verdict.status == VerdictStatus::kPossiblyBiased,
              verdict.highlight_spans.size() == 2);
  }
}

}  // namespace
}  // namespace occubias
