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

#include "occubias/model.h"

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

namespace occubias {
namespace {

TEST(SpanTest, AdjacentSpansDoNotOverlap) {
  EXPECT_FALSE(SpanOverlaps({0, 5}, {5, 9}));
  EXPECT_FALSE(SpanOverlaps({5, 9}, {0, 5}));
}

TEST(SpanTest, SharedBytesOverlap) {
  EXPECT_TRUE(SpanOverlaps({0, 5}, {3, 9}));
  EXPECT_TRUE(SpanOverlaps({3, 9}, {0, 5}));
}

TEST(SpanTest, EmptySpanNeverOverlaps) {
  EXPECT_FALSE(SpanOverlaps({2, 2}, {0, 9}));
  EXPECT_FALSE(SpanOverlaps({0, 9}, {2, 2}));
}

TEST(SpanTest, OverlapMatchesBytewiseDefinition) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pos(0, 20);
  for (int i = 0; i < 2000; ++i) {
    std::size_t a0 = pos(rng), a1 = pos(rng), b0 = pos(rng), b1 = pos(rng);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    bool shared = false;
    for (std::size_t x = a0; x < a1; ++x) shared |= (x >= b0 && x < b1);
    EXPECT_EQ(SpanOverlaps({a0, a1}, {b0, b1}), shared);
    EXPECT_EQ(SpanOverlaps({a0, a1}, {b0, b1}), SpanOverlaps({b0, b1}, {a0, a1}));
  }
}

TEST(SpanTest, ContainsAndSlice) {
  EXPECT_TRUE(SpanContains({0, 10}, {2, 5}));
  EXPECT_TRUE(SpanContains({0, 10}, {0, 10}));
  EXPECT_FALSE(SpanContains({2, 5}, {0, 10}));
  EXPECT_EQ(Slice("John is a doctor.", {10, 16}), "doctor");
  EXPECT_THROW(Slice("abc", {1, 4}), std::out_of_range);
}

TEST(GenderTest, OppositeIsAnInvolution) {
  for (Gender g : {Gender::kFemale, Gender::kMale}) {
    EXPECT_NE(Opposite(g), g);
    EXPECT_EQ(Opposite(Opposite(g)), g);
  }
}

TEST(GenderTest, NamesRoundTrip) {
  EXPECT_EQ(GenderName(Gender::kFemale), "female");
  EXPECT_EQ(GenderName(Gender::kMale), "male");
  EXPECT_EQ(ParseGender("female"), Gender::kFemale);
  EXPECT_EQ(ParseGender("m"), Gender::kMale);
  EXPECT_EQ(ParseGender("other"), std::nullopt);
}

TEST(GenderResolutionTest, OnlyResolvedCarriesAGender) {
  EXPECT_EQ(GenderResolution::Resolved(Gender::kMale).gender(), Gender::kMale);
  EXPECT_EQ(GenderResolution::Ambiguous().gender(), std::nullopt);
  EXPECT_EQ(GenderResolution::Unknown().gender(), std::nullopt);
  EXPECT_EQ(GenderResolution::Ambiguous().name(), "ambiguous");
  EXPECT_EQ(GenderResolution::Resolved(Gender::kFemale).name(), "female");
}

TEST(OccupationClassTest, ParseAndName) {
  EXPECT_TRUE(OccupationClass::Parse("neutral")->is_neutral());
  EXPECT_EQ(OccupationClass::Parse("female")->specific_gender(), Gender::kFemale);
  EXPECT_EQ(OccupationClass::Specific(Gender::kMale).name(), "male");
  EXPECT_FALSE(OccupationClass::Parse("both").has_value());
}

TEST(QueryContextTest, RejectsReversedYearsAndEmptyCountry) {
  EXPECT_THROW(QueryContext(2000, 1980, "United States"), std::invalid_argument);
  EXPECT_THROW(QueryContext(1980, 2000, ""), std::invalid_argument);
  EXPECT_NO_THROW(QueryContext(1990, 1990, "Russia"));
}

TEST(VerdictStatusTest, Names) {
  EXPECT_EQ(VerdictStatusName(VerdictStatus::kPossiblyBiased), "possibly_biased");
  EXPECT_EQ(VerdictStatusName(VerdictStatus::kFreeOfBias), "free_of_bias");
  EXPECT_EQ(VerdictStatusName(VerdictStatus::kNotApplicableGenderSpecific),
            "not_applicable_gender_specific");
  EXPECT_EQ(VerdictStatusName(VerdictStatus::kEvidenceUnavailable),
            "evidence_unavailable");
}

}  // namespace
}  // namespace occubias
