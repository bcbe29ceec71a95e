// Copyright 2026 The Paradise Authors.
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

#include "paradise/avm.h"

#include <gtest/gtest.h>

#include "paradise/error.h"
#include "test_support.h"

namespace paradise {
namespace {

using testing::load_fixture;
using testing::train_schema;

Corpus one_dialogue_corpus() {
  Corpus c = load_fixture("train_fig2_fig3.json");
  c.dialogues.resize(1);
  return c;
}

TEST(NormalizeLabel, TrimsAndComposes) {
  EXPECT_EQ(normalize_label("  Torino\t"), "Torino");
  // "e" + combining acute accent composes to U+00E9.
  EXPECT_EQ(normalize_label("caf\x65\xcc\x81"), "caf\xc3\xa9");
  EXPECT_EQ(normalize_label(""), "");
}

TEST(AvmSchema, LabelsFollowSchemaOrder) {
  const auto schema = train_schema();
  ASSERT_EQ(schema.label_count(), 14u);
  EXPECT_EQ(schema.label_name(0), "DC:Milano");
  EXPECT_EQ(schema.label_name(4), "AC:Milano");
  EXPECT_EQ(schema.label_name(9), "DR:evening");
  EXPECT_EQ(schema.label_name(13), "DT:8pm");
  EXPECT_EQ(schema.block_begin(3), 10u);
  EXPECT_EQ(schema.block_end(3), 14u);
  EXPECT_EQ(schema.attribute_of_label(7), 1u);
  EXPECT_EQ(schema.index_of("AC"), 1u);
  EXPECT_EQ(schema.index_of("depart-time"), 3u);
  EXPECT_THROW(schema.index_of("XX"), UsageError);
  EXPECT_EQ(schema.abbreviate({"arrival-city", "depart-city"}), "{DC,AC}");
}

TEST(AvmSchema, ResolvesValues) {
  const auto schema = train_schema();
  const std::size_t ac = 1, dr = 2;
  auto r = schema.resolve(ac, "Milano");
  ASSERT_TRUE(r.is_value());
  EXPECT_EQ(r.label, 4u);

  r = schema.resolve(ac, "DC:Milano");
  ASSERT_TRUE(r.is_value());
  EXPECT_EQ(r.label, 0u);

  r = schema.resolve(ac, "morning");
  ASSERT_TRUE(r.is_value());
  EXPECT_EQ(r.label, 8u);

  // City names appear under two attributes, so a bare city name reported
  // for depart-range cannot be placed.
  EXPECT_EQ(schema.resolve(dr, "Milano").status, ResolvedValue::Status::kAmbiguous);
  EXPECT_EQ(schema.resolve(dr, "Merano").status, ResolvedValue::Status::kUnknown);
  EXPECT_EQ(schema.resolve(dr, std::string(kUnresolvedValue)).status,
            ResolvedValue::Status::kUnresolved);
}

TEST(ValidateCorpus, BundledTrainCorpusIsValid) {
  const auto c = load_fixture("train_fig2_fig3.json");
  const auto report = validate_corpus(c);
  EXPECT_TRUE(report.ok()) << report.to_string();
}

TEST(ValidateCorpus, UnknownTagNamesTheUtterance) {
  auto c = one_dialogue_corpus();
  c.dialogues[0].utterances[5].tags = {"XX"};
  const auto report = validate_corpus(c);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].dialogue_id, "D1");
  ASSERT_TRUE(report.violations[0].utterance.has_value());
  EXPECT_EQ(*report.violations[0].utterance, 5u);
  EXPECT_NE(report.violations[0].message.find("XX"), std::string::npos);
}

TEST(ValidateCorpus, MissingObservedAttribute) {
  auto c = one_dialogue_corpus();
  c.dialogues[0].observed.erase("depart-time");
  const auto report = validate_corpus(c);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_NE(report.violations[0].message.find("depart-time"), std::string::npos);
}

TEST(ValidateCorpus, FlagsBadKeysEventsAndIds) {
  auto c = load_fixture("train_fig2_fig3.json");
  c.keys[0].assignments["depart-range"] = "noon";
  c.dialogues[1].dialogue_id = "D1";
  c.dialogues[0].utterances[7].events[0].targets = {};
  c.dialogues[0].scenario_id = "nowhere";
  const auto report = validate_corpus(c);
  EXPECT_EQ(report.violations.size(), 4u) << report.to_string();
}

TEST(ValidateCorpus, FlagsSchemaProblems) {
  Corpus c;
  c.schema = AvmSchema({{"a", "A", {"x", "y"}, {}}, {"b", "A", {}, {}}});
  const auto report = validate_corpus(c);
  EXPECT_GE(report.violations.size(), 2u);
  EXPECT_THROW(require_valid(c), DataError);
}

TEST(ValidateCorpus, EmptyCorpusIsValid) {
  const auto c = load_fixture("empty.json");
  EXPECT_TRUE(validate_corpus(c).ok());
  EXPECT_TRUE(c.dialogues.empty());
}

TEST(CompareToKey, IdenticalObservationMatchesEverywhere) {
  const auto c = load_fixture("train_fig2_fig3.json");
  const auto mv = compare_to_key(c.schema, c.dialogues[0], c.keys[0]);
  ASSERT_EQ(mv.size(), 4u);
  for (const auto &m : mv) EXPECT_TRUE(m.match) << m.attribute;
}

TEST(CompareToKey, SingleSubstitution) {
  auto c = load_fixture("train_fig2_fig3.json");
  c.dialogues[0].observed["depart-city"] = "Trento";
  const auto mv = compare_to_key(c.schema, c.dialogues[0], c.keys[0]);
  EXPECT_FALSE(mv[0].match);
  EXPECT_EQ(mv[0].key_value, "Torino");
  EXPECT_EQ(mv[0].observed_value, "Trento");
  EXPECT_TRUE(mv[1].match && mv[2].match && mv[3].match);
}

TEST(CompareToKey, CrossAttributeConfusionKeepsForeignValue) {
  auto c = load_fixture("train_fig2_fig3.json");
  c.dialogues[0].observed["arrival-city"] = "morning";
  EXPECT_TRUE(validate_corpus(c).ok());
  const auto mv = compare_to_key(c.schema, c.dialogues[0], c.keys[0]);
  EXPECT_FALSE(mv[1].match);
  EXPECT_EQ(mv[1].observed_value, "morning");
  ASSERT_TRUE(mv[1].observed.is_value());
  EXPECT_EQ(c.schema.attribute_of_label(mv[1].observed.label), 2u);
  EXPECT_TRUE(mv[0].match && mv[2].match && mv[3].match);
}

TEST(CompareToKey, UnresolvedValueNeverMatches) {
  auto c = load_fixture("train_fig2_fig3.json");
  c.dialogues[0].observed["depart-time"] = std::string(kUnresolvedValue);
  EXPECT_TRUE(validate_corpus(c).ok());
  const auto mv = compare_to_key(c.schema, c.dialogues[0], c.keys[0]);
  EXPECT_FALSE(mv[3].match);
  EXPECT_EQ(mv[3].observed.status, ResolvedValue::Status::kUnresolved);
}

TEST(CompareToKey, IgnoresUtteranceContent) {
  auto c = load_fixture("train_fig2_fig3.json");
  const auto before = compare_to_key(c.schema, c.dialogues[0], c.keys[0]);
  c.dialogues[0].utterances.clear();
  const auto after = compare_to_key(c.schema, c.dialogues[0], c.keys[0]);
  ASSERT_EQ(before.size(), after.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    EXPECT_EQ(before[i].match, after[i].match);
  }
}

TEST(CompareToKey, ScenarioMismatchIsUsageError) {
  auto c = load_fixture("train_fig2_fig3.json");
  ScenarioKey other = c.keys[0];
  other.scenario_id = "other";
  EXPECT_THROW(compare_to_key(c.schema, c.dialogues[0], other), UsageError);
}

TEST(MergeCorpora, RejectsConflictingKeysAndDuplicateDialogues) {
  const auto a = load_fixture("train_fig2_fig3.json");
  auto b = a;
  EXPECT_THROW(merge_corpora({a, b}), UsageError);
  b.dialogues.clear();
  b.keys[0].assignments["depart-time"] = "6am";
  EXPECT_THROW(merge_corpora({a, b}), UsageError);
  b.keys[0].scenario_id = "train-2";
  const auto merged = merge_corpora({a, b});
  EXPECT_EQ(merged.keys.size(), 2u);
  EXPECT_EQ(merged.dialogues.size(), 2u);
}

}  // namespace
}  // namespace paradise
