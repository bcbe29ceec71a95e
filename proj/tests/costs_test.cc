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

#include "paradise/costs.h"

#include <gtest/gtest.h>

#include "paradise/error.h"
#include "paradise/fixtures.h"
#include "test_support.h"

namespace paradise {
namespace {

using testing::load_fixture;

class TrainCosts : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_ = load_fixture("train_fig2_fig3.json");
    s1_ = derive_structure(corpus_.schema, d1());
  }
  const Dialogue &d1() const { return corpus_.dialogues[0]; }
  const Dialogue &d2() const { return corpus_.dialogues[1]; }
  const Segment *s4() const {
    return segments_for_attributes(s1_, {"arrival-city"}).front();
  }

  Corpus corpus_;
  Segment s1_;
};

TEST_F(TrainCosts, UtteranceCounts) {
  EXPECT_EQ(efficiency_cost(d1(), WholeDialogue{}), 23.0);
  EXPECT_EQ(efficiency_cost(d2(), WholeDialogue{}), 10.0);
  EXPECT_EQ(efficiency_cost(d1(), s4()), 2.0);
}

TEST_F(TrainCosts, RepairCounts) {
  EXPECT_EQ(qualitative_cost(corpus_.schema, d1(), "repair", WholeDialogue{}), 10.0);
  EXPECT_EQ(qualitative_cost(corpus_.schema, d1(), "repair", s4()), 2.0);
  // U2 is tagged with two attributes and repairs one of them.
  EXPECT_EQ(qualitative_cost(corpus_.schema, d2(), "repair", WholeDialogue{}), 0.5);
}

TEST_F(TrainCosts, AttributeScope) {
  const AttributeScope dc{{"depart-city"}};
  EXPECT_EQ(qualitative_cost(corpus_.schema, d1(), "repair", dc), 8.0);
  EXPECT_EQ(qualitative_cost(corpus_.schema, d2(), "repair", dc), 0.5);
  EXPECT_EQ(qualitative_cost(corpus_.schema, d2(), "repair", AttributeScope{{"depart-range"}}), 0.0);
  // Efficiency counts whole utterances that touch the attribute set.
  EXPECT_EQ(efficiency_cost(d1(), AttributeScope{{"arrival-city"}}), 9.0);
}

TEST_F(TrainCosts, ForeignSegmentIsUsageError) {
  EXPECT_THROW(efficiency_cost(d2(), s4()), UsageError);
  EXPECT_THROW(qualitative_cost(corpus_.schema, d2(), "repair", s4()), UsageError);
}

TEST_F(TrainCosts, UnknownEventKindWarnsAndCostsZero) {
  EXPECT_EQ(qualitative_cost(corpus_.schema, d1(), "inappropriate", WholeDialogue{}), 0.0);
  std::vector<std::string> warnings;
  const auto rows = cost_table(corpus_, {parse_measure("utt"), parse_measure("inappropriate")},
                               &warnings);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].values.at("utt"), 23.0);
  EXPECT_EQ(rows[1].values.at("inappropriate"), 0.0);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("inappropriate"), std::string::npos);
}

TEST_F(TrainCosts, RepeatedEventsOnOneUtteranceAreSummed) {
  Dialogue d = d1();
  d.utterances[15].events.push_back({"repair", {"arrival-city"}});
  EXPECT_EQ(qualitative_cost(corpus_.schema, d, "repair", WholeDialogue{}), 11.0);
}

TEST_F(TrainCosts, AnnotationSums) {
  Dialogue d = d1();
  for (std::size_t i = 0; i < d.utterances.size(); ++i) {
    d.utterances[i].annotations["seconds"] = 0.5 * static_cast<double>(i);
  }
  const Segment root = derive_structure(corpus_.schema, d);
  const auto *seg = segments_for_attributes(root, {"arrival-city"}).front();
  EXPECT_DOUBLE_EQ(annotation_cost(d, "seconds", seg), 0.5 * (15 + 16));
  EXPECT_DOUBLE_EQ(measure_cost(corpus_.schema, d, parse_measure("time=sum:seconds"),
                                WholeDialogue{}),
                   0.5 * 22 * 23 / 2);
}

TEST(ParseMeasure, Forms) {
  EXPECT_EQ(parse_measure("utt"), CostMeasure::utterances("utt"));
  EXPECT_EQ(parse_measure("rep"), CostMeasure::events("rep", "repair"));
  EXPECT_EQ(parse_measure("bad=event:inappropriate"),
            CostMeasure::events("bad", "inappropriate"));
  EXPECT_EQ(parse_measure("t=sum:seconds"), CostMeasure::annotation("t", "seconds"));
  EXPECT_EQ(parse_measure("turns=utterances"), CostMeasure::utterances("turns"));
  EXPECT_THROW(parse_measure("x=bogus"), UsageError);
  EXPECT_THROW(parse_measure("=utterances"), UsageError);
}

TEST(CostProperties, AttributionIsConserved) {
  const auto schema = testing::train_schema();
  RandomCorpusOptions opts;
  opts.dialogues = 50;
  opts.repair_rate = 0.6;
  const auto corpus = random_corpus(schema, opts);
  for (const auto &d : corpus.dialogues) {
    double split = 0.0;
    for (const auto &a : schema.attributes()) {
      split += qualitative_cost(schema, d, "repair", AttributeScope{{a.name}});
    }
    EXPECT_NEAR(split, qualitative_cost(schema, d, "repair", WholeDialogue{}), 1e-12)
        << d.dialogue_id;
  }
}

TEST(CostProperties, RootPartitionsUtterances) {
  const auto schema = testing::train_schema();
  RandomCorpusOptions opts;
  opts.dialogues = 50;
  const auto corpus = random_corpus(schema, opts);
  for (const auto &d : corpus.dialogues) {
    const Segment root = derive_structure(schema, d);
    double children = 0.0, events = 0.0;
    for (const auto &c : root.children) children += efficiency_cost(d, &c);
    std::size_t held = 0;
    for (std::size_t i = 0; i < d.utterances.size(); ++i) {
      bool inside = false;
      for (const auto &c : root.children) inside = inside || c.contains(i);
      held += inside ? 0 : 1;
      events += static_cast<double>(d.utterances[i].events.size());
    }
    EXPECT_EQ(efficiency_cost(d, WholeDialogue{}), children + static_cast<double>(held));
    const double rep = qualitative_cost(schema, d, "repair", WholeDialogue{});
    EXPECT_GE(rep, 0.0);
    EXPECT_LE(rep, events + 1e-12);
  }
}

}  // namespace
}  // namespace paradise
