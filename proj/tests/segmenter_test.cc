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

#include "paradise/segmenter.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "paradise/fixtures.h"
#include "test_support.h"

namespace paradise {
namespace {

using testing::load_fixture;

struct Expected {
  std::string id;
  AttributeSet attrs;
  std::size_t begin, end;
};

void expect_segment(const Segment &s, const Expected &e) {
  EXPECT_EQ(s.segment_id, e.id);
  EXPECT_EQ(s.attribute_set, e.attrs) << e.id;
  EXPECT_EQ(s.begin, e.begin) << e.id;
  EXPECT_EQ(s.end, e.end) << e.id;
}

TEST(DeriveStructure, AgentADialogue) {
  const auto c = load_fixture("train_fig2_fig3.json");
  const auto &d1 = c.dialogues[0];
  const Segment root = derive_structure(c.schema, d1);

  expect_segment(root, {"S1", c.schema.all_names(), 0, 23});
  ASSERT_EQ(root.children.size(), 3u);
  // U1 is utterance 3; U6 is utterance 16.
  const auto &s2 = root.children[0];
  expect_segment(s2, {"S2", {"depart-city", "arrival-city"}, 3, 17});
  EXPECT_EQ(d1.utterances[s2.begin].turn, "U1");
  EXPECT_EQ(d1.utterances[s2.end - 1].turn, "U6");
  ASSERT_EQ(s2.children.size(), 2u);
  expect_segment(s2.children[0], {"S3", {"depart-city"}, 7, 15});
  expect_segment(s2.children[1], {"S4", {"arrival-city"}, 15, 17});
  EXPECT_EQ(d1.utterances[15].turn, "A6");
  expect_segment(root.children[1], {"S5", {"depart-range"}, 17, 22});
  expect_segment(root.children[2], {"S6", {"depart-time"}, 22, 23});
  EXPECT_TRUE(root.children[1].children.empty());
  EXPECT_EQ(depth(root), 3u);
}

TEST(DeriveStructure, UniformTagsGiveSingleSegment) {
  auto c = load_fixture("train_fig2_fig3.json");
  auto d = c.dialogues[0];
  for (auto &u : d.utterances) u.tags = c.schema.all_names();
  const Segment root = derive_structure(c.schema, d);
  EXPECT_TRUE(root.children.empty());
  EXPECT_EQ(depth(root), 1u);
  EXPECT_EQ(root.length(), d.utterances.size());
}

TEST(DeriveStructure, CircuitDialogueIsLinear) {
  const auto c = load_fixture("circuit_fig6.json");
  const Segment root = derive_structure(c.schema, c.dialogues[0]);
  const std::vector<std::string> expected = {"Circuit-ID", "Correct-Circuit-Behavior",
                                             "Current-Circuit-Behavior", "Fault-Type",
                                             "Fault-Correction", "Test"};
  ASSERT_EQ(root.children.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(root.children[i].attribute_set, AttributeSet{expected[i]});
    EXPECT_TRUE(root.children[i].children.empty());
  }
  // The greeting lines (turns 1 and 2) belong to the root only.
  EXPECT_EQ(root.children[0].begin, 3u);
  EXPECT_EQ(c.dialogues[0].utterances[3].turn, "3");
}

TEST(DeriveStructure, RequestDialogueHasNoGreeting) {
  const auto c = load_fixture("request_fig5.json");
  const Segment root = derive_structure(c.schema, c.dialogues[0]);
  ASSERT_EQ(root.children.size(), 4u);
  EXPECT_EQ(root.children[0].attribute_set, (AttributeSet{"depart-city", "arrival-city"}));
  EXPECT_EQ(root.children[1].length(), 6u);  // C1..U4, including the user questions
  EXPECT_EQ(root.children[3].attribute_set, AttributeSet{"request-type"});
}

TEST(DeriveStructure, NonAdjacentSpansStaySeparate) {
  auto c = load_fixture("train_fig2_fig3.json");
  Dialogue d = c.dialogues[0];
  d.utterances.resize(3);
  auto push = [&d](AttributeSet tags) {
    Utterance u;
    u.index = d.utterances.size();
    u.tags = std::move(tags);
    d.utterances.push_back(u);
  };
  push({"depart-range"});
  push({"depart-time"});
  push({"depart-range"});
  const Segment root = derive_structure(c.schema, d);
  EXPECT_EQ(segments_for_attributes(root, {"depart-range"}).size(), 2u);
}

TEST(SegmentsForAttributes, Lookups) {
  const auto c = load_fixture("train_fig2_fig3.json");
  const Segment root = derive_structure(c.schema, c.dialogues[0]);
  auto found = segments_for_attributes(root, {"arrival-city"});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0]->segment_id, "S4");
  EXPECT_EQ(found[0]->length(), 2u);

  found = segments_for_attributes(root, c.schema.all_names());
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], &root);

  EXPECT_TRUE(segments_for_attributes(root, {"depart-city", "depart-range"}).empty());
}

AttributeSet union_of_tags(const Dialogue &d, std::size_t b, std::size_t e) {
  AttributeSet out;
  for (std::size_t i = b; i < e; ++i) out.insert(d.utterances[i].tags.begin(), d.utterances[i].tags.end());
  return out;
}

void check_invariants(const Dialogue &d, const Segment &s, bool is_root) {
  if (!is_root) {
    EXPECT_EQ(s.attribute_set, union_of_tags(d, s.begin, s.end));
  }
  std::size_t cursor = s.begin;
  for (const auto &child : s.children) {
    EXPECT_GE(child.begin, cursor);
    EXPECT_LT(child.begin, child.end);
    EXPECT_LE(child.end, s.end);
    EXPECT_LT(child.attribute_set.size(), s.attribute_set.size());
    EXPECT_TRUE(std::includes(s.attribute_set.begin(), s.attribute_set.end(),
                              child.attribute_set.begin(), child.attribute_set.end()));
    cursor = child.end;
    check_invariants(d, child, false);
  }
  // Utterances held directly carry the full set of the segment.
  for (std::size_t i = s.begin; i < s.end; ++i) {
    const bool in_child = std::any_of(s.children.begin(), s.children.end(),
                                      [i](const Segment &c) { return c.contains(i); });
    if (!in_child && !(is_root && s.children.empty())) {
      EXPECT_FALSE(std::includes(s.attribute_set.begin(), s.attribute_set.end(),
                                 d.utterances[i].tags.begin(), d.utterances[i].tags.end()) &&
                   d.utterances[i].tags.size() < s.attribute_set.size())
          << "utterance " << i << " should have opened a child";
    }
  }
}

TEST(DeriveStructure, InvariantsOnRandomTagging) {
  const auto schema = testing::train_schema();
  const auto names = schema.all_names();
  const std::vector<std::string> attrs(names.begin(), names.end());
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Dialogue d;
    d.dialogue_id = "r";
    const std::size_t n = 1 + rng() % 20;
    for (std::size_t i = 0; i < n; ++i) {
      Utterance u;
      u.index = i;
      while (u.tags.empty()) {
        for (const auto &a : attrs) if (rng() % 3 == 0) u.tags.insert(a);
      }
      d.utterances.push_back(u);
    }
    const Segment root = derive_structure(schema, d);
    check_invariants(d, root, true);

    // Tags drive the structure; text does not.
    Dialogue renamed = d;
    for (auto &u : renamed.utterances) u.text = "changed";
    const Segment again = derive_structure(schema, renamed);
    std::vector<std::string> a, b;
    for_each_segment(root, [&a](const Segment &s) {
      a.push_back(s.segment_id + std::to_string(s.begin) + "-" + std::to_string(s.end));
    });
    for_each_segment(again, [&b](const Segment &s) {
      b.push_back(s.segment_id + std::to_string(s.begin) + "-" + std::to_string(s.end));
    });
    EXPECT_EQ(a, b);
  }
}

}  // namespace
}  // namespace paradise
