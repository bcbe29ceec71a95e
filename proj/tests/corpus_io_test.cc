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

#include "paradise/corpus_io.h"

#include <gtest/gtest.h>

#include "paradise/error.h"
#include "paradise/performance.h"
#include "test_support.h"

namespace paradise {
namespace {

using testing::data_path;
using testing::load_fixture;

const char *kFixtures[] = {"train_fig2_fig3.json", "agent_a_table3.json", "agent_b_table4.json",
                           "request_fig5.json",    "circuit_fig6.json",   "empty.json"};

TEST(CorpusJson, RoundTripIsIdentical) {
  for (const char *name : kFixtures) {
    const Corpus first = load_fixture(name);
    const std::string text = corpus_to_json(first);
    const Corpus second = parse_corpus(text);
    EXPECT_EQ(first, second) << name;
    EXPECT_EQ(corpus_to_json(second), text) << name;
  }
}

TEST(CorpusJson, ReadsTheDocumentedShape) {
  const auto c = load_fixture("train_fig2_fig3.json");
  EXPECT_EQ(c.schema.at(3).flow, InfoFlow::kToUser);
  EXPECT_EQ(c.schema.at(0).abbreviation, "DC");
  ASSERT_EQ(c.dialogues.size(), 2u);
  const auto &u2 = c.dialogues[1].utterances[5];
  EXPECT_EQ(u2.turn, "U2");
  EXPECT_EQ(u2.speaker, Speaker::kUser);
  EXPECT_EQ(u2.tags, (AttributeSet{"depart-city", "depart-range"}));
  ASSERT_EQ(u2.events.size(), 1u);
  EXPECT_EQ(u2.events[0].targets, AttributeSet{"depart-city"});
  EXPECT_EQ(u2.index, 5u);
}

TEST(CorpusJson, AcceptsAbbreviationsInTags) {
  const std::string text = R"({
    "schema": {"attributes": [{"name": "colour", "abbrev": "C", "values": ["red", "blue"]}]},
    "scenarios": [{"id": "s", "key": {"C": "red"}}],
    "dialogues": [{"id": "d", "agent": "a", "user": "u", "scenario": "s",
                   "observed": {"colour": " red "},
                   "utterances": [{"speaker": "agent", "text": "hi", "tags": ["C"],
                                   "annotations": {"seconds": 1.5}}]}]})";
  const auto c = parse_corpus(text);
  EXPECT_EQ(c.keys[0].assignments.at("colour"), "red");
  EXPECT_EQ(c.dialogues[0].utterances[0].tags, AttributeSet{"colour"});
  EXPECT_EQ(c.dialogues[0].observed.at("colour"), "red");
  EXPECT_TRUE(validate_corpus(c).ok());
}

TEST(CorpusJson, RejectsUnknownFields) {
  const std::string base = R"({"schema": {"attributes": [{"name": "a", "values": ["x"]}]}})";
  EXPECT_NO_THROW(parse_corpus(base));
  EXPECT_THROW(parse_corpus(R"({"schema": {"attributes": [{"name": "a", "values": ["x"]}]}, "extra": 1})"),
               DataError);
  EXPECT_THROW(parse_corpus(R"({"schema": {"attributes": [{"name": "a", "values": ["x"], "colour": "red"}]}})"),
               DataError);
  EXPECT_THROW(parse_corpus(R"({"schema": {"attributes": [{"name": "a", "values": ["x"]}]},
      "scenarios": [{"id": "s", "key": {"a": "x"}}],
      "dialogues": [{"id": "d", "agent": "a", "user": "u", "scenario": "s", "observed": {"a": "x"},
                     "utterances": [{"speaker": "user", "text": "t", "tags": ["a"], "mood": "ok"}]}]})"),
               DataError);
}

TEST(CorpusJson, RejectsMalformedInput) {
  EXPECT_THROW(parse_corpus("{"), DataError);
  EXPECT_THROW(parse_corpus("[]"), DataError);
  EXPECT_THROW(parse_corpus(R"({"schema": {"attributes": [{"name": "a", "values": "x"}]}})"), DataError);
  EXPECT_THROW(parse_corpus(R"({"schema": {"attributes": [{"name": "a", "values": ["x"], "flow": "sideways"}]}})"),
               DataError);
  EXPECT_THROW(load_corpus(data_path("does-not-exist.json")), DataError);
}

TEST(UnitsJson, RoundTrip) {
  const std::string text = read_file(data_path("table5_units.json"));
  EXPECT_TRUE(is_units_document(text));
  EXPECT_FALSE(is_units_document(read_file(data_path("empty.json"))));
  const auto units = parse_units(text);
  ASSERT_EQ(units.size(), 16u);
  EXPECT_EQ(units[10].costs.at("rep"), 0.5);
  EXPECT_EQ(units[6].kappa, 0.46);
  EXPECT_EQ(parse_units(units_to_json(units)), units);
  EXPECT_THROW(parse_units(R"({"units": [{"id": "a"}, {"id": "a"}]})"), DataError);
}

TEST(FunctionJson, RoundTripAndValidation) {
  const auto units = parse_units(read_file(data_path("table5_units.json")));
  const auto pf = estimate_function(units, {"utt", "rep"}).function;
  const auto text = function_to_json(pf);
  EXPECT_EQ(parse_function(text), pf);
  EXPECT_THROW(parse_function(R"({"format": "other", "version": 1})"), DataError);
  std::string bad = text;
  bad.replace(bad.find("\"alpha\""), 7, "\"alfa\"");
  EXPECT_THROW(parse_function(bad), DataError);
}

TEST(PoolJson, RoundTrip) {
  const auto pool = parse_pool(read_file(data_path("depart_city_pool.json")));
  EXPECT_EQ(parse_pool(pool_to_json(pool)), pool);
  EXPECT_EQ(pool.cost_norms.at("rep").n, 0u);
  EXPECT_DOUBLE_EQ(pool.cost_norms.at("rep").std, 2.79);
}

TEST(MatrixCsv, RoundTripAndErrors) {
  const auto schema = testing::train_schema();
  const auto m = testing::matrix_from_cells(schema, testing::agent_b_cells());
  const auto csv = matrix_to_csv(m);
  EXPECT_EQ(csv, read_file(data_path("table4.csv")));
  EXPECT_EQ(parse_matrix_csv(schema, csv), m);

  ConfusionMatrix with_unresolved(schema);
  with_unresolved.add(with_unresolved.unresolved_row(2), 8, 3);
  const auto csv2 = matrix_to_csv(with_unresolved);
  EXPECT_NE(csv2.find("DR:" + std::string(kUnresolvedValue)), std::string::npos);
  EXPECT_EQ(parse_matrix_csv(schema, csv2), with_unresolved);

  std::string negative = csv;
  negative.replace(negative.find(",16,"), 4, ",-1,");
  EXPECT_THROW(parse_matrix_csv(schema, negative), DataError);
  EXPECT_THROW(parse_matrix_csv(schema, "data\\key,DC:Milano\n"), DataError);
}

}  // namespace
}  // namespace paradise
