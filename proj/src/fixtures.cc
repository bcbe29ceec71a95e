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

#include "paradise/fixtures.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "paradise/error.h"

namespace paradise {

namespace {

std::string padded(std::size_t i, std::size_t width) {
  std::string s = std::to_string(i);
  return std::string(s.size() < width ? width - s.size() : 0, '0') + s;
}

std::size_t digits(std::size_t n) { return std::to_string(n).size(); }

std::string value_ref(const AvmSchema &schema, std::size_t attr,
                      std::size_t label) {
  const std::size_t owner = schema.attribute_of_label(label);
  const auto &value =
      schema.at(owner).values[label - schema.block_begin(owner)];
  if (owner == attr) return value;
  const auto &def = schema.at(owner);
  return (def.abbreviation.empty() ? def.name : def.abbreviation) + ":" + value;
}

}  // namespace

Corpus expand_confusion_matrix(const AvmSchema &schema, const ConfusionMatrix &m,
                               const std::string &agent_id,
                               const std::string &id_prefix) {
  if (m.labels() != ConfusionMatrix(schema).labels()) {
    throw UsageError("matrix labels do not match the schema");
  }
  // Per attribute: (data row, key column) pairs in column-major order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(schema.size());
  for (std::size_t a = 0; a < schema.size(); ++a) {
    for (auto c = schema.block_begin(a); c < schema.block_end(a); ++c) {
      for (std::size_t r = 0; r < m.row_count(); ++r) {
        const auto n = m.count(r, c);
        if (n == 0) continue;
        if (r >= m.label_count() && r != m.unresolved_row(a)) {
          throw UsageError("unresolved row '" + m.row_label(r) +
                           "' has counts in another attribute's columns");
        }
        for (std::int64_t k = 0; k < n; ++k) pairs[a].emplace_back(r, c);
      }
    }
  }
  const std::size_t count = pairs.empty() ? 0 : pairs.front().size();
  for (std::size_t a = 0; a < schema.size(); ++a) {
    if (pairs[a].size() != count) {
      throw UsageError("attribute '" + schema.at(a).name + "' has " +
                       std::to_string(pairs[a].size()) + " observations, expected " +
                       std::to_string(count) + " (one per dialogue)");
    }
  }

  Corpus corpus;
  corpus.schema = schema;
  std::map<std::vector<std::size_t>, std::string> scenario_of;
  std::vector<std::vector<std::size_t>> tuples(count);
  for (std::size_t d = 0; d < count; ++d) {
    for (std::size_t a = 0; a < schema.size(); ++a) tuples[d].push_back(pairs[a][d].second);
  }
  std::size_t scenarios = 0;
  for (const auto &t : tuples) scenarios += scenario_of.emplace(t, "").second ? 1 : 0;
  scenario_of.clear();

  const std::size_t width = std::max<std::size_t>(3, digits(count));
  for (std::size_t d = 0; d < count; ++d) {
    auto [it, fresh] = scenario_of.emplace(tuples[d], "");
    if (fresh) {
      it->second = "sc" + padded(corpus.keys.size() + 1, digits(scenarios));
      ScenarioKey key;
      key.scenario_id = it->second;
      for (std::size_t a = 0; a < schema.size(); ++a) {
        key.assignments[schema.at(a).name] = value_ref(schema, a, tuples[d][a]);
      }
      corpus.keys.push_back(std::move(key));
    }
    Dialogue dlg;
    dlg.dialogue_id = id_prefix + "-" + padded(d + 1, width);
    dlg.agent_id = agent_id;
    dlg.user_id = "user-" + dlg.dialogue_id;
    dlg.scenario_id = it->second;
    for (std::size_t a = 0; a < schema.size(); ++a) {
      const auto row = pairs[a][d].first;
      dlg.observed[schema.at(a).name] = row >= m.label_count()
                                            ? std::string(kUnresolvedValue)
                                            : value_ref(schema, a, row);
    }
    corpus.dialogues.push_back(std::move(dlg));
  }
  return corpus;
}

Corpus random_corpus(const AvmSchema &schema, const RandomCorpusOptions &options) {
  if (schema.size() == 0) throw UsageError("schema has no attributes");
  if (options.scenarios == 0 || options.agents == 0) {
    throw UsageError("need at least one scenario and one agent");
  }
  std::mt19937_64 rng(options.seed);
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  std::bernoulli_distribution err(options.error_rate);
  std::bernoulli_distribution repair(options.repair_rate);
  std::bernoulli_distribution coin(0.5);

  Corpus corpus;
  corpus.schema = schema;
  for (std::size_t s = 0; s < options.scenarios; ++s) {
    ScenarioKey key;
    key.scenario_id = "sc" + padded(s + 1, digits(options.scenarios));
    for (const auto &a : schema.attributes()) {
      key.assignments[a.name] = a.values[pick(a.values.size())];
    }
    corpus.keys.push_back(std::move(key));
  }

  const auto all = schema.all_names();
  const std::size_t width = std::max<std::size_t>(3, digits(options.dialogues));
  for (std::size_t d = 0; d < options.dialogues; ++d) {
    Dialogue dlg;
    dlg.dialogue_id = "d" + padded(d + 1, width);
    dlg.agent_id = std::string(1, static_cast<char>('A' + d % options.agents % 26));
    dlg.user_id = "u" + padded(d + 1, width);
    const auto &key = corpus.keys[pick(corpus.keys.size())];
    dlg.scenario_id = key.scenario_id;
    for (std::size_t a = 0; a < schema.size(); ++a) {
      const auto &def = schema.at(a);
      std::string value = key.assignments.at(def.name);
      if (err(rng)) value = def.values[pick(def.values.size())];
      dlg.observed[def.name] = value;
    }

    auto add = [&](Speaker who, AttributeSet tags, std::string text) {
      Utterance u;
      u.index = dlg.utterances.size();
      u.speaker = who;
      u.text = std::move(text);
      u.tags = std::move(tags);
      if (u.tags.size() < all.size() && repair(rng)) {
        u.events.push_back({"repair", u.tags});
      }
      dlg.utterances.push_back(std::move(u));
    };
    add(Speaker::kAgent, all, "greeting");
    std::size_t repairs = 0;
    for (std::size_t a = 0; a < schema.size(); ++a) {
      AttributeSet tags{schema.at(a).name};
      if (a + 1 < schema.size() && coin(rng)) tags.insert(schema.at(a + 1).name);
      const std::size_t turns = 1 + pick(3);
      for (std::size_t t = 0; t < turns; ++t) {
        add(t % 2 == 0 ? Speaker::kAgent : Speaker::kUser, tags,
            "about " + schema.at(a).name);
        repairs += dlg.utterances.back().events.size();
      }
    }
    // Satisfaction falls with repairs and errors, plus noise, on 1..6.
    double mismatches = 0;
    for (const auto &a : schema.attributes()) {
      if (dlg.observed.at(a.name) != key.assignments.at(a.name)) mismatches += 1;
    }
    const double noise = std::uniform_real_distribution<double>(-0.5, 0.5)(rng);
    const double sat = 6.0 - 0.8 * static_cast<double>(repairs) - mismatches + noise;
    dlg.satisfaction = std::round(std::clamp(sat, 1.0, 6.0));
    corpus.dialogues.push_back(std::move(dlg));
  }
  return corpus;
}

}  // namespace paradise
