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

#ifndef PARADISE_COSTS_H_
#define PARADISE_COSTS_H_

// Dialogue cost measures over whole dialogues and attribute-defined
// subdialogues.

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "paradise/avm.h"
#include "paradise/segmenter.h"

namespace paradise {

struct CostMeasure {
  enum class Kind {
    kUtteranceCount,  // efficiency: utterances in scope
    kEventCount,      // qualitative: events of `parameter` kind, 1/N rule
    kAnnotationSum,   // efficiency: sum of the `parameter` annotation
  };
  std::string name;
  Kind kind = Kind::kUtteranceCount;
  std::string parameter;

  static CostMeasure utterances(std::string name) {
    return {std::move(name), Kind::kUtteranceCount, {}};
  }
  static CostMeasure events(std::string name, std::string event_kind) {
    return {std::move(name), Kind::kEventCount, std::move(event_kind)};
  }
  static CostMeasure annotation(std::string name, std::string key) {
    return {std::move(name), Kind::kAnnotationSum, std::move(key)};
  }

  bool operator==(const CostMeasure &) const = default;
};

// Parses "NAME" or "NAME=KIND" where KIND is "utterances", "event:K" or
// "sum:KEY". A bare name maps to utterances for "utt"/"utterances" and to
// an event count of that kind otherwise ("rep" and "repair" both count
// "repair" events).
CostMeasure parse_measure(const std::string &spec);

struct WholeDialogue {};

// Every utterance of the dialogue, with the attribute set as the scope's
// attributes. An utterance is in scope for efficiency counts when its tags
// meet the set.
struct AttributeScope {
  AttributeSet attributes;
};

using CostScope =
    std::variant<WholeDialogue, const Segment *, AttributeScope>;

double efficiency_cost(const Dialogue &dialogue, const CostScope &scope);

// Sum over events of `event_kind` on in-scope utterances of
// |targets ∩ scope attributes| / |utterance tags|.
double qualitative_cost(const AvmSchema &schema, const Dialogue &dialogue,
                        const std::string &event_kind, const CostScope &scope);

double annotation_cost(const Dialogue &dialogue, const std::string &key,
                       const CostScope &scope);

double measure_cost(const AvmSchema &schema, const Dialogue &dialogue,
                    const CostMeasure &measure, const CostScope &scope);

std::set<std::string> event_kinds(const Corpus &corpus);
std::set<std::string> annotation_keys(const Corpus &corpus);

struct CostRow {
  std::string dialogue_id;
  std::map<std::string, double> values;  // measure name -> cost
};

// Whole-dialogue costs for every dialogue in corpus order. Measures naming
// an event kind or annotation that never occurs in the corpus cost 0 and
// add a warning.
std::vector<CostRow> cost_table(const Corpus &corpus,
                                const std::vector<CostMeasure> &measures,
                                std::vector<std::string> *warnings = nullptr);

}  // namespace paradise

#endif  // PARADISE_COSTS_H_
