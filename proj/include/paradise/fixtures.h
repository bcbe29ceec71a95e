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

#ifndef PARADISE_FIXTURES_H_
#define PARADISE_FIXTURES_H_

// Corpus synthesis: expanding a confusion matrix into per-dialogue AVMs,
// and seeded random corpora for exercising the pipeline.

#include <cstdint>
#include <string>

#include "paradise/avm.h"
#include "paradise/kappa.h"

namespace paradise {

// Builds one dialogue per observation so that build_confusion() on the
// result reproduces `m` exactly. Every attribute block must hold the same
// number of observations (the dialogue count). Within each block, pairs are
// dealt out in (key column, data row) order, so two matrices with equal
// column sums yield the same scenario sequence and the same scenario ids.
// Dialogues carry AVMs only, no utterances.
Corpus expand_confusion_matrix(const AvmSchema &schema, const ConfusionMatrix &m,
                               const std::string &agent_id,
                               const std::string &id_prefix);

struct RandomCorpusOptions {
  std::size_t dialogues = 20;
  std::size_t scenarios = 4;
  std::size_t agents = 2;
  double error_rate = 0.2;   // chance an observed value differs from the key
  double repair_rate = 0.3;  // chance an utterance carries a repair event
  std::uint64_t seed = 1;
};

// Random keys, observed AVMs, tagged utterances with repair events, and
// satisfaction ratings on a 1-6 scale. Deterministic for a given seed.
Corpus random_corpus(const AvmSchema &schema, const RandomCorpusOptions &options);

}  // namespace paradise

#endif  // PARADISE_FIXTURES_H_
