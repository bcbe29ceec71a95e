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

#ifndef PARADISE_REPORT_H_
#define PARADISE_REPORT_H_

#include <string>
#include <vector>

#include "paradise/avm.h"
#include "paradise/segmenter.h"

namespace paradise {

// Rounds half-up (toward +inf at the midpoint) to three decimals.
// Never prints "-0.000".
std::string round3(double v);

// Shortest text that reads back as the same double.
std::string precise(double v);

class NumberFormat {
 public:
  explicit NumberFormat(bool precise = false) : precise_(precise) {}
  std::string operator()(double v) const {
    return precise_ ? precise(v) : round3(v);
  }

 private:
  bool precise_;
};

// Indented tree, one segment per line:
//   S1 {DC,AC,DR,DT} A1..A9 (23 utterances)
std::string segment_tree_text(const AvmSchema &schema, const Dialogue &dialogue,
                              const Segment &root);

struct SegmentedDialogue {
  const Dialogue *dialogue;
  Segment root;
};

// [{"dialogue": id, "root": {"id", "attributes", "begin", "end",
// "children"}}, ...] with spans half-open over utterance indices.
std::string segment_trees_json(const AvmSchema &schema,
                               const std::vector<SegmentedDialogue> &trees);

}  // namespace paradise

#endif  // PARADISE_REPORT_H_
