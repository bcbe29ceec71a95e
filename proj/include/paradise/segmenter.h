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

#ifndef PARADISE_SEGMENTER_H_
#define PARADISE_SEGMENTER_H_

// Task-defined discourse structure. The attribute tags on a dialogue's
// utterances induce a tree of subdialogues, each about a set of attributes.

#include <cstddef>
#include <string>
#include <vector>

#include "paradise/avm.h"

namespace paradise {

struct Segment {
  std::string segment_id;  // "S1", "S2", ... in preorder
  std::string dialogue_id;
  AttributeSet attribute_set;
  std::size_t begin = 0;  // utterance span [begin, end)
  std::size_t end = 0;
  std::vector<Segment> children;

  std::size_t length() const { return end - begin; }
  bool contains(std::size_t utterance) const {
    return utterance >= begin && utterance < end;
  }
};

// Builds the segment tree for a validated dialogue. The root spans every
// utterance and is about all schema attributes. Inside a segment, a child
// opens at the first utterance whose tags are a strict subset of the
// segment's attributes and extends over following utterances whose tags
// stay within the child's running union. Utterances tagged with exactly the
// segment's attributes belong to the segment itself.
Segment derive_structure(const AvmSchema &schema, const Dialogue &dialogue);

// Every segment in the tree whose attribute set equals `attrs`, in span
// order. Two separated spans about the same attributes are two segments.
std::vector<const Segment *> segments_for_attributes(const Segment &root,
                                                     const AttributeSet &attrs);

// Depth of the tree; a root with no children has depth 1.
std::size_t depth(const Segment &root);

// Visits every segment in preorder.
template <typename Fn>
void for_each_segment(const Segment &root, Fn &&fn) {
  fn(root);
  for (const auto &child : root.children) for_each_segment(child, fn);
}

}  // namespace paradise

#endif  // PARADISE_SEGMENTER_H_
