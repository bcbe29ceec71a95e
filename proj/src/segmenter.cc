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

#include <algorithm>

namespace paradise {

namespace {

bool is_subset(const AttributeSet &a, const AttributeSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_strict_subset(const AttributeSet &a, const AttributeSet &b) {
  return a.size() < b.size() && is_subset(a, b);
}

class Builder {
 public:
  explicit Builder(const Dialogue &dialogue) : dialogue_(dialogue) {}

  Segment make(AttributeSet attrs, std::size_t begin, std::size_t end) {
    Segment seg;
    seg.segment_id = "S" + std::to_string(++next_id_);
    seg.dialogue_id = dialogue_.dialogue_id;
    seg.attribute_set = std::move(attrs);
    seg.begin = begin;
    seg.end = end;
    split(seg);
    return seg;
  }

 private:
  const AttributeSet &tags(std::size_t i) const {
    return dialogue_.utterances[i].tags;
  }

  void split(Segment &parent) {
    std::size_t i = parent.begin;
    while (i < parent.end) {
      if (!is_strict_subset(tags(i), parent.attribute_set)) {
        ++i;  // held by the parent itself
        continue;
      }
      AttributeSet running = tags(i);
      std::size_t j = i + 1;
      while (j < parent.end && is_subset(tags(j), running)) {
        running.insert(tags(j).begin(), tags(j).end());
        ++j;
      }
      parent.children.push_back(make(std::move(running), i, j));
      i = j;
    }
  }

  const Dialogue &dialogue_;
  int next_id_ = 0;
};

void collect(const Segment &seg, const AttributeSet &attrs,
             std::vector<const Segment *> &out) {
  if (seg.attribute_set == attrs) out.push_back(&seg);
  for (const auto &child : seg.children) collect(child, attrs, out);
}

}  // namespace

Segment derive_structure(const AvmSchema &schema, const Dialogue &dialogue) {
  return Builder(dialogue).make(schema.all_names(), 0,
                                dialogue.utterances.size());
}

std::vector<const Segment *> segments_for_attributes(
    const Segment &root, const AttributeSet &attrs) {
  std::vector<const Segment *> out;
  collect(root, attrs, out);
  // Preorder already yields span order: siblings are ordered and a parent
  // starts no later than its children.
  return out;
}

std::size_t depth(const Segment &root) {
  std::size_t d = 0;
  for (const auto &child : root.children) d = std::max(d, depth(child));
  return d + 1;
}

}  // namespace paradise
