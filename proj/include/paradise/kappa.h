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

#ifndef PARADISE_KAPPA_H_
#define PARADISE_KAPPA_H_

// Task success as the Kappa coefficient over AVM confusion matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paradise/avm.h"
#include "paradise/segmenter.h"

namespace paradise {

// Selects (dialogue, attribute) observations. Empty id sets select all.
struct ScopeFilter {
  std::set<std::string> agents;
  std::set<std::string> users;
  std::set<std::string> scenarios;
  std::set<std::string> dialogues;
  std::optional<AttributeSet> attributes;

  bool selects(const Dialogue &dialogue) const;
  bool selects_attribute(const std::string &name) const;

  // One dialogue, restricted to the segment's attributes.
  static ScopeFilter for_segment(const Segment &segment);
};

struct AttributeBlock {
  std::string attribute;
  std::string abbreviation;
  std::size_t begin = 0;  // column range [begin, end)
  std::size_t end = 0;

  bool operator==(const AttributeBlock &) const = default;
};

// Square count matrix over every value label of the schema; rows are the
// data (observed values), columns are the scenario keys. One extra row per
// attribute holds observations whose value was never resolved; those rows
// have no diagonal cell.
//
// A column scope limits which columns enter T, P(A) and P(E); rows are
// never dropped, so cross-attribute confusions still lower agreement.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(const AvmSchema &schema);

  std::size_t label_count() const { return labels_.size(); }
  std::size_t row_count() const { return row_labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &row_label(std::size_t row) const {
    return row_labels_.at(row);
  }
  const std::vector<AttributeBlock> &blocks() const { return blocks_; }
  // Accepts the attribute's name or abbreviation.
  const AttributeBlock &block(const std::string &attribute) const;
  std::size_t unresolved_row(std::size_t attribute_index) const {
    return labels_.size() + attribute_index;
  }

  std::int64_t count(std::size_t row, std::size_t col) const {
    return counts_.at(row * labels_.size() + col);
  }
  void add(std::size_t row, std::size_t col, std::int64_t n = 1);

  bool in_scope(std::size_t col) const { return scope_.at(col); }
  void set_scope(const std::vector<bool> &scope);

  std::int64_t column_sum(std::size_t col) const;
  std::int64_t row_sum(std::size_t row) const;  // over scoped columns
  // T: total count in scoped columns.
  std::int64_t total() const;
  // Diagonal mass over scoped columns.
  std::int64_t diagonal() const;
  std::int64_t off_diagonal() const { return total() - diagonal(); }

  // Cellwise sum; both matrices must share labels. Scopes are OR-ed.
  ConfusionMatrix &operator+=(const ConfusionMatrix &other);

  bool operator==(const ConfusionMatrix &) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> row_labels_;
  std::vector<AttributeBlock> blocks_;
  std::vector<bool> scope_;
  std::vector<std::int64_t> counts_;  // row-major, row_count x label_count
};

// Each selected (dialogue, attribute) pair increments the cell at
// (observed label, key label). Requires a validated corpus. An empty scope
// gives an all-zero matrix, which the ratio functions reject.
ConfusionMatrix build_confusion(const Corpus &corpus,
                                const ScopeFilter &scope = {});

struct KappaResult {
  double p_a = 0.0;
  double p_e = 0.0;
  double kappa = 0.0;
  std::int64_t t_total = 0;
};

double p_agreement(const ConfusionMatrix &m);
double p_chance(const ConfusionMatrix &m);
KappaResult kappa(const ConfusionMatrix &m);

// Narrows the column scope to one attribute's block (all rows kept).
ConfusionMatrix restrict_to_attribute(const ConfusionMatrix &m,
                                      const std::string &attribute);
// Same, for the union of several attribute blocks.
ConfusionMatrix restrict_to_attributes(const ConfusionMatrix &m,
                                       const AttributeSet &attributes);

// κ of each attribute block that lies in the current column scope, in
// schema order.
std::vector<std::pair<std::string, KappaResult>> attribute_kappas(
    const ConfusionMatrix &m);

// Unweighted mean of the per-attribute κ values.
double average_attribute_kappa(const ConfusionMatrix &m);

}  // namespace paradise

#endif  // PARADISE_KAPPA_H_
