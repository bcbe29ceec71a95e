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

#include "paradise/kappa.h"

#include "paradise/error.h"

namespace paradise {

bool ScopeFilter::selects(const Dialogue &d) const {
  auto admits = [](const std::set<std::string> &ids, const std::string &id) {
    return ids.empty() || ids.contains(id);
  };
  return admits(agents, d.agent_id) && admits(users, d.user_id) &&
         admits(scenarios, d.scenario_id) && admits(dialogues, d.dialogue_id);
}

bool ScopeFilter::selects_attribute(const std::string &name) const {
  return !attributes || attributes->contains(name);
}

ScopeFilter ScopeFilter::for_segment(const Segment &segment) {
  ScopeFilter f;
  f.dialogues.insert(segment.dialogue_id);
  f.attributes = segment.attribute_set;
  return f;
}

ConfusionMatrix::ConfusionMatrix(const AvmSchema &schema) {
  for (std::size_t a = 0; a < schema.size(); ++a) {
    const auto &def = schema.at(a);
    blocks_.push_back({def.name, def.abbreviation, schema.block_begin(a),
                       schema.block_end(a)});
  }
  for (std::size_t l = 0; l < schema.label_count(); ++l) {
    labels_.push_back(schema.label_name(l));
  }
  row_labels_ = labels_;
  for (const auto &def : schema.attributes()) {
    const auto &prefix = def.abbreviation.empty() ? def.name : def.abbreviation;
    row_labels_.push_back(prefix + ":" + std::string(kUnresolvedValue));
  }
  scope_.assign(labels_.size(), true);
  counts_.assign(row_labels_.size() * labels_.size(), 0);
}

const AttributeBlock &ConfusionMatrix::block(const std::string &attribute) const {
  for (const auto &b : blocks_) {
    if (b.attribute == attribute || b.abbreviation == attribute) return b;
  }
  throw UsageError("unknown attribute '" + attribute + "'");
}

void ConfusionMatrix::add(std::size_t row, std::size_t col, std::int64_t n) {
  if (row >= row_count() || col >= label_count()) {
    throw UsageError("confusion matrix cell out of range");
  }
  if (n < 0) throw UsageError("confusion matrix counts are non-negative");
  counts_[row * labels_.size() + col] += n;
}

void ConfusionMatrix::set_scope(const std::vector<bool> &scope) {
  if (scope.size() != labels_.size()) {
    throw UsageError("column scope has the wrong width");
  }
  scope_ = scope;
}

std::int64_t ConfusionMatrix::column_sum(std::size_t col) const {
  std::int64_t sum = 0;
  for (std::size_t r = 0; r < row_count(); ++r) sum += count(r, col);
  return sum;
}

std::int64_t ConfusionMatrix::row_sum(std::size_t row) const {
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < label_count(); ++c) {
    if (scope_[c]) sum += count(row, c);
  }
  return sum;
}

std::int64_t ConfusionMatrix::total() const {
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < label_count(); ++c) {
    if (scope_[c]) sum += column_sum(c);
  }
  return sum;
}

std::int64_t ConfusionMatrix::diagonal() const {
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < label_count(); ++c) {
    if (scope_[c]) sum += count(c, c);
  }
  return sum;
}

ConfusionMatrix &ConfusionMatrix::operator+=(const ConfusionMatrix &other) {
  if (labels_ != other.labels_ || row_labels_ != other.row_labels_) {
    throw UsageError("cannot add confusion matrices over different labels");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  for (std::size_t c = 0; c < scope_.size(); ++c) {
    scope_[c] = scope_[c] || other.scope_[c];
  }
  return *this;
}

ConfusionMatrix build_confusion(const Corpus &corpus, const ScopeFilter &scope) {
  const auto &schema = corpus.schema;
  ConfusionMatrix m(schema);
  if (scope.attributes) {
    std::vector<bool> columns(schema.label_count(), false);
    for (const auto &name : *scope.attributes) {
      const auto a = schema.index_of(name);
      for (auto c = schema.block_begin(a); c < schema.block_end(a); ++c) {
        columns[c] = true;
      }
    }
    m.set_scope(columns);
  }
  for (const auto &d : corpus.dialogues) {
    if (!scope.selects(d)) continue;
    for (const auto &match : compare_to_key(schema, d, corpus.key_for(d))) {
      if (!scope.selects_attribute(match.attribute)) continue;
      const std::size_t row =
          match.observed.is_value()
              ? match.observed.label
              : m.unresolved_row(schema.index_of(match.attribute));
      m.add(row, match.key_label);
    }
  }
  return m;
}

double p_agreement(const ConfusionMatrix &m) {
  const auto t = m.total();
  if (t == 0) throw UndefinedMeasureError("P(A) is undefined: T = 0");
  return static_cast<double>(m.diagonal()) / static_cast<double>(t);
}

namespace {

// Sum of squared scoped column totals, kept in integers so that P(E) and
// kappa are single roundings of exact ratios.
std::int64_t column_square_sum(const ConfusionMatrix &m) {
  std::int64_t s = 0;
  for (std::size_t c = 0; c < m.label_count(); ++c) {
    if (!m.in_scope(c)) continue;
    const auto t = m.column_sum(c);
    s += t * t;
  }
  return s;
}

}  // namespace

double p_chance(const ConfusionMatrix &m) {
  const auto t = m.total();
  if (t == 0) throw UndefinedMeasureError("P(E) is undefined: T = 0");
  const double total = static_cast<double>(t);
  return static_cast<double>(column_square_sum(m)) / (total * total);
}

namespace {

bool single_key_column(const ConfusionMatrix &m) {
  int nonzero = 0;
  for (std::size_t c = 0; c < m.label_count(); ++c) {
    if (m.in_scope(c) && m.column_sum(c) > 0) ++nonzero;
  }
  return nonzero == 1;
}

}  // namespace

KappaResult kappa(const ConfusionMatrix &m) {
  KappaResult r;
  r.t_total = m.total();
  r.p_a = p_agreement(m);
  r.p_e = p_chance(m);
  if (single_key_column(m)) {
    throw DegenerateChanceError(
        "kappa is undefined: every key observation has the same value (P(E) = 1)");
  }
  // (P(A) - P(E)) / (1 - P(E)) with both ratios over T^2.
  const double t = static_cast<double>(r.t_total);
  const double sq = static_cast<double>(column_square_sum(m));
  r.kappa = (t * static_cast<double>(m.diagonal()) - sq) / (t * t - sq);
  return r;
}

ConfusionMatrix restrict_to_attributes(const ConfusionMatrix &m,
                                       const AttributeSet &attributes) {
  std::vector<bool> scope(m.label_count(), false);
  for (const auto &name : attributes) {
    const auto &b = m.block(name);
    for (auto c = b.begin; c < b.end; ++c) scope[c] = true;
  }
  ConfusionMatrix out = m;
  out.set_scope(scope);
  return out;
}

ConfusionMatrix restrict_to_attribute(const ConfusionMatrix &m,
                                      const std::string &attribute) {
  return restrict_to_attributes(m, {attribute});
}

std::vector<std::pair<std::string, KappaResult>> attribute_kappas(
    const ConfusionMatrix &m) {
  std::vector<std::pair<std::string, KappaResult>> out;
  for (const auto &b : m.blocks()) {
    bool scoped = false;
    for (auto c = b.begin; c < b.end; ++c) scoped = scoped || m.in_scope(c);
    if (!scoped) continue;
    const auto sub = restrict_to_attribute(m, b.attribute);
    try {
      out.emplace_back(b.attribute, kappa(sub));
    } catch (const DegenerateChanceError &) {
      throw DegenerateChanceError(
          "kappa for attribute '" + b.attribute + "' is undefined (P(E) = 1)",
          b.attribute);
    } catch (const UndefinedMeasureError &) {
      throw UndefinedMeasureError("kappa for attribute '" + b.attribute +
                                  "' is undefined: T = 0");
    }
  }
  return out;
}

double average_attribute_kappa(const ConfusionMatrix &m) {
  const auto per = attribute_kappas(m);
  if (per.empty()) throw UndefinedMeasureError("no attribute in scope");
  double sum = 0.0;
  for (const auto &[name, r] : per) sum += r.kappa;
  return sum / static_cast<double>(per.size());
}

}  // namespace paradise
