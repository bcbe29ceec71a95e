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

#include "paradise/costs.h"

#include <algorithm>

#include "paradise/error.h"

namespace paradise {

CostMeasure parse_measure(const std::string &spec) {
  const auto eq = spec.find('=');
  const std::string name = normalize_label(spec.substr(0, eq));
  if (name.empty()) throw UsageError("empty measure name in '" + spec + "'");
  if (eq == std::string::npos) {
    if (name == "utt" || name == "utterances") {
      return CostMeasure::utterances(name);
    }
    if (name == "rep" || name == "repair") {
      return CostMeasure::events(name, "repair");
    }
    return CostMeasure::events(name, name);
  }
  const std::string kind = normalize_label(spec.substr(eq + 1));
  if (kind == "utterances") return CostMeasure::utterances(name);
  if (kind.starts_with("event:") && kind.size() > 6) {
    return CostMeasure::events(name, kind.substr(6));
  }
  if (kind.starts_with("sum:") && kind.size() > 4) {
    return CostMeasure::annotation(name, kind.substr(4));
  }
  throw UsageError("unknown measure kind '" + kind +
                   "' (expected utterances, event:K or sum:KEY)");
}

namespace {

struct ResolvedScope {
  std::size_t begin = 0;
  std::size_t end = 0;
  AttributeSet attributes;
  bool whole = false;
  bool by_intersection = false;
};

ResolvedScope resolve_scope(const AvmSchema *schema, const Dialogue &d,
                            const CostScope &scope) {
  ResolvedScope r;
  r.end = d.utterances.size();
  if (std::holds_alternative<WholeDialogue>(scope)) {
    r.whole = true;
    if (schema) r.attributes = schema->all_names();
  } else if (const auto *seg = std::get_if<const Segment *>(&scope)) {
    if (*seg == nullptr) throw UsageError("null segment scope");
    if ((*seg)->dialogue_id != d.dialogue_id || (*seg)->end > r.end) {
      throw UsageError("segment " + (*seg)->segment_id + " belongs to dialogue '" +
                       (*seg)->dialogue_id + "', not '" + d.dialogue_id + "'");
    }
    r.begin = (*seg)->begin;
    r.end = (*seg)->end;
    r.attributes = (*seg)->attribute_set;
  } else {
    r.attributes = std::get<AttributeScope>(scope).attributes;
    r.by_intersection = true;
  }
  return r;
}

bool meets(const AttributeSet &a, const AttributeSet &b) {
  return std::any_of(a.begin(), a.end(),
                     [&b](const std::string &x) { return b.contains(x); });
}

bool in_scope(const ResolvedScope &r, const Utterance &u) {
  return !r.by_intersection || meets(u.tags, r.attributes);
}

}  // namespace

double efficiency_cost(const Dialogue &dialogue, const CostScope &scope) {
  const auto r = resolve_scope(nullptr, dialogue, scope);
  double count = 0.0;
  for (auto i = r.begin; i < r.end; ++i) {
    if (in_scope(r, dialogue.utterances[i])) count += 1.0;
  }
  return count;
}

double qualitative_cost(const AvmSchema &schema, const Dialogue &dialogue,
                        const std::string &event_kind, const CostScope &scope) {
  const auto r = resolve_scope(&schema, dialogue, scope);
  double cost = 0.0;
  for (auto i = r.begin; i < r.end; ++i) {
    const auto &u = dialogue.utterances[i];
    if (u.tags.empty()) continue;
    const double n = static_cast<double>(u.tags.size());
    for (const auto &e : u.events) {
      if (e.kind != event_kind) continue;
      double shared = 0.0;
      for (const auto &t : e.targets) {
        if (r.attributes.contains(t)) shared += 1.0;
      }
      cost += shared / n;
    }
  }
  return cost;
}

double annotation_cost(const Dialogue &dialogue, const std::string &key,
                       const CostScope &scope) {
  const auto r = resolve_scope(nullptr, dialogue, scope);
  double sum = 0.0;
  for (auto i = r.begin; i < r.end; ++i) {
    const auto &u = dialogue.utterances[i];
    if (!in_scope(r, u)) continue;
    if (auto it = u.annotations.find(key); it != u.annotations.end()) {
      sum += it->second;
    }
  }
  return sum;
}

double measure_cost(const AvmSchema &schema, const Dialogue &dialogue,
                    const CostMeasure &measure, const CostScope &scope) {
  switch (measure.kind) {
    case CostMeasure::Kind::kUtteranceCount:
      return efficiency_cost(dialogue, scope);
    case CostMeasure::Kind::kEventCount:
      return qualitative_cost(schema, dialogue, measure.parameter, scope);
    case CostMeasure::Kind::kAnnotationSum:
      return annotation_cost(dialogue, measure.parameter, scope);
  }
  return 0.0;
}

std::set<std::string> event_kinds(const Corpus &corpus) {
  std::set<std::string> kinds;
  for (const auto &d : corpus.dialogues) {
    for (const auto &u : d.utterances) {
      for (const auto &e : u.events) kinds.insert(e.kind);
    }
  }
  return kinds;
}

std::set<std::string> annotation_keys(const Corpus &corpus) {
  std::set<std::string> keys;
  for (const auto &d : corpus.dialogues) {
    for (const auto &u : d.utterances) {
      for (const auto &[k, v] : u.annotations) keys.insert(k);
    }
  }
  return keys;
}

std::vector<CostRow> cost_table(const Corpus &corpus,
                                const std::vector<CostMeasure> &measures,
                                std::vector<std::string> *warnings) {
  std::set<std::string> names;
  for (const auto &m : measures) {
    if (!names.insert(m.name).second) {
      throw UsageError("measure '" + m.name + "' given twice");
    }
  }
  if (warnings) {
    const auto kinds = event_kinds(corpus);
    const auto keys = annotation_keys(corpus);
    for (const auto &m : measures) {
      if (m.kind == CostMeasure::Kind::kEventCount &&
          !kinds.contains(m.parameter)) {
        warnings->push_back("measure '" + m.name + "': no '" + m.parameter +
                            "' events in the corpus; cost is 0");
      } else if (m.kind == CostMeasure::Kind::kAnnotationSum &&
                 !keys.contains(m.parameter)) {
        warnings->push_back("measure '" + m.name + "': no '" + m.parameter +
                            "' annotations in the corpus; cost is 0");
      }
    }
  }
  std::vector<CostRow> rows;
  rows.reserve(corpus.dialogues.size());
  for (const auto &d : corpus.dialogues) {
    CostRow row{d.dialogue_id, {}};
    for (const auto &m : measures) {
      row.values[m.name] = measure_cost(corpus.schema, d, m, WholeDialogue{});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace paradise
