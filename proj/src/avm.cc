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

#include "paradise/avm.h"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "paradise/error.h"

namespace paradise {

namespace {

std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

}  // namespace

std::string normalize_label(std::string_view text) {
  text = trim(text);
  // ASCII is already in NFC.
  if (is_ascii(text)) return std::string(text);
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) throw DataError("cannot normalize label: invalid text");
  std::string result;
  out.toUTF8String(result);
  return result;
}

AvmSchema::AvmSchema(std::vector<AttributeDef> attributes)
    : attributes_(std::move(attributes)) {
  offsets_.reserve(attributes_.size());
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    offsets_.push_back(label_count_);
    label_count_ += attributes_[i].values.size();
    // First definition wins on duplicates; validate_corpus reports them.
    by_name_.emplace(attributes_[i].name, i);
    if (!attributes_[i].abbreviation.empty()) {
      by_name_.emplace(attributes_[i].abbreviation, i);
    }
  }
}

std::optional<std::size_t> AvmSchema::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t AvmSchema::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw UsageError("unknown attribute '" + std::string(name) + "'");
  return *idx;
}

AttributeSet AvmSchema::all_names() const {
  AttributeSet names;
  for (const auto &a : attributes_) names.insert(a.name);
  return names;
}

std::size_t AvmSchema::attribute_of_label(std::size_t label) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), label);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::string AvmSchema::label_name(std::size_t label) const {
  const std::size_t attr = attribute_of_label(label);
  const auto &def = attributes_[attr];
  const std::string &prefix =
      def.abbreviation.empty() ? def.name : def.abbreviation;
  return prefix + ":" + def.values[label - offsets_[attr]];
}

std::optional<std::size_t> AvmSchema::value_label(
    std::size_t attr, std::string_view value) const {
  const auto &values = attributes_.at(attr).values;
  auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end()) return std::nullopt;
  return offsets_[attr] + static_cast<std::size_t>(it - values.begin());
}

ResolvedValue AvmSchema::resolve(std::size_t attr, std::string_view raw) const {
  using Status = ResolvedValue::Status;
  const std::string value = normalize_label(raw);
  if (value == kUnresolvedValue) return {Status::kUnresolved, 0};
  if (auto own = value_label(attr, value)) return {Status::kValue, *own};

  const auto colon = value.find(':');
  if (colon != std::string::npos) {
    if (auto other = find(std::string_view(value).substr(0, colon))) {
      if (auto label = value_label(*other, value.substr(colon + 1))) {
        return {Status::kValue, *label};
      }
    }
  }

  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (i == attr) continue;
    if (auto label = value_label(i, value)) {
      if (found) return {Status::kAmbiguous, 0};
      found = label;
    }
  }
  if (found) return {Status::kValue, *found};
  return {Status::kUnknown, 0};
}

std::vector<std::string> AvmSchema::in_schema_order(
    const AttributeSet &names) const {
  std::vector<std::string> ordered(names.begin(), names.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [this](const std::string &a, const std::string &b) {
                     auto ia = find(a), ib = find(b);
                     return ia.value_or(size()) < ib.value_or(size());
                   });
  return ordered;
}

std::string AvmSchema::abbreviate(const AttributeSet &names) const {
  std::string out = "{";
  bool first = true;
  for (const auto &name : in_schema_order(names)) {
    if (!first) out += ",";
    first = false;
    auto idx = find(name);
    if (idx && !attributes_[*idx].abbreviation.empty()) {
      out += attributes_[*idx].abbreviation;
    } else {
      out += name;
    }
  }
  return out + "}";
}

const ScenarioKey *Corpus::find_key(std::string_view scenario_id) const {
  for (const auto &key : keys) {
    if (key.scenario_id == scenario_id) return &key;
  }
  return nullptr;
}

const ScenarioKey &Corpus::key_for(const Dialogue &dialogue) const {
  const ScenarioKey *key = find_key(dialogue.scenario_id);
  if (key == nullptr) {
    throw UsageError("dialogue '" + dialogue.dialogue_id +
                     "' references unknown scenario '" +
                     dialogue.scenario_id + "'");
  }
  return *key;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto &v : violations) {
    if (!v.dialogue_id.empty()) {
      out << "dialogue " << v.dialogue_id;
      if (v.utterance) out << " utterance " << *v.utterance;
      out << ": ";
    }
    out << v.message << "\n";
  }
  return out.str();
}

namespace {

class Validator {
 public:
  explicit Validator(const Corpus &corpus) : corpus_(corpus) {}

  ValidationReport run() {
    check_schema();
    check_keys();
    std::unordered_set<std::string> ids;
    for (const auto &d : corpus_.dialogues) {
      if (!ids.insert(d.dialogue_id).second) {
        add(d.dialogue_id, std::nullopt, "duplicate dialogue id");
      }
      check_dialogue(d);
    }
    return std::move(report_);
  }

 private:
  void add(const std::string &dialogue, std::optional<std::size_t> utt,
           std::string message) {
    report_.violations.push_back({dialogue, utt, std::move(message)});
  }

  void check_schema() {
    const auto &schema = corpus_.schema;
    if (schema.size() == 0) add({}, std::nullopt, "schema has no attributes");
    std::unordered_set<std::string> identifiers;
    for (const auto &a : schema.attributes()) {
      if (a.name.empty()) add({}, std::nullopt, "attribute with empty name");
      if (!identifiers.insert(a.name).second) {
        add({}, std::nullopt, "duplicate attribute identifier '" + a.name + "'");
      }
      if (!a.abbreviation.empty() && a.abbreviation != a.name &&
          !identifiers.insert(a.abbreviation).second) {
        add({}, std::nullopt,
            "duplicate attribute identifier '" + a.abbreviation + "'");
      }
      if (a.values.empty()) {
        add({}, std::nullopt, "attribute '" + a.name + "' has no values");
      }
      std::unordered_set<std::string> values;
      for (const auto &v : a.values) {
        if (v.empty()) {
          add({}, std::nullopt, "attribute '" + a.name + "' has an empty value");
        } else if (v == kUnresolvedValue) {
          add({}, std::nullopt, "attribute '" + a.name +
                                    "' uses the reserved unresolved value");
        } else if (!values.insert(v).second) {
          add({}, std::nullopt,
              "attribute '" + a.name + "' repeats value '" + v + "'");
        }
      }
    }
  }

  void check_keys() {
    const auto &schema = corpus_.schema;
    std::unordered_set<std::string> ids;
    for (const auto &key : corpus_.keys) {
      const std::string where = "scenario '" + key.scenario_id + "': ";
      if (!ids.insert(key.scenario_id).second) {
        add({}, std::nullopt, where + "duplicate scenario id");
      }
      for (const auto &[attr, value] : key.assignments) {
        auto idx = schema.find(attr);
        if (!idx) {
          add({}, std::nullopt, where + "unknown attribute '" + attr + "'");
        } else if (!schema.value_label(*idx, value)) {
          add({}, std::nullopt, where + "value '" + value +
                                    "' is not in the domain of '" + attr + "'");
        }
      }
      for (const auto &a : schema.attributes()) {
        if (!key.assignments.contains(a.name)) {
          add({}, std::nullopt, where + "no value for '" + a.name + "'");
        }
      }
    }
  }

  void check_attrs(const Dialogue &d, std::size_t utt, const AttributeSet &set,
                   const std::string &what) {
    for (const auto &name : set) {
      if (!corpus_.schema.find(name)) {
        add(d.dialogue_id, utt, what + " names unknown attribute '" + name + "'");
      }
    }
  }

  void check_dialogue(const Dialogue &d) {
    const auto &schema = corpus_.schema;
    if (corpus_.find_key(d.scenario_id) == nullptr) {
      add(d.dialogue_id, std::nullopt,
          "unknown scenario '" + d.scenario_id + "'");
    }
    if (d.satisfaction && !std::isfinite(*d.satisfaction)) {
      add(d.dialogue_id, std::nullopt, "satisfaction is not finite");
    }
    for (const auto &[attr, value] : d.observed) {
      auto idx = schema.find(attr);
      if (!idx) {
        add(d.dialogue_id, std::nullopt,
            "observed value for unknown attribute '" + attr + "'");
        continue;
      }
      const auto r = schema.resolve(*idx, value);
      if (r.status == ResolvedValue::Status::kUnknown) {
        add(d.dialogue_id, std::nullopt, "observed value '" + value + "' for '" +
                                             attr + "' is in no attribute domain");
      } else if (r.status == ResolvedValue::Status::kAmbiguous) {
        add(d.dialogue_id, std::nullopt,
            "observed value '" + value + "' for '" + attr +
                "' matches several attributes; qualify it as ABBR:value");
      }
    }
    for (const auto &a : schema.attributes()) {
      if (!d.observed.contains(a.name)) {
        add(d.dialogue_id, std::nullopt,
            "observed AVM has no value for '" + a.name + "'");
      }
    }
    for (std::size_t i = 0; i < d.utterances.size(); ++i) {
      const auto &u = d.utterances[i];
      if (u.index != i) {
        add(d.dialogue_id, i, "utterance index does not match its position");
      }
      if (u.tags.empty()) add(d.dialogue_id, i, "utterance has no tags");
      check_attrs(d, i, u.tags, "tag");
      for (const auto &e : u.events) {
        if (e.kind.empty()) add(d.dialogue_id, i, "event with empty kind");
        if (e.targets.empty()) {
          add(d.dialogue_id, i, "event '" + e.kind + "' has no targets");
        }
        check_attrs(d, i, e.targets, "event '" + e.kind + "'");
      }
      for (const auto &[name, value] : u.annotations) {
        if (!std::isfinite(value)) {
          add(d.dialogue_id, i, "annotation '" + name + "' is not finite");
        }
      }
    }
  }

  const Corpus &corpus_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_corpus(const Corpus &corpus) {
  return Validator(corpus).run();
}

void require_valid(const Corpus &corpus) {
  auto report = validate_corpus(corpus);
  if (!report.ok()) {
    throw DataError("corpus failed validation:\n" + report.to_string());
  }
}

MatchVector compare_to_key(const AvmSchema &schema, const Dialogue &dialogue,
                           const ScenarioKey &key) {
  if (dialogue.scenario_id != key.scenario_id) {
    throw UsageError("dialogue '" + dialogue.dialogue_id + "' is for scenario '" +
                     dialogue.scenario_id + "', not '" + key.scenario_id + "'");
  }
  MatchVector out;
  out.reserve(schema.size());
  for (std::size_t a = 0; a < schema.size(); ++a) {
    const auto &name = schema.at(a).name;
    AttributeMatch m;
    m.attribute = name;
    m.key_value = key.assignments.at(name);
    m.observed_value = dialogue.observed.at(name);
    m.key_label = *schema.value_label(a, m.key_value);
    m.observed = schema.resolve(a, m.observed_value);
    m.match = m.observed.is_value() && m.observed.label == m.key_label;
    out.push_back(std::move(m));
  }
  return out;
}

Corpus merge_corpora(const std::vector<Corpus> &corpora) {
  Corpus merged;
  if (corpora.empty()) return merged;
  merged.schema = corpora.front().schema;
  std::unordered_set<std::string> dialogue_ids;
  for (const auto &c : corpora) {
    if (!(c.schema == merged.schema)) {
      throw UsageError("cannot merge corpora with different schemas");
    }
    for (const auto &key : c.keys) {
      if (const auto *existing = merged.find_key(key.scenario_id)) {
        if (!(*existing == key)) {
          throw UsageError("scenario '" + key.scenario_id +
                           "' has conflicting keys across corpora");
        }
      } else {
        merged.keys.push_back(key);
      }
    }
    for (const auto &d : c.dialogues) {
      if (!dialogue_ids.insert(d.dialogue_id).second) {
        throw UsageError("dialogue id '" + d.dialogue_id +
                         "' appears in more than one corpus");
      }
      merged.dialogues.push_back(d);
    }
  }
  return merged;
}

}  // namespace paradise
