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

#ifndef PARADISE_AVM_H_
#define PARADISE_AVM_H_

// Attribute value matrix (AVM) task representation: the schema of task
// attributes, scenario keys, and attribute-tagged dialogue corpora.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace paradise {

// Reserved observed value for an attribute whose value was never conveyed.
// Always a non-match; gets its own confusion-matrix row per attribute.
inline constexpr std::string_view kUnresolvedValue = "⊥-unresolved";

// NFC-normalizes and trims surrounding whitespace. All labels, attribute
// names and identifiers go through this before comparison.
std::string normalize_label(std::string_view text);

// Direction of information flow. Recorded for documentation only; no
// computation reads it.
enum class InfoFlow { kUnspecified, kToAgent, kToUser };

enum class Speaker { kAgent, kUser };

using AttributeSet = std::set<std::string>;

struct AttributeDef {
  std::string name;
  std::string abbreviation;
  std::vector<std::string> values;
  InfoFlow flow = InfoFlow::kUnspecified;

  bool operator==(const AttributeDef &) const = default;
};

// Outcome of resolving an observed value string against the schema.
struct ResolvedValue {
  enum class Status { kValue, kUnresolved, kUnknown, kAmbiguous };
  Status status = Status::kUnknown;
  std::size_t label = 0;  // global label index, valid when status == kValue

  bool is_value() const { return status == Status::kValue; }
};

// The task's attributes and their finite value domains. Values are
// addressed globally by a label index: attribute blocks laid out in schema
// order, values in declaration order within each block.
class AvmSchema {
 public:
  AvmSchema() = default;
  explicit AvmSchema(std::vector<AttributeDef> attributes);

  const std::vector<AttributeDef> &attributes() const { return attributes_; }
  std::size_t size() const { return attributes_.size(); }
  const AttributeDef &at(std::size_t i) const { return attributes_.at(i); }

  // Looks up an attribute by full name or abbreviation.
  std::optional<std::size_t> find(std::string_view name_or_abbrev) const;
  // As find(), but throws UsageError for unknown attributes.
  std::size_t index_of(std::string_view name_or_abbrev) const;
  AttributeSet all_names() const;

  std::size_t label_count() const { return label_count_; }
  std::size_t block_begin(std::size_t attr) const { return offsets_.at(attr); }
  std::size_t block_end(std::size_t attr) const {
    return offsets_.at(attr) + attributes_.at(attr).values.size();
  }
  std::size_t attribute_of_label(std::size_t label) const;
  // Display form "ABBR:value", unique across the schema.
  std::string label_name(std::size_t label) const;

  std::optional<std::size_t> value_label(std::size_t attr,
                                         std::string_view value) const;

  // Resolves a value reported for attribute `attr`. Tried in order: the
  // reserved unresolved marker, the attribute's own domain, a qualified
  // "ABBR:value" or "name:value" reference, then a unique match in some
  // other attribute's domain (a cross-attribute confusion).
  ResolvedValue resolve(std::size_t attr, std::string_view raw) const;

  // Orders attribute names by schema position; unknown names go last.
  std::vector<std::string> in_schema_order(const AttributeSet &names) const;
  // "{DC,AC}" using abbreviations where known.
  std::string abbreviate(const AttributeSet &names) const;

  bool operator==(const AvmSchema &other) const {
    return attributes_ == other.attributes_;
  }

 private:
  std::vector<AttributeDef> attributes_;
  std::vector<std::size_t> offsets_;
  std::size_t label_count_ = 0;
  std::unordered_map<std::string, std::size_t> by_name_;
};

struct ScenarioKey {
  std::string scenario_id;
  std::map<std::string, std::string> assignments;  // attribute name -> value

  bool operator==(const ScenarioKey &) const = default;
};

struct QualEvent {
  std::string kind;
  AttributeSet targets;

  bool operator==(const QualEvent &) const = default;
};

struct Utterance {
  std::size_t index = 0;
  Speaker speaker = Speaker::kAgent;
  std::string turn;  // optional display label such as "A3"
  std::string text;
  AttributeSet tags;
  std::vector<QualEvent> events;
  // Scalar per-utterance measurements, e.g. elapsed seconds.
  std::map<std::string, double> annotations;

  bool operator==(const Utterance &) const = default;
};

struct Dialogue {
  std::string dialogue_id;
  std::string agent_id;
  std::string user_id;
  std::string scenario_id;
  std::optional<double> satisfaction;
  std::vector<Utterance> utterances;
  std::map<std::string, std::string> observed;  // attribute name -> value

  bool operator==(const Dialogue &) const = default;
};

struct Corpus {
  AvmSchema schema;
  std::vector<ScenarioKey> keys;
  std::vector<Dialogue> dialogues;

  const ScenarioKey *find_key(std::string_view scenario_id) const;
  const ScenarioKey &key_for(const Dialogue &dialogue) const;

  bool operator==(const Corpus &) const = default;
};

struct Violation {
  std::string dialogue_id;  // empty for schema- and key-level problems
  std::optional<std::size_t> utterance;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate_corpus(const Corpus &corpus);

// Throws DataError carrying the report if the corpus does not validate.
void require_valid(const Corpus &corpus);

struct AttributeMatch {
  std::string attribute;
  std::string key_value;
  std::string observed_value;
  std::size_t key_label = 0;
  ResolvedValue observed;
  bool match = false;
};

using MatchVector = std::vector<AttributeMatch>;

// Per attribute in schema order: key value, observed value and whether the
// observed value resolves to the key's label.
MatchVector compare_to_key(const AvmSchema &schema, const Dialogue &dialogue,
                           const ScenarioKey &key);

// Concatenates corpora sharing one schema. Scenario keys with the same id
// must agree; dialogue ids must stay unique.
Corpus merge_corpora(const std::vector<Corpus> &corpora);

}  // namespace paradise

#endif  // PARADISE_AVM_H_
