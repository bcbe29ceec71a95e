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

#include "paradise/corpus_io.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "paradise/error.h"

namespace paradise {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw DataError("error writing '" + path + "'");
}

namespace {

json parse_json(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
}

// Reads the fields of one JSON object and rejects any it did not consume.
class Fields {
 public:
  Fields(const json &j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw DataError(path_ + ": expected an object");
  }
  // Call once every field has been read.
  void done() const {
    for (const auto &[key, value] : j_.items()) {
      if (!used_.contains(key)) {
        throw DataError(path_ + ": unknown field '" + key + "'");
      }
    }
  }

  const json &required(const std::string &key) {
    used_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) throw DataError(path_ + ": missing field '" + key + "'");
    return *it;
  }
  const json *optional(const std::string &key) {
    used_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return nullptr;
    return &*it;
  }
  std::string at(const std::string &key) const { return path_ + "." + key; }

 private:
  const json &j_;
  std::string path_;
  std::set<std::string> used_;
};

std::string as_string(const json &j, const std::string &path) {
  if (!j.is_string()) throw DataError(path + ": expected a string");
  return normalize_label(j.get<std::string>());
}

double as_number(const json &j, const std::string &path) {
  if (!j.is_number()) throw DataError(path + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw DataError(path + ": number is not finite");
  return v;
}

std::size_t as_count(const json &j, const std::string &path) {
  if (!j.is_number_unsigned()) throw DataError(path + ": expected a count");
  return j.get<std::size_t>();
}

const json &as_array(const json &j, const std::string &path) {
  if (!j.is_array()) throw DataError(path + ": expected an array");
  return j;
}

std::string index_path(const std::string &path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// Maps an attribute reference to its canonical name; unknown references are
// kept as written so validation can report them.
std::string attribute_name(const AvmSchema &schema, const std::string &ref) {
  if (auto idx = schema.find(ref)) return schema.at(*idx).name;
  return ref;
}

AttributeSet attribute_set(const AvmSchema &schema, const json &j,
                           const std::string &path) {
  AttributeSet out;
  const auto &arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.insert(attribute_name(schema, as_string(arr[i], index_path(path, i))));
  }
  return out;
}

std::map<std::string, std::string> assignment_map(const AvmSchema &schema,
                                                  const json &j,
                                                  const std::string &path) {
  if (!j.is_object()) throw DataError(path + ": expected an object");
  std::map<std::string, std::string> out;
  for (const auto &[key, value] : j.items()) {
    const auto name = attribute_name(schema, normalize_label(key));
    if (!out.emplace(name, as_string(value, path + "." + key)).second) {
      throw DataError(path + ": attribute '" + name + "' assigned twice");
    }
  }
  return out;
}

std::map<std::string, double> number_map(const json &j, const std::string &path) {
  if (!j.is_object()) throw DataError(path + ": expected an object");
  std::map<std::string, double> out;
  for (const auto &[key, value] : j.items()) {
    out[normalize_label(key)] = as_number(value, path + "." + key);
  }
  return out;
}

InfoFlow parse_flow(const std::string &s, const std::string &path) {
  if (s == "to agent") return InfoFlow::kToAgent;
  if (s == "to user") return InfoFlow::kToUser;
  throw DataError(path + ": flow must be \"to agent\" or \"to user\"");
}

AvmSchema parse_schema(const json &j, const std::string &path) {
  Fields f(j, path);
  const auto &attrs = as_array(f.required("attributes"), f.at("attributes"));
  std::vector<AttributeDef> defs;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    const auto p = index_path(f.at("attributes"), i);
    Fields a(attrs[i], p);
    AttributeDef def;
    def.name = as_string(a.required("name"), a.at("name"));
    if (const auto *ab = a.optional("abbrev")) def.abbreviation = as_string(*ab, a.at("abbrev"));
    const auto &values = as_array(a.required("values"), a.at("values"));
    for (std::size_t v = 0; v < values.size(); ++v) {
      def.values.push_back(as_string(values[v], index_path(a.at("values"), v)));
    }
    if (const auto *flow = a.optional("flow")) {
      def.flow = parse_flow(as_string(*flow, a.at("flow")), a.at("flow"));
    }
    a.done();
    defs.push_back(std::move(def));
  }
  f.done();
  return AvmSchema(std::move(defs));
}

Utterance parse_utterance(const AvmSchema &schema, const json &j,
                          const std::string &path, std::size_t index) {
  Fields f(j, path);
  Utterance u;
  u.index = index;
  const auto speaker = as_string(f.required("speaker"), f.at("speaker"));
  if (speaker == "agent") {
    u.speaker = Speaker::kAgent;
  } else if (speaker == "user") {
    u.speaker = Speaker::kUser;
  } else {
    throw DataError(f.at("speaker") + ": expected \"agent\" or \"user\"");
  }
  if (const auto *turn = f.optional("turn")) u.turn = as_string(*turn, f.at("turn"));
  const auto &text = f.required("text");
  if (!text.is_string()) throw DataError(f.at("text") + ": expected a string");
  u.text = text.get<std::string>();
  u.tags = attribute_set(schema, f.required("tags"), f.at("tags"));
  if (const auto *events = f.optional("events")) {
    const auto &arr = as_array(*events, f.at("events"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = index_path(f.at("events"), i);
      Fields e(arr[i], p);
      QualEvent ev;
      ev.kind = as_string(e.required("kind"), e.at("kind"));
      ev.targets = attribute_set(schema, e.required("targets"), e.at("targets"));
      e.done();
      u.events.push_back(std::move(ev));
    }
  }
  if (const auto *ann = f.optional("annotations")) {
    u.annotations = number_map(*ann, f.at("annotations"));
  }
  f.done();
  return u;
}

Dialogue parse_dialogue(const AvmSchema &schema, const json &j,
                        const std::string &path) {
  Fields f(j, path);
  Dialogue d;
  d.dialogue_id = as_string(f.required("id"), f.at("id"));
  d.agent_id = as_string(f.required("agent"), f.at("agent"));
  d.user_id = as_string(f.required("user"), f.at("user"));
  d.scenario_id = as_string(f.required("scenario"), f.at("scenario"));
  if (const auto *s = f.optional("satisfaction")) {
    d.satisfaction = as_number(*s, f.at("satisfaction"));
  }
  d.observed = assignment_map(schema, f.required("observed"), f.at("observed"));
  if (const auto *utts = f.optional("utterances")) {
    const auto &arr = as_array(*utts, f.at("utterances"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      d.utterances.push_back(
          parse_utterance(schema, arr[i], index_path(f.at("utterances"), i), i));
    }
  }
  f.done();
  return d;
}

ordered_json attribute_array(const AvmSchema &schema, const AttributeSet &set) {
  ordered_json arr = ordered_json::array();
  for (const auto &name : schema.in_schema_order(set)) arr.push_back(name);
  return arr;
}

ordered_json norm_to_json(const NormParams &p) {
  ordered_json j;
  j["mean"] = p.mean;
  j["std"] = p.std;
  j["n"] = p.n;
  return j;
}

NormParams norm_from_json(const json &j, const std::string &path) {
  Fields f(j, path);
  NormParams p;
  p.mean = as_number(f.required("mean"), f.at("mean"));
  p.std = as_number(f.required("std"), f.at("std"));
  if (const auto *n = f.optional("n")) p.n = as_count(*n, f.at("n"));
  f.done();
  check_norm_params(p, path);
  return p;
}

std::vector<std::string> string_array(const json &j, const std::string &path) {
  std::vector<std::string> out;
  const auto &arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_string(arr[i], index_path(path, i)));
  }
  return out;
}

}  // namespace

Corpus parse_corpus(const std::string &text) {
  const json doc = parse_json(text);
  Fields f(doc, "$");
  Corpus c;
  c.schema = parse_schema(f.required("schema"), f.at("schema"));
  if (const auto *scenarios = f.optional("scenarios")) {
    const auto &arr = as_array(*scenarios, f.at("scenarios"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = index_path(f.at("scenarios"), i);
      Fields s(arr[i], p);
      ScenarioKey key;
      key.scenario_id = as_string(s.required("id"), s.at("id"));
      key.assignments = assignment_map(c.schema, s.required("key"), s.at("key"));
      s.done();
      c.keys.push_back(std::move(key));
    }
  }
  if (const auto *dialogues = f.optional("dialogues")) {
    const auto &arr = as_array(*dialogues, f.at("dialogues"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      c.dialogues.push_back(
          parse_dialogue(c.schema, arr[i], index_path(f.at("dialogues"), i)));
    }
  }
  f.done();
  return c;
}

Corpus load_corpus(const std::string &path) {
  try {
    return parse_corpus(read_file(path));
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string corpus_to_json(const Corpus &corpus) {
  const auto &schema = corpus.schema;
  ordered_json doc;
  ordered_json attrs = ordered_json::array();
  for (const auto &a : schema.attributes()) {
    ordered_json ja;
    ja["name"] = a.name;
    if (!a.abbreviation.empty()) ja["abbrev"] = a.abbreviation;
    ja["values"] = a.values;
    if (a.flow == InfoFlow::kToAgent) ja["flow"] = "to agent";
    if (a.flow == InfoFlow::kToUser) ja["flow"] = "to user";
    attrs.push_back(std::move(ja));
  }
  doc["schema"]["attributes"] = std::move(attrs);

  auto assignments = [&](const std::map<std::string, std::string> &m) {
    ordered_json j = ordered_json::object();
    AttributeSet names;
    for (const auto &[k, v] : m) names.insert(k);
    for (const auto &name : schema.in_schema_order(names)) j[name] = m.at(name);
    return j;
  };

  doc["scenarios"] = ordered_json::array();
  for (const auto &key : corpus.keys) {
    ordered_json js;
    js["id"] = key.scenario_id;
    js["key"] = assignments(key.assignments);
    doc["scenarios"].push_back(std::move(js));
  }
  doc["dialogues"] = ordered_json::array();
  for (const auto &d : corpus.dialogues) {
    ordered_json jd;
    jd["id"] = d.dialogue_id;
    jd["agent"] = d.agent_id;
    jd["user"] = d.user_id;
    jd["scenario"] = d.scenario_id;
    if (d.satisfaction) jd["satisfaction"] = *d.satisfaction;
    jd["observed"] = assignments(d.observed);
    ordered_json utts = ordered_json::array();
    for (const auto &u : d.utterances) {
      ordered_json ju;
      ju["speaker"] = u.speaker == Speaker::kAgent ? "agent" : "user";
      if (!u.turn.empty()) ju["turn"] = u.turn;
      ju["text"] = u.text;
      ju["tags"] = attribute_array(schema, u.tags);
      if (!u.events.empty()) {
        ordered_json events = ordered_json::array();
        for (const auto &e : u.events) {
          ordered_json je;
          je["kind"] = e.kind;
          je["targets"] = attribute_array(schema, e.targets);
          events.push_back(std::move(je));
        }
        ju["events"] = std::move(events);
      }
      if (!u.annotations.empty()) ju["annotations"] = u.annotations;
      utts.push_back(std::move(ju));
    }
    if (!utts.empty()) jd["utterances"] = std::move(utts);
    doc["dialogues"].push_back(std::move(jd));
  }
  return doc.dump(2) + "\n";
}

bool is_units_document(const std::string &text) {
  try {
    const json doc = json::parse(text);
    return doc.is_object() && doc.contains("units") && doc["units"].is_array();
  } catch (const json::parse_error &) {
    return false;
  }
}

std::vector<MeasuredUnit> parse_units(const std::string &text) {
  const json doc = parse_json(text);
  Fields f(doc, "$");
  const auto &arr = as_array(f.required("units"), f.at("units"));
  std::vector<MeasuredUnit> units;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = index_path(f.at("units"), i);
    Fields u(arr[i], p);
    MeasuredUnit unit;
    unit.unit_id = as_string(u.required("id"), u.at("id"));
    if (!ids.insert(unit.unit_id).second) {
      throw DataError(p + ": duplicate unit id '" + unit.unit_id + "'");
    }
    if (const auto *a = u.optional("agent")) unit.agent_id = as_string(*a, u.at("agent"));
    if (const auto *us = u.optional("user")) unit.user_id = as_string(*us, u.at("user"));
    if (const auto *s = u.optional("satisfaction")) {
      unit.satisfaction = as_number(*s, u.at("satisfaction"));
    }
    if (const auto *k = u.optional("kappa")) unit.kappa = as_number(*k, u.at("kappa"));
    if (const auto *c = u.optional("costs")) unit.costs = number_map(*c, u.at("costs"));
    u.done();
    units.push_back(std::move(unit));
  }
  f.done();
  return units;
}

std::string units_to_json(const std::vector<MeasuredUnit> &units) {
  ordered_json doc;
  doc["units"] = ordered_json::array();
  for (const auto &u : units) {
    ordered_json j;
    j["id"] = u.unit_id;
    if (!u.agent_id.empty()) j["agent"] = u.agent_id;
    if (!u.user_id.empty()) j["user"] = u.user_id;
    if (u.satisfaction) j["satisfaction"] = *u.satisfaction;
    if (u.kappa) j["kappa"] = *u.kappa;
    j["costs"] = u.costs;
    doc["units"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

namespace {
constexpr const char *kFunctionFormat = "paradise-performance-function";
}

std::string function_to_json(const PerformanceFunction &pf) {
  ordered_json doc;
  doc["format"] = kFunctionFormat;
  doc["version"] = 1;
  doc["uses_kappa"] = pf.uses_kappa;
  doc["alpha"] = pf.alpha;
  doc["cost_weights"] = pf.cost_weights;
  ordered_json norm;
  norm["kappa"] = norm_to_json(pf.kappa_norm);
  norm["costs"] = ordered_json::object();
  for (const auto &[name, p] : pf.cost_norms) norm["costs"][name] = norm_to_json(p);
  doc["normalization"] = std::move(norm);
  const auto &pv = pf.provenance;
  ordered_json prov;
  prov["n"] = pv.n;
  prov["df_residual"] = pv.df_residual;
  prov["r_squared"] = pv.r_squared;
  prov["threshold"] = pv.threshold;
  prov["predictors"] = pv.predictors;
  prov["pruned"] = pv.pruned;
  prov["p_values"] = pv.p_values;
  doc["provenance"] = std::move(prov);
  return doc.dump(2) + "\n";
}

PerformanceFunction parse_function(const std::string &text) {
  const json doc = parse_json(text);
  Fields f(doc, "$");
  if (as_string(f.required("format"), f.at("format")) != kFunctionFormat) {
    throw DataError("$.format: not a performance function document");
  }
  if (as_count(f.required("version"), f.at("version")) != 1) {
    throw DataError("$.version: unsupported version");
  }
  PerformanceFunction pf;
  const auto &uk = f.required("uses_kappa");
  if (!uk.is_boolean()) throw DataError(f.at("uses_kappa") + ": expected a boolean");
  pf.uses_kappa = uk.get<bool>();
  pf.alpha = as_number(f.required("alpha"), f.at("alpha"));
  pf.cost_weights = number_map(f.required("cost_weights"), f.at("cost_weights"));
  {
    Fields n(f.required("normalization"), f.at("normalization"));
    pf.kappa_norm = norm_from_json(n.required("kappa"), n.at("kappa"));
    const auto &costs = n.required("costs");
    if (!costs.is_object()) throw DataError(n.at("costs") + ": expected an object");
    for (const auto &[name, value] : costs.items()) {
      pf.cost_norms[normalize_label(name)] = norm_from_json(value, n.at("costs") + "." + name);
    }
    n.done();
  }
  for (const auto &[name, w] : pf.cost_weights) {
    if (!pf.cost_norms.contains(name)) {
      throw DataError("$.normalization.costs: no statistics for weighted cost '" +
                      name + "'");
    }
  }
  if (const auto *prov = f.optional("provenance")) {
    Fields p(*prov, f.at("provenance"));
    auto &pv = pf.provenance;
    if (const auto *v = p.optional("n")) pv.n = as_count(*v, p.at("n"));
    if (const auto *v = p.optional("df_residual")) pv.df_residual = as_count(*v, p.at("df_residual"));
    if (const auto *v = p.optional("r_squared")) pv.r_squared = as_number(*v, p.at("r_squared"));
    if (const auto *v = p.optional("threshold")) pv.threshold = as_number(*v, p.at("threshold"));
    if (const auto *v = p.optional("predictors")) pv.predictors = string_array(*v, p.at("predictors"));
    if (const auto *v = p.optional("pruned")) pv.pruned = string_array(*v, p.at("pruned"));
    if (const auto *v = p.optional("p_values")) pv.p_values = number_map(*v, p.at("p_values"));
    p.done();
  }
  f.done();
  return pf;
}

std::string pool_to_json(const NormalizationPool &pool) {
  ordered_json doc;
  doc["pool_id"] = pool.pool_id;
  if (pool.kappa_norm) doc["kappa"] = norm_to_json(*pool.kappa_norm);
  doc["costs"] = ordered_json::object();
  for (const auto &[name, p] : pool.cost_norms) doc["costs"][name] = norm_to_json(p);
  doc["members"] = ordered_json::array();
  for (const auto &m : pool.members) {
    ordered_json jm;
    jm["label"] = m.label;
    if (!m.scope.empty()) jm["scope"] = m.scope;
    if (m.kappa) jm["kappa"] = *m.kappa;
    jm["costs"] = m.costs;
    doc["members"].push_back(std::move(jm));
  }
  if (!pool.notes.empty()) doc["notes"] = pool.notes;
  return doc.dump(2) + "\n";
}

NormalizationPool parse_pool(const std::string &text) {
  const json doc = parse_json(text);
  Fields f(doc, "$");
  NormalizationPool pool;
  pool.pool_id = as_string(f.required("pool_id"), f.at("pool_id"));
  if (const auto *k = f.optional("kappa")) pool.kappa_norm = norm_from_json(*k, f.at("kappa"));
  if (const auto *costs = f.optional("costs")) {
    if (!costs->is_object()) throw DataError(f.at("costs") + ": expected an object");
    for (const auto &[name, value] : costs->items()) {
      pool.cost_norms[normalize_label(name)] =
          norm_from_json(value, f.at("costs") + "." + name);
    }
  }
  if (const auto *members = f.optional("members")) {
    const auto &arr = as_array(*members, f.at("members"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = index_path(f.at("members"), i);
      Fields m(arr[i], p);
      PoolMember member;
      member.label = as_string(m.required("label"), m.at("label"));
      if (const auto *s = m.optional("scope")) member.scope = as_string(*s, m.at("scope"));
      if (const auto *k = m.optional("kappa")) member.kappa = as_number(*k, m.at("kappa"));
      if (const auto *c = m.optional("costs")) member.costs = number_map(*c, m.at("costs"));
      m.done();
      pool.members.push_back(std::move(member));
    }
  }
  if (const auto *notes = f.optional("notes")) pool.notes = string_array(*notes, f.at("notes"));
  f.done();
  return pool;
}

namespace {

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string &line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string matrix_to_csv(const ConfusionMatrix &m) {
  std::ostringstream out;
  out << csv_field("data\\key");
  for (const auto &l : m.labels()) out << "," << csv_field(l);
  out << "\n";
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    if (r >= m.label_count()) {
      bool any = false;
      for (std::size_t c = 0; c < m.label_count(); ++c) any = any || m.count(r, c) != 0;
      if (!any) continue;
    }
    out << csv_field(m.row_label(r));
    for (std::size_t c = 0; c < m.label_count(); ++c) out << "," << m.count(r, c);
    out << "\n";
  }
  return out.str();
}

ConfusionMatrix parse_matrix_csv(const AvmSchema &schema, const std::string &text) {
  ConfusionMatrix m(schema);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DataError("matrix CSV is empty");
  const auto header = csv_split(line);
  if (header.size() != m.label_count() + 1) {
    throw DataError("matrix CSV header has " + std::to_string(header.size() - 1) +
                    " columns; the schema has " + std::to_string(m.label_count()) +
                    " labels");
  }
  for (std::size_t c = 0; c < m.label_count(); ++c) {
    if (normalize_label(header[c + 1]) != m.labels()[c]) {
      throw DataError("matrix CSV column " + std::to_string(c + 1) + " is '" +
                      header[c + 1] + "', expected '" + m.labels()[c] + "'");
    }
  }
  std::set<std::size_t> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = csv_split(line);
    const std::string where = "matrix CSV line " + std::to_string(line_no);
    if (cells.size() != m.label_count() + 1) throw DataError(where + ": wrong width");
    const auto label = normalize_label(cells[0]);
    std::size_t row = m.row_count();
    for (std::size_t r = 0; r < m.row_count(); ++r) {
      if (m.row_label(r) == label) row = r;
    }
    if (row == m.row_count()) throw DataError(where + ": unknown row '" + label + "'");
    if (!seen.insert(row).second) throw DataError(where + ": repeated row '" + label + "'");
    for (std::size_t c = 0; c < m.label_count(); ++c) {
      const auto &cell = cells[c + 1];
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(cell, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != cell.size() || cell.empty() || v < 0) {
        throw DataError(where + ": '" + cell + "' is not a non-negative count");
      }
      m.add(row, c, v);
    }
  }
  return m;
}

}  // namespace paradise
