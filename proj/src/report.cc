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

#include "paradise/report.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace paradise {

std::string round3(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  const double scaled = v * 1000.0;
  if (std::fabs(scaled) >= 1e15) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }
  // The slack absorbs binary representation error at exact midpoints.
  const long long r = static_cast<long long>(std::floor(scaled + 0.5 + 1e-9));
  if (r == 0) return "0.000";
  const long long mag = r < 0 ? -r : r;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%lld.%03lld", r < 0 ? "-" : "", mag / 1000,
                mag % 1000);
  return buf;
}

std::string precise(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string turn_name(const Dialogue &d, std::size_t i) {
  if (i < d.utterances.size() && !d.utterances[i].turn.empty()) {
    return d.utterances[i].turn;
  }
  return "#" + std::to_string(i);
}

void write_text(const AvmSchema &schema, const Dialogue &d, const Segment &s,
                int indent, std::ostringstream &out) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << s.segment_id
      << " " << schema.abbreviate(s.attribute_set);
  if (s.length() > 0) {
    out << " " << turn_name(d, s.begin) << ".." << turn_name(d, s.end - 1);
  }
  out << " (" << s.length() << (s.length() == 1 ? " utterance)" : " utterances)")
      << "\n";
  for (const auto &c : s.children) write_text(schema, d, c, indent + 1, out);
}

nlohmann::ordered_json to_json(const AvmSchema &schema, const Segment &s) {
  nlohmann::ordered_json j;
  j["id"] = s.segment_id;
  j["attributes"] = schema.in_schema_order(s.attribute_set);
  j["begin"] = s.begin;
  j["end"] = s.end;
  j["children"] = nlohmann::ordered_json::array();
  for (const auto &c : s.children) j["children"].push_back(to_json(schema, c));
  return j;
}

}  // namespace

std::string segment_tree_text(const AvmSchema &schema, const Dialogue &dialogue,
                              const Segment &root) {
  std::ostringstream out;
  write_text(schema, dialogue, root, 0, out);
  return out.str();
}

std::string segment_trees_json(const AvmSchema &schema,
                               const std::vector<SegmentedDialogue> &trees) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto &t : trees) {
    nlohmann::ordered_json j;
    j["dialogue"] = t.dialogue->dialogue_id;
    j["root"] = to_json(schema, t.root);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace paradise
