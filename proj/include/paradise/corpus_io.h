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

#ifndef PARADISE_CORPUS_IO_H_
#define PARADISE_CORPUS_IO_H_

// JSON interchange for corpora, measurement tables, performance functions
// and normalization pools; CSV for confusion matrices. Readers reject
// unknown fields and report the JSON path of the first problem.

#include <string>
#include <vector>

#include "paradise/avm.h"
#include "paradise/kappa.h"
#include "paradise/performance.h"

namespace paradise {

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

// Corpus document:
//   {"schema": {"attributes": [{"name", "abbrev", "values", "flow"?}]},
//    "scenarios": [{"id", "key": {attr: value}}],
//    "dialogues": [{"id", "agent", "user", "scenario", "satisfaction"?,
//                   "observed": {attr: value},
//                   "utterances": [{"speaker", "text", "tags", "turn"?,
//                                   "events"?: [{"kind", "targets"}],
//                                   "annotations"?: {name: number}}]}]}
// Attributes may be referred to by name or abbreviation; they are stored by
// name. Labels are NFC-normalized and trimmed.
Corpus parse_corpus(const std::string &text);
Corpus load_corpus(const std::string &path);
std::string corpus_to_json(const Corpus &corpus);

// Measurement table: {"units": [{"id", "agent"?, "user"?, "satisfaction"?,
//                               "kappa"?, "costs": {name: number}}]}
std::vector<MeasuredUnit> parse_units(const std::string &text);
std::string units_to_json(const std::vector<MeasuredUnit> &units);

// True when the document's top level holds a "units" array.
bool is_units_document(const std::string &text);

PerformanceFunction parse_function(const std::string &text);
std::string function_to_json(const PerformanceFunction &pf);

NormalizationPool parse_pool(const std::string &text);
std::string pool_to_json(const NormalizationPool &pool);

// First row: "data\key" then the column labels; then one row per data
// label. Unresolved rows are written only when non-zero.
std::string matrix_to_csv(const ConfusionMatrix &m);
// Reads a square matrix over the schema's labels written by matrix_to_csv
// (unresolved rows optional).
ConfusionMatrix parse_matrix_csv(const AvmSchema &schema, const std::string &text);

}  // namespace paradise

#endif  // PARADISE_CORPUS_IO_H_
