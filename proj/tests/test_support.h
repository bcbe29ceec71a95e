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

#ifndef PARADISE_TESTS_TEST_SUPPORT_H_
#define PARADISE_TESTS_TEST_SUPPORT_H_

#include <array>
#include <string>
#include <vector>

#include "paradise/avm.h"
#include "paradise/corpus_io.h"
#include "paradise/kappa.h"

namespace paradise::testing {

inline std::string data_path(const std::string &name) {
  return std::string(PARADISE_DATA_DIR) + "/" + name;
}

inline AvmSchema train_schema() {
  return AvmSchema({
      {"depart-city", "DC", {"Milano", "Roma", "Torino", "Trento"}, InfoFlow::kToAgent},
      {"arrival-city", "AC", {"Milano", "Roma", "Torino", "Trento"}, InfoFlow::kToAgent},
      {"depart-range", "DR", {"morning", "evening"}, InfoFlow::kToAgent},
      {"depart-time", "DT", {"6am", "8am", "6pm", "8pm"}, InfoFlow::kToUser},
  });
}

// Nonzero cells as printed: data row, key column (1-based), count.
struct Cell {
  int row;
  int col;
  int count;
};

inline const std::vector<Cell> &agent_a_cells() {
  static const std::vector<Cell> cells = {
      {1, 1, 22}, {1, 3, 1},   {1, 5, 3},   {2, 2, 29},  {3, 1, 4},   {3, 3, 16},
      {3, 4, 4},  {3, 7, 1},   {4, 1, 1},   {4, 2, 1},   {4, 3, 5},   {4, 4, 11},
      {4, 7, 1},  {5, 1, 3},   {5, 5, 20},  {6, 6, 22},  {7, 3, 2},   {7, 5, 1},
      {7, 6, 1},  {7, 7, 20},  {7, 8, 5},   {8, 3, 1},   {8, 5, 1},   {8, 6, 2},
      {8, 7, 8},  {8, 8, 15},  {9, 9, 45},  {9, 10, 10}, {10, 9, 5},  {10, 10, 40},
      {11, 11, 20}, {11, 13, 2}, {12, 11, 1}, {12, 12, 19}, {12, 13, 2}, {12, 14, 4},
      {13, 11, 2}, {13, 13, 18}, {14, 11, 2}, {14, 12, 6}, {14, 13, 3}, {14, 14, 21},
  };
  return cells;
}

inline const std::vector<Cell> &agent_b_cells() {
  static const std::vector<Cell> cells = {
      {1, 1, 16},  {1, 3, 1},   {1, 5, 4},   {1, 9, 3},   {1, 10, 2},  {2, 1, 1},
      {2, 2, 20},  {2, 3, 1},   {2, 6, 3},   {3, 1, 5},   {3, 2, 1},   {3, 3, 9},
      {3, 4, 4},   {3, 5, 2},   {3, 7, 4},   {3, 8, 2},   {4, 1, 1},   {4, 2, 2},
      {4, 3, 6},   {4, 4, 6},   {4, 7, 2},   {4, 8, 3},   {5, 1, 4},   {5, 5, 15},
      {5, 9, 2},   {5, 10, 3},  {6, 1, 1},   {6, 2, 6},   {6, 6, 19},  {7, 3, 5},
      {7, 4, 2},   {7, 5, 1},   {7, 6, 1},   {7, 7, 15},  {7, 8, 4},   {8, 2, 1},
      {8, 3, 3},   {8, 4, 3},   {8, 5, 1},   {8, 6, 2},   {8, 7, 9},   {8, 8, 11},
      {9, 1, 2},   {9, 5, 2},   {9, 9, 39},  {9, 10, 10}, {10, 9, 6},  {10, 10, 35},
      {11, 11, 20}, {11, 12, 5}, {11, 13, 5}, {11, 14, 4}, {12, 12, 10}, {12, 13, 5},
      {12, 14, 5}, {13, 11, 5}, {13, 12, 5}, {13, 13, 10}, {13, 14, 5}, {14, 12, 5},
      {14, 13, 5}, {14, 14, 11},
  };
  return cells;
}

inline ConfusionMatrix matrix_from_cells(const AvmSchema &schema,
                                         const std::vector<Cell> &cells) {
  ConfusionMatrix m(schema);
  for (const auto &c : cells) m.add(c.row - 1, c.col - 1, c.count);
  return m;
}

// Plain-array kappa, written without the library.
struct OracleKappa {
  double p_a;
  double p_e;
  double kappa;
};

inline OracleKappa oracle_kappa(const std::vector<Cell> &cells, int col_begin,
                                int col_end) {
  std::array<double, 15> col{};
  double total = 0.0, diag = 0.0;
  for (const auto &c : cells) {
    if (c.col < col_begin || c.col > col_end) continue;
    col[c.col] += c.count;
    total += c.count;
    if (c.row == c.col) diag += c.count;
  }
  double pe = 0.0;
  for (int j = col_begin; j <= col_end; ++j) pe += (col[j] / total) * (col[j] / total);
  const double pa = diag / total;
  return {pa, pe, (pa - pe) / (1.0 - pe)};
}

inline Corpus load_fixture(const std::string &name) {
  return load_corpus(data_path(name));
}

}  // namespace paradise::testing

#endif  // PARADISE_TESTS_TEST_SUPPORT_H_
