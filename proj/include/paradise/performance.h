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

#ifndef PARADISE_PERFORMANCE_H_
#define PARADISE_PERFORMANCE_H_

// Performance functions: estimation against user satisfaction and
// application to dialogues, subdialogues and agent comparisons.
//
//   Performance = alpha * N(kappa) - sum_i w_i * N(c_i)
//
// where N is the Z score against a normalization pool.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paradise/avm.h"
#include "paradise/costs.h"
#include "paradise/stats.h"

namespace paradise {

// Name of the task-success predictor in fits and reports.
inline constexpr const char *kKappaPredictor = "kappa";

// One unit of analysis (a dialogue, a user, a strategy) with its measured
// quantities.
struct MeasuredUnit {
  std::string unit_id;
  std::string agent_id;
  std::string user_id;
  std::optional<double> satisfaction;
  std::optional<double> kappa;
  std::map<std::string, double> costs;

  bool operator==(const MeasuredUnit &) const = default;
};

enum class Grouping { kPerDialogue, kPerUser };

// Per-unit κ comes from the unit's own confusion matrix over all
// attributes; costs are whole-dialogue costs (averaged over a user's
// dialogues); satisfaction is the mean rating when every dialogue has one.
std::vector<MeasuredUnit> measure_units(const Corpus &corpus,
                                        const std::vector<CostMeasure> &measures,
                                        Grouping grouping);

struct FitProvenance {
  std::size_t n = 0;
  std::size_t df_residual = 0;
  double r_squared = 0.0;
  double threshold = 0.05;
  std::vector<std::string> predictors;  // initial model, in order
  std::vector<std::string> pruned;
  std::map<std::string, double> p_values;  // final model

  bool operator==(const FitProvenance &) const = default;
};

struct PerformanceFunction {
  bool uses_kappa = true;
  double alpha = 0.0;
  std::map<std::string, double> cost_weights;  // subtracted
  NormParams kappa_norm;
  std::map<std::string, NormParams> cost_norms;
  FitProvenance provenance;

  bool operator==(const PerformanceFunction &) const = default;
};

struct EstimationOptions {
  double threshold = 0.05;  // predictors with p >= threshold are pruned
};

struct Estimate {
  PerformanceFunction function;
  RegressionFit initial;
  RegressionFit final_fit;
};

// Standardized regression of satisfaction on κ and every named cost, then a
// refit on the predictors significant at the threshold.
Estimate estimate_function(const std::vector<MeasuredUnit> &units,
                           const std::vector<std::string> &measures,
                           const EstimationOptions &options = {});

struct PoolMember {
  std::string label;
  std::string scope;
  std::optional<double> kappa;
  std::map<std::string, double> costs;

  bool operator==(const PoolMember &) const = default;
};

// Units whose statistics define N(.) for a comparison. Statistics may be
// derived from members or stated directly when the members are unknown.
struct NormalizationPool {
  std::string pool_id;
  std::vector<PoolMember> members;
  std::optional<NormParams> kappa_norm;
  std::map<std::string, NormParams> cost_norms;
  std::vector<std::string> notes;

  bool operator==(const NormalizationPool &) const = default;
};

// Pool whose statistics are those the function was estimated with.
NormalizationPool estimation_pool(const PerformanceFunction &pf);

double evaluate(const PerformanceFunction &pf, std::optional<double> kappa,
                const std::map<std::string, double> &costs,
                const NormalizationPool &pool);

inline double evaluate(const PerformanceFunction &pf, const MeasuredUnit &unit,
                       const NormalizationPool &pool) {
  return evaluate(pf, unit.kappa, unit.costs, pool);
}

inline double evaluate(const PerformanceFunction &pf, const MeasuredUnit &unit) {
  return evaluate(pf, unit.kappa, unit.costs, estimation_pool(pf));
}

struct GroupComparison {
  std::vector<double> performance_a;
  std::vector<double> performance_b;
  double mean_a = 0.0;
  double mean_b = 0.0;
  TTestResult test;
};

GroupComparison compare_groups(const PerformanceFunction &pf,
                               const std::vector<MeasuredUnit> &group_a,
                               const std::vector<MeasuredUnit> &group_b,
                               const NormalizationPool &pool);

enum class CostGranularity { kPerSegment, kPerStrategy };

struct SubdialogueOptions {
  // Cost statistics over every matching segment, or over one mean value
  // per strategy. κ is always one value per strategy.
  CostGranularity cost_granularity = CostGranularity::kPerSegment;
};

// Builds a pool of comparable strategies for the subdialogues about
// exactly `attrs`. Each strategy label gets κ from the attribute-restricted
// confusion matrix over its agents' dialogues and, per measure, the mean
// cost of its matching segments. Costs without enough segments to define
// statistics are left for the caller to state (see notes).
NormalizationPool subdialogue_units(
    const Corpus &corpus, const AttributeSet &attrs,
    const std::map<std::string, std::string> &strategy_labels,
    const std::vector<CostMeasure> &measures,
    const SubdialogueOptions &options = {});

}  // namespace paradise

#endif  // PARADISE_PERFORMANCE_H_
