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

#ifndef PARADISE_STATS_H_
#define PARADISE_STATS_H_

// Small statistics kernel: moments, Z scores, correlation, fully
// standardized least squares with coefficient tests, Student's t.
//
// All sums run in index order so results are reproducible bit for bit.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace paradise {

// Location and scale of a normalization pool. `std` is the sample
// (n - 1) standard deviation. n == 0 marks statistics stated externally
// for a pool whose members are not available.
struct NormParams {
  double mean = 0.0;
  double std = 1.0;
  std::size_t n = 0;

  bool operator==(const NormParams &) const = default;
};

double mean(std::span<const double> xs);

// Throws DegenerateScaleError for fewer than two values or zero spread.
NormParams norm_params(std::span<const double> xs);

// Checks std > 0 and (n == 0 or n >= 2).
void check_norm_params(const NormParams &p, const std::string &what);

inline double z_score(double x, const NormParams &p) {
  return (x - p.mean) / p.std;
}

std::vector<double> z_scores(std::span<const double> xs);

double pearson_r(std::span<const double> xs, std::span<const double> ys);

struct RegressionFit {
  std::vector<std::string> names;
  std::vector<double> coefficients;  // standardized weights
  std::vector<double> std_errors;
  std::vector<double> t_stats;
  std::vector<double> p_values;  // two-sided
  double r_squared = 0.0;
  std::size_t n = 0;
  std::size_t df_residual = 0;   // n - k - 1
  std::vector<double> fitted;    // on the standardized response
  std::vector<double> residuals;
};

// Z-normalizes the response and every predictor column, then fits least
// squares without an intercept (it is zero after centering). Degrees of
// freedom still account for the implicit intercept. Rank-deficient designs
// (reciprocal condition below 1e-10) raise CollinearityError naming the
// columns involved.
RegressionFit ols_standardized(std::span<const double> y,
                               const std::vector<std::vector<double>> &columns,
                               const std::vector<std::string> &names);

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

double student_t_cdf(double t, double df);

// 2 * (1 - CDF(|t|)), evaluated on the lower tail to keep precision.
double student_t_two_sided_p(double t, double df);

struct TTestResult {
  double mean_x = 0.0;
  double mean_y = 0.0;
  double t = 0.0;
  double df = 0.0;
  double p_two_sided = 1.0;
  std::string diagnostic;  // set when the pooled variance is zero
};

// Pooled-variance two-sample t test with df = n1 + n2 - 2.
TTestResult two_sample_t(std::span<const double> xs, std::span<const double> ys);

}  // namespace paradise

#endif  // PARADISE_STATS_H_
