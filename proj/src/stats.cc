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

#include "paradise/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "paradise/error.h"

namespace paradise {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw DegenerateScaleError("mean of an empty series");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

NormParams norm_params(std::span<const double> xs) {
  if (xs.size() < 2) {
    throw DegenerateScaleError("need at least two values to normalize");
  }
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  if (!(sd > 0.0)) {
    throw DegenerateScaleError("series is constant; standard deviation is 0");
  }
  return {m, sd, xs.size()};
}

void check_norm_params(const NormParams &p, const std::string &what) {
  if (!std::isfinite(p.mean) || !std::isfinite(p.std) || !(p.std > 0.0)) {
    throw DegenerateScaleError(what + ": normalization needs a finite mean and "
                                      "a positive standard deviation");
  }
  if (p.n == 1) {
    throw DegenerateScaleError(what + ": pool has a single member");
  }
}

std::vector<double> z_scores(std::span<const double> xs) {
  const auto p = norm_params(xs);
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(z_score(x, p));
  return out;
}

double pearson_r(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw UsageError("correlation needs series of equal length");
  }
  if (xs.size() < 2) throw DegenerateScaleError("correlation needs two points");
  const double mx = mean(xs), my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw DegenerateScaleError("correlation with a constant series");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double beta_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxIter = 100000;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  return h;
}

// I_x(a, b) with y = 1 - x supplied separately so callers can keep
// precision when x is close to 1.
double incomplete_beta(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, y) / b;
}

// Lower tail P(T <= -|t|).
double t_lower_tail(double t, double df) {
  if (std::isinf(t)) return 0.0;
  const double t2 = t * t;
  const double x = df / (df + t2);
  const double y = t2 / (df + t2);
  return 0.5 * incomplete_beta(0.5 * df, 0.5, x, y);
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw UsageError("incomplete beta needs positive shape parameters");
  }
  if (x < 0.0 || x > 1.0) throw UsageError("incomplete beta needs 0 <= x <= 1");
  return incomplete_beta(a, b, x, 1.0 - x);
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw UsageError("Student t needs df > 0");
  if (std::isnan(t)) return t;
  const double tail = t_lower_tail(t, df);
  return t > 0.0 ? 1.0 - tail : tail;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw UsageError("Student t needs df > 0");
  return std::min(1.0, 2.0 * t_lower_tail(t, df));
}

namespace {

using Column = std::vector<double>;

struct PivotedQr {
  std::vector<Column> r;  // r[j][i] holds R(i, j) for i <= j
  std::vector<std::size_t> perm;
  Column qty;
};

// Householder QR with column pivoting; columns are modified in place.
PivotedQr pivoted_qr(std::vector<Column> a, Column y) {
  const std::size_t n = y.size(), k = a.size();
  PivotedQr out;
  out.perm.resize(k);
  std::iota(out.perm.begin(), out.perm.end(), 0);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t best = j;
    double best_norm = -1.0;
    for (std::size_t c = j; c < k; ++c) {
      double s = 0.0;
      for (std::size_t i = j; i < n; ++i) s += a[c][i] * a[c][i];
      if (s > best_norm) {
        best_norm = s;
        best = c;
      }
    }
    std::swap(a[j], a[best]);
    std::swap(out.perm[j], out.perm[best]);

    const double norm = std::sqrt(best_norm);
    if (norm == 0.0) continue;
    const double alpha = a[j][j] > 0.0 ? -norm : norm;
    Column v(a[j].begin() + static_cast<std::ptrdiff_t>(j), a[j].end());
    v[0] -= alpha;
    double vv = 0.0;
    for (double e : v) vv += e * e;
    auto reflect = [&](Column &col) {
      double dot = 0.0;
      for (std::size_t i = j; i < n; ++i) dot += v[i - j] * col[i];
      const double f = 2.0 * dot / vv;
      for (std::size_t i = j; i < n; ++i) col[i] -= f * v[i - j];
    };
    if (vv > 0.0) {
      for (std::size_t c = j + 1; c < k; ++c) reflect(a[c]);
      reflect(y);
    }
    a[j][j] = alpha;
    for (std::size_t i = j + 1; i < n; ++i) a[j][i] = 0.0;
  }
  out.r = std::move(a);
  out.qty = std::move(y);
  return out;
}

// Solves the leading `size` x `size` upper-triangular system R x = b.
Column back_substitute(const std::vector<Column> &r, Column b, std::size_t size) {
  Column x(size, 0.0);
  for (std::size_t jj = size; jj-- > 0;) {
    double s = b[jj];
    for (std::size_t c = jj + 1; c < size; ++c) s -= r[c][jj] * x[c];
    x[jj] = s / r[jj][jj];
  }
  return x;
}

}  // namespace

RegressionFit ols_standardized(std::span<const double> y,
                               const std::vector<std::vector<double>> &columns,
                               const std::vector<std::string> &names) {
  const std::size_t n = y.size(), k = columns.size();
  if (names.size() != k) throw UsageError("one name per predictor column");
  if (k == 0) throw UsageError("regression needs at least one predictor");
  for (const auto &c : columns) {
    if (c.size() != n) throw UsageError("predictor columns must match the response length");
  }
  if (n < k + 2) {
    throw InsufficientDataError(
        "regression with " + std::to_string(k) + " predictors needs at least " +
        std::to_string(k + 2) + " observations, got " + std::to_string(n));
  }

  const Column ys = z_scores(y);
  std::vector<Column> zs;
  zs.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    try {
      zs.push_back(z_scores(columns[j]));
    } catch (const DegenerateScaleError &) {
      throw DegenerateScaleError("predictor '" + names[j] + "' is constant");
    }
  }

  const PivotedQr qr = pivoted_qr(zs, ys);
  double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < k; ++j) {
    rmax = std::max(rmax, std::fabs(qr.r[j][j]));
    rmin = std::min(rmin, std::fabs(qr.r[j][j]));
  }
  constexpr double kMinRcond = 1e-10;
  if (!(rmin > kMinRcond * rmax)) {
    std::size_t rank = 0;
    while (rank < k && std::fabs(qr.r[rank][rank]) > kMinRcond * rmax) ++rank;
    std::set<std::size_t> involved;
    for (std::size_t d = rank; d < k; ++d) {
      involved.insert(qr.perm[d]);
      const Column c = back_substitute(qr.r, qr.r[d], rank);
      for (std::size_t i = 0; i < rank; ++i) {
        if (std::fabs(c[i]) > 1e-8) involved.insert(qr.perm[i]);
      }
    }
    std::vector<std::string> offending;
    std::string list;
    for (auto idx : involved) {
      offending.push_back(names[idx]);
      list += (list.empty() ? "" : ", ") + names[idx];
    }
    throw CollinearityError("predictors are collinear: " + list, offending);
  }

  const Column beta_piv = back_substitute(qr.r, qr.qty, k);

  // (R^T R)^-1 = R^-1 R^-T; only its diagonal is needed.
  std::vector<Column> rinv(k, Column(k, 0.0));  // rinv[row][col]
  for (std::size_t col = 0; col < k; ++col) {
    Column e(k, 0.0);
    e[col] = 1.0;
    const Column x = back_substitute(qr.r, e, k);
    for (std::size_t row = 0; row < k; ++row) rinv[row][col] = x[row];
  }

  RegressionFit fit;
  fit.names = names;
  fit.n = n;
  fit.df_residual = n - k - 1;
  fit.coefficients.assign(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) fit.coefficients[qr.perm[j]] = beta_piv[j];

  fit.fitted.assign(n, 0.0);
  fit.residuals.assign(n, 0.0);
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double f = 0.0;
    for (std::size_t j = 0; j < k; ++j) f += fit.coefficients[j] * zs[j][i];
    fit.fitted[i] = f;
    fit.residuals[i] = ys[i] - f;
    rss += fit.residuals[i] * fit.residuals[i];
  }
  const double tss = static_cast<double>(n - 1);
  fit.r_squared = std::clamp(1.0 - rss / tss, 0.0, 1.0);

  // An exact fit leaves rounding noise as residuals; treat it as zero
  // variance instead of letting that noise drive the t statistics.
  const bool exact = rss <= 1e-20 * tss;
  const double s2 = exact ? 0.0 : rss / static_cast<double>(fit.df_residual);
  fit.std_errors.assign(k, 0.0);
  fit.t_stats.assign(k, 0.0);
  fit.p_values.assign(k, 1.0);
  for (std::size_t j = 0; j < k; ++j) {
    double d = 0.0;
    for (std::size_t c = 0; c < k; ++c) d += rinv[j][c] * rinv[j][c];
    const std::size_t orig = qr.perm[j];
    const double beta = fit.coefficients[orig];
    const double se = std::sqrt(s2 * d);
    fit.std_errors[orig] = se;
    if (se > 0.0) {
      fit.t_stats[orig] = beta / se;
      fit.p_values[orig] = student_t_two_sided_p(
          fit.t_stats[orig], static_cast<double>(fit.df_residual));
    } else if (std::fabs(beta) > 1e-9) {
      fit.t_stats[orig] = std::copysign(std::numeric_limits<double>::infinity(), beta);
      fit.p_values[orig] = 0.0;
    }
  }
  return fit;
}

TTestResult two_sample_t(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() < 2 || ys.size() < 2) {
    throw DegenerateScaleError("t test needs at least two values per sample");
  }
  TTestResult r;
  r.mean_x = mean(xs);
  r.mean_y = mean(ys);
  double ssx = 0.0, ssy = 0.0;
  for (double x : xs) ssx += (x - r.mean_x) * (x - r.mean_x);
  for (double y : ys) ssy += (y - r.mean_y) * (y - r.mean_y);
  const double n1 = static_cast<double>(xs.size());
  const double n2 = static_cast<double>(ys.size());
  r.df = n1 + n2 - 2.0;
  const double pooled = (ssx + ssy) / r.df;
  const double diff = r.mean_x - r.mean_y;
  if (!(pooled > 0.0)) {
    if (diff == 0.0) {
      r.t = 0.0;
      r.p_two_sided = 1.0;
    } else {
      r.t = std::copysign(std::numeric_limits<double>::infinity(), diff);
      r.p_two_sided = 0.0;
      r.diagnostic = "pooled variance is zero but the means differ";
    }
    return r;
  }
  r.t = diff / std::sqrt(pooled * (1.0 / n1 + 1.0 / n2));
  r.p_two_sided = student_t_two_sided_p(r.t, r.df);
  return r;
}

}  // namespace paradise
