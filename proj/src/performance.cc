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

#include "paradise/performance.h"

#include <sstream>

#include "paradise/error.h"
#include "paradise/kappa.h"
#include "paradise/segmenter.h"

namespace paradise {

namespace {

double unit_kappa(const Corpus &corpus, const ScopeFilter &scope,
                  const std::string &unit) {
  try {
    return kappa(build_confusion(corpus, scope)).kappa;
  } catch (const DegenerateChanceError &) {
    throw DegenerateChanceError("unit '" + unit +
                                "': kappa undefined, its keys use a single value");
  }
}

}  // namespace

std::vector<MeasuredUnit> measure_units(const Corpus &corpus,
                                        const std::vector<CostMeasure> &measures,
                                        Grouping grouping) {
  std::vector<MeasuredUnit> units;
  if (grouping == Grouping::kPerDialogue) {
    for (const auto &d : corpus.dialogues) {
      MeasuredUnit u{d.dialogue_id, d.agent_id, d.user_id, d.satisfaction, {}, {}};
      ScopeFilter scope;
      scope.dialogues.insert(d.dialogue_id);
      u.kappa = unit_kappa(corpus, scope, u.unit_id);
      for (const auto &m : measures) {
        u.costs[m.name] = measure_cost(corpus.schema, d, m, WholeDialogue{});
      }
      units.push_back(std::move(u));
    }
    return units;
  }

  // Users in order of first appearance.
  std::vector<std::string> order;
  std::map<std::string, std::vector<const Dialogue *>> by_user;
  for (const auto &d : corpus.dialogues) {
    auto &list = by_user[d.user_id];
    if (list.empty()) order.push_back(d.user_id);
    list.push_back(&d);
  }
  for (const auto &user : order) {
    const auto &dialogues = by_user[user];
    MeasuredUnit u;
    u.unit_id = user;
    u.user_id = user;
    u.agent_id = dialogues.front()->agent_id;
    for (const auto *d : dialogues) {
      if (d->agent_id != u.agent_id) {
        throw UsageError("user '" + user +
                         "' talked to several agents; group per dialogue instead");
      }
    }
    ScopeFilter scope;
    scope.users.insert(user);
    u.kappa = unit_kappa(corpus, scope, user);
    double sat = 0.0;
    bool all_rated = true;
    for (const auto *d : dialogues) {
      if (d->satisfaction) {
        sat += *d->satisfaction;
      } else {
        all_rated = false;
      }
    }
    if (all_rated) u.satisfaction = sat / static_cast<double>(dialogues.size());
    for (const auto &m : measures) {
      double sum = 0.0;
      for (const auto *d : dialogues) {
        sum += measure_cost(corpus.schema, *d, m, WholeDialogue{});
      }
      u.costs[m.name] = sum / static_cast<double>(dialogues.size());
    }
    units.push_back(std::move(u));
  }
  return units;
}

namespace {

std::vector<double> predictor_column(const std::vector<MeasuredUnit> &units,
                                     const std::string &name) {
  std::vector<double> col;
  col.reserve(units.size());
  for (const auto &u : units) {
    col.push_back(name == kKappaPredictor ? *u.kappa : u.costs.at(name));
  }
  return col;
}

void require_inputs(const std::vector<MeasuredUnit> &units,
                    const std::vector<std::string> &measures) {
  std::vector<std::string> unrated, missing;
  for (const auto &u : units) {
    if (!u.satisfaction) unrated.push_back(u.unit_id);
    if (!u.kappa) missing.push_back(u.unit_id + " (kappa)");
    for (const auto &m : measures) {
      if (!u.costs.contains(m)) missing.push_back(u.unit_id + " (" + m + ")");
    }
  }
  auto join = [](const std::vector<std::string> &xs) {
    std::string s;
    for (const auto &x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  if (!unrated.empty()) {
    throw UsageError("estimation needs a satisfaction rating for every unit; "
                     "missing for: " + join(unrated));
  }
  if (!missing.empty()) throw UsageError("missing values: " + join(missing));
}

}  // namespace

Estimate estimate_function(const std::vector<MeasuredUnit> &units,
                           const std::vector<std::string> &measures,
                           const EstimationOptions &options) {
  if (units.empty()) throw UsageError("no units to estimate from");
  std::set<std::string> seen{kKappaPredictor};
  for (const auto &m : measures) {
    if (!seen.insert(m).second) throw UsageError("measure '" + m + "' repeated");
  }
  require_inputs(units, measures);

  std::vector<double> us;
  for (const auto &u : units) us.push_back(*u.satisfaction);

  std::vector<std::string> predictors{kKappaPredictor};
  predictors.insert(predictors.end(), measures.begin(), measures.end());
  auto fit_on = [&](const std::vector<std::string> &names) {
    std::vector<std::vector<double>> cols;
    for (const auto &name : names) cols.push_back(predictor_column(units, name));
    return ols_standardized(us, cols, names);
  };

  Estimate est;
  est.initial = fit_on(predictors);
  std::vector<std::string> survivors, pruned;
  for (std::size_t j = 0; j < predictors.size(); ++j) {
    (est.initial.p_values[j] < options.threshold ? survivors : pruned)
        .push_back(predictors[j]);
  }
  if (survivors.empty()) {
    throw EmptyModelError("no predictor is significant at p < " +
                          std::to_string(options.threshold));
  }
  est.final_fit = pruned.empty() ? est.initial : fit_on(survivors);

  auto &pf = est.function;
  pf.uses_kappa = false;
  pf.kappa_norm = norm_params(predictor_column(units, kKappaPredictor));
  for (std::size_t j = 0; j < survivors.size(); ++j) {
    const auto &name = survivors[j];
    const double coef = est.final_fit.coefficients[j];
    if (name == kKappaPredictor) {
      pf.uses_kappa = true;
      pf.alpha = coef;
    } else {
      pf.cost_weights[name] = -coef;
      pf.cost_norms[name] = norm_params(predictor_column(units, name));
    }
    pf.provenance.p_values[name] = est.final_fit.p_values[j];
  }
  pf.provenance.n = units.size();
  pf.provenance.df_residual = est.final_fit.df_residual;
  pf.provenance.r_squared = est.final_fit.r_squared;
  pf.provenance.threshold = options.threshold;
  pf.provenance.predictors = predictors;
  pf.provenance.pruned = pruned;
  return est;
}

NormalizationPool estimation_pool(const PerformanceFunction &pf) {
  NormalizationPool pool;
  pool.pool_id = "estimation";
  pool.kappa_norm = pf.kappa_norm;
  pool.cost_norms = pf.cost_norms;
  return pool;
}

double evaluate(const PerformanceFunction &pf, std::optional<double> kappa,
                const std::map<std::string, double> &costs,
                const NormalizationPool &pool) {
  double perf = 0.0;
  if (pf.uses_kappa) {
    if (!kappa) throw UsageError("unit has no kappa value");
    if (!pool.kappa_norm) {
      throw UsageError("pool '" + pool.pool_id + "' has no kappa statistics");
    }
    check_norm_params(*pool.kappa_norm, "kappa pool");
    perf += pf.alpha * z_score(*kappa, *pool.kappa_norm);
  }
  for (const auto &[name, weight] : pf.cost_weights) {
    auto value = costs.find(name);
    if (value == costs.end()) {
      throw UsageError("unit has no value for cost '" + name + "'");
    }
    auto norm = pool.cost_norms.find(name);
    if (norm == pool.cost_norms.end()) {
      throw UsageError("pool '" + pool.pool_id + "' has no statistics for '" +
                       name + "'");
    }
    check_norm_params(norm->second, "pool for '" + name + "'");
    perf -= weight * z_score(value->second, norm->second);
  }
  return perf;
}

GroupComparison compare_groups(const PerformanceFunction &pf,
                               const std::vector<MeasuredUnit> &group_a,
                               const std::vector<MeasuredUnit> &group_b,
                               const NormalizationPool &pool) {
  if (group_a.empty() || group_b.empty()) {
    throw UsageError("both comparison groups need at least one unit");
  }
  GroupComparison c;
  for (const auto &u : group_a) c.performance_a.push_back(evaluate(pf, u, pool));
  for (const auto &u : group_b) c.performance_b.push_back(evaluate(pf, u, pool));
  c.mean_a = mean(c.performance_a);
  c.mean_b = mean(c.performance_b);
  c.test = two_sample_t(c.performance_a, c.performance_b);
  return c;
}

NormalizationPool subdialogue_units(
    const Corpus &corpus, const AttributeSet &attrs,
    const std::map<std::string, std::string> &strategy_labels,
    const std::vector<CostMeasure> &measures, const SubdialogueOptions &options) {
  if (attrs.empty()) throw UsageError("subdialogue pool needs attributes");
  AttributeSet canonical;
  for (const auto &a : attrs) {
    canonical.insert(corpus.schema.at(corpus.schema.index_of(a)).name);
  }

  std::map<std::string, std::set<std::string>> agents_by_label;
  for (const auto &[agent, label] : strategy_labels) {
    agents_by_label[label].insert(agent);
  }
  if (agents_by_label.size() < 2) {
    throw DegeneratePoolError("a comparable-strategy pool needs at least two "
                              "strategy labels");
  }

  NormalizationPool pool;
  pool.pool_id = corpus.schema.abbreviate(canonical);
  std::vector<double> kappas;
  std::map<std::string, std::vector<double>> segment_costs;
  std::map<std::string, std::vector<double>> strategy_costs;

  for (const auto &[label, agents] : agents_by_label) {
    PoolMember member;
    member.label = label;
    ScopeFilter scope;
    scope.agents = agents;
    scope.attributes = canonical;
    try {
      member.kappa = kappa(build_confusion(corpus, scope)).kappa;
    } catch (const UndefinedMeasureError &) {
      throw UsageError("strategy '" + label + "' has no dialogues in the corpus");
    }
    kappas.push_back(*member.kappa);

    std::size_t segments = 0;
    std::map<std::string, double> sums;
    for (const auto &d : corpus.dialogues) {
      if (!agents.contains(d.agent_id)) continue;
      const Segment root = derive_structure(corpus.schema, d);
      for (const Segment *seg : segments_for_attributes(root, canonical)) {
        ++segments;
        for (const auto &m : measures) {
          const double c = measure_cost(corpus.schema, d, m, seg);
          sums[m.name] += c;
          segment_costs[m.name].push_back(c);
        }
      }
    }
    if (segments > 0) {
      for (const auto &m : measures) {
        member.costs[m.name] = sums[m.name] / static_cast<double>(segments);
        strategy_costs[m.name].push_back(member.costs[m.name]);
      }
    }
    std::ostringstream desc;
    desc << (agents.size() == 1 ? "agent" : "agents");
    for (const auto &a : agents) desc << " " << a;
    desc << "; " << segments << (segments == 1 ? " segment" : " segments") << " about "
         << corpus.schema.abbreviate(canonical);
    member.scope = desc.str();
    pool.members.push_back(std::move(member));
  }

  try {
    pool.kappa_norm = norm_params(kappas);
  } catch (const DegenerateScaleError &) {
    throw DegeneratePoolError("every strategy has the same kappa; the pool has "
                              "no spread to normalize against");
  }

  const auto &cost_source =
      options.cost_granularity == CostGranularity::kPerSegment ? segment_costs
                                                                : strategy_costs;
  for (const auto &m : measures) {
    auto it = cost_source.find(m.name);
    if (it == cost_source.end() || it->second.size() < 2) {
      pool.notes.push_back("cost '" + m.name +
                           "': too few matching segments; state its pool "
                           "statistics explicitly");
      continue;
    }
    try {
      pool.cost_norms[m.name] = norm_params(it->second);
    } catch (const DegenerateScaleError &) {
      pool.notes.push_back("cost '" + m.name +
                           "': constant across the pool; state its statistics "
                           "explicitly");
    }
  }
  return pool;
}

}  // namespace paradise
