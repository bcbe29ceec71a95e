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

#include "paradise/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "paradise/avm.h"
#include "paradise/corpus_io.h"
#include "paradise/costs.h"
#include "paradise/error.h"
#include "paradise/fixtures.h"
#include "paradise/kappa.h"
#include "paradise/performance.h"
#include "paradise/report.h"
#include "paradise/segmenter.h"
#include "paradise/stats.h"

namespace paradise::cli {

namespace {

struct Options {
  std::vector<std::string> corpora;
  std::string units_path;
  std::string function_path;
  std::string pool_path;
  std::string out_path;
  std::string csv_path;
  std::vector<std::string> agents, users, scenarios, dialogues, attributes;
  std::vector<std::string> measures;
  std::string group = "dialogue";
  std::string by = "agent";
  std::vector<std::string> groups;
  double threshold = 0.05;
  bool precise = false;
  bool json = false;
  std::vector<std::string> subdialogue;
  std::vector<std::string> strategies;
  std::string granularity = "segment";
  std::vector<std::string> stated;
  std::vector<std::string> member_costs;
  double unit_kappa = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> unit_costs;
  std::string schema_path, matrix_path, agent = "A", prefix;
  bool random = false;
  std::size_t n_dialogues = 20, n_scenarios = 4, n_agents = 2;
  double error_rate = 0.2;
  std::uint64_t seed = 1;
};

// Left-aligned first column, right-aligned numbers.
std::string render_table(const std::vector<std::vector<std::string>> &rows,
                         const std::string &indent = "") {
  std::vector<std::size_t> widths;
  for (const auto &row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto &row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::size_t pad = widths[c] - row[c].size();
      if (c == 0) {
        line += row[c] + std::string(pad, ' ');
      } else {
        line += "  " + std::string(pad, ' ') + row[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string join(const std::vector<std::string> &xs, const std::string &sep) {
  std::string s;
  for (const auto &x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string &s, const std::string &what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw UsageError(what + ": '" + s + "' is not a number");
  }
  return v;
}

Corpus load_corpora(const std::vector<std::string> &paths) {
  if (paths.empty()) throw UsageError("no --corpus given");
  std::vector<Corpus> corpora;
  for (const auto &p : paths) corpora.push_back(load_corpus(p));
  return corpora.size() == 1 ? std::move(corpora.front()) : merge_corpora(corpora);
}

Corpus load_valid(const std::vector<std::string> &paths) {
  Corpus c = load_corpora(paths);
  require_valid(c);
  return c;
}

std::vector<CostMeasure> default_measures(const Corpus &corpus) {
  std::vector<CostMeasure> ms{CostMeasure::utterances("utt")};
  for (const auto &kind : event_kinds(corpus)) {
    ms.push_back(CostMeasure::events(kind == "repair" ? "rep" : kind, kind));
  }
  return ms;
}

std::vector<CostMeasure> corpus_measures(const Options &o, const Corpus &corpus) {
  if (o.measures.empty()) return default_measures(corpus);
  std::vector<CostMeasure> ms;
  for (const auto &spec : o.measures) ms.push_back(parse_measure(spec));
  return ms;
}

std::vector<std::string> measure_names(const std::vector<CostMeasure> &ms) {
  std::vector<std::string> names;
  for (const auto &m : ms) names.push_back(m.name);
  return names;
}

// Cost names present in every unit, sorted.
std::vector<std::string> common_costs(const std::vector<MeasuredUnit> &units) {
  if (units.empty()) return {};
  std::vector<std::string> names;
  for (const auto &[name, v] : units.front().costs) {
    bool everywhere = std::all_of(units.begin(), units.end(), [&](const auto &u) {
      return u.costs.contains(name);
    });
    if (everywhere) names.push_back(name);
  }
  return names;
}

Grouping grouping(const Options &o) {
  return o.group == "user" ? Grouping::kPerUser : Grouping::kPerDialogue;
}

struct UnitInput {
  std::vector<MeasuredUnit> units;
  std::vector<std::string> measures;
  bool from_table = false;
};

// Units come from a measurement table (--units, or a --corpus file holding
// a "units" document) or are measured on an annotated corpus.
UnitInput load_unit_input(const Options &o,
                          const std::vector<std::string> &wanted_measures) {
  UnitInput in;
  std::string table;
  if (!o.units_path.empty()) {
    table = read_file(o.units_path);
  } else if (o.corpora.size() == 1) {
    std::string text = read_file(o.corpora.front());
    if (is_units_document(text)) table = std::move(text);
  }
  if (!table.empty()) {
    in.from_table = true;
    in.units = parse_units(table);
    for (const auto &spec : wanted_measures) {
      in.measures.push_back(normalize_label(spec.substr(0, spec.find('='))));
    }
    if (wanted_measures.empty()) in.measures = common_costs(in.units);
    return in;
  }
  const Corpus corpus = load_valid(o.corpora);
  std::vector<CostMeasure> ms;
  if (wanted_measures.empty()) {
    ms = default_measures(corpus);
  } else {
    for (const auto &spec : wanted_measures) ms.push_back(parse_measure(spec));
  }
  in.units = measure_units(corpus, ms, grouping(o));
  in.measures = measure_names(ms);
  return in;
}

ScopeFilter scope_from(const Options &o, const AvmSchema &schema) {
  ScopeFilter f;
  f.agents.insert(o.agents.begin(), o.agents.end());
  f.users.insert(o.users.begin(), o.users.end());
  f.scenarios.insert(o.scenarios.begin(), o.scenarios.end());
  f.dialogues.insert(o.dialogues.begin(), o.dialogues.end());
  if (!o.attributes.empty()) {
    AttributeSet attrs;
    for (const auto &a : o.attributes) attrs.insert(schema.at(schema.index_of(a)).name);
    f.attributes = attrs;
  }
  return f;
}

AttributeSet attribute_list(const AvmSchema &schema,
                            const std::vector<std::string> &refs) {
  AttributeSet attrs;
  for (const auto &r : refs) attrs.insert(schema.at(schema.index_of(r)).name);
  if (attrs.empty()) throw UsageError("no attributes given");
  return attrs;
}

// ---- kappa ----------------------------------------------------------------

std::vector<std::string> kappa_row(const std::string &label,
                                   const ConfusionMatrix &m,
                                   const NumberFormat &num) {
  std::vector<std::string> row{label, std::to_string(m.total())};
  if (m.total() == 0) {
    row.insert(row.end(), {"-", "-", "undefined"});
    return row;
  }
  row.push_back(num(p_agreement(m)));
  row.push_back(num(p_chance(m)));
  try {
    row.push_back(num(kappa(m).kappa));
  } catch (const DegenerateChanceError &) {
    row.push_back("undefined");
  }
  return row;
}

std::string attribute_kappa_section(const ConfusionMatrix &m,
                                    const NumberFormat &num) {
  std::vector<std::vector<std::string>> rows{{"attribute", "T", "P(A)", "P(E)", "kappa"}};
  double sum = 0.0;
  std::size_t defined = 0, scoped = 0;
  for (const auto &b : m.blocks()) {
    bool in = false;
    for (auto c = b.begin; c < b.end; ++c) in = in || m.in_scope(c);
    if (!in) continue;
    ++scoped;
    const auto sub = restrict_to_attribute(m, b.attribute);
    auto row = kappa_row(b.attribute, sub, num);
    if (row.back() != "undefined") {
      sum += kappa(sub).kappa;
      ++defined;
    }
    rows.push_back(std::move(row));
  }
  std::string out = render_table(rows, "  ");
  if (defined == scoped && scoped > 0) {
    out += "  average attribute kappa: " + num(sum / static_cast<double>(defined)) + "\n";
  } else {
    out += "  average attribute kappa: undefined\n";
  }
  return out;
}

std::string describe_scope(const Options &o) {
  std::vector<std::string> parts;
  auto add = [&](const char *name, const std::vector<std::string> &v) {
    if (!v.empty()) parts.push_back(std::string(name) + "=" + join(v, ","));
  };
  add("agent", o.agents);
  add("user", o.users);
  add("scenario", o.scenarios);
  add("dialogue", o.dialogues);
  add("attribute", o.attributes);
  return parts.empty() ? "all" : join(parts, " ");
}

int cmd_kappa(const Options &o, std::ostream &out) {
  const Corpus corpus = load_valid(o.corpora);
  const NumberFormat num(o.precise);
  const ConfusionMatrix m = build_confusion(corpus, scope_from(o, corpus.schema));
  if (!o.csv_path.empty()) write_file(o.csv_path, matrix_to_csv(m));
  const KappaResult r = kappa(m);
  out << "scope: " << describe_scope(o) << "\n"
      << "T: " << r.t_total << "\n"
      << "P(A): " << num(r.p_a) << "\n"
      << "P(E): " << num(r.p_e) << "\n"
      << "kappa: " << num(r.kappa) << "\n"
      << "per-attribute kappa:\n"
      << attribute_kappa_section(m, num);
  return kOk;
}

// ---- validate / segment / costs ------------------------------------------

int cmd_validate(const Options &o, std::ostream &out) {
  const Corpus corpus = load_corpora(o.corpora);
  const auto report = validate_corpus(corpus);
  out << corpus.dialogues.size() << " dialogues, " << corpus.keys.size()
      << " scenarios, " << corpus.schema.size() << " attributes\n";
  if (report.ok()) {
    out << "valid\n";
    return kOk;
  }
  out << report.violations.size() << " violations:\n" << report.to_string();
  return kDataError;
}

std::vector<const Dialogue *> selected_dialogues(const Options &o,
                                                 const Corpus &corpus) {
  std::vector<const Dialogue *> out;
  std::set<std::string> wanted(o.dialogues.begin(), o.dialogues.end());
  for (const auto &d : corpus.dialogues) {
    if (wanted.empty() || wanted.contains(d.dialogue_id)) out.push_back(&d);
  }
  for (const auto &id : wanted) {
    bool found = std::any_of(out.begin(), out.end(),
                             [&](const Dialogue *d) { return d->dialogue_id == id; });
    if (!found) throw UsageError("no dialogue '" + id + "' in the corpus");
  }
  return out;
}

int cmd_segment(const Options &o, std::ostream &out) {
  const Corpus corpus = load_valid(o.corpora);
  std::vector<SegmentedDialogue> trees;
  for (const Dialogue *d : selected_dialogues(o, corpus)) {
    trees.push_back({d, derive_structure(corpus.schema, *d)});
  }
  if (o.json) {
    out << segment_trees_json(corpus.schema, trees);
    return kOk;
  }
  for (const auto &t : trees) {
    out << "dialogue " << t.dialogue->dialogue_id << "\n"
        << segment_tree_text(corpus.schema, *t.dialogue, t.root);
  }
  return kOk;
}

int cmd_costs(const Options &o, std::ostream &out, std::ostream &err) {
  const Corpus corpus = load_valid(o.corpora);
  const NumberFormat num(o.precise);
  const auto measures = corpus_measures(o, corpus);
  std::vector<std::string> warnings;
  const auto rows = cost_table(corpus, measures, &warnings);
  for (const auto &w : warnings) err << "warning: " << w << "\n";

  const auto selected = selected_dialogues(o, corpus);
  std::set<std::string> wanted;
  for (const auto *d : selected) wanted.insert(d->dialogue_id);

  if (o.subdialogue.empty()) {
    out << "dialogue";
    for (const auto &m : measures) out << "," << m.name;
    out << "\n";
    for (const auto &row : rows) {
      if (!wanted.contains(row.dialogue_id)) continue;
      out << row.dialogue_id;
      for (const auto &m : measures) out << "," << num(row.values.at(m.name));
      out << "\n";
    }
    return kOk;
  }
  const AttributeSet attrs = attribute_list(corpus.schema, o.subdialogue);
  out << "dialogue,segment,begin,end";
  for (const auto &m : measures) out << "," << m.name;
  out << "\n";
  for (const auto *d : selected) {
    const Segment root = derive_structure(corpus.schema, *d);
    for (const Segment *seg : segments_for_attributes(root, attrs)) {
      out << d->dialogue_id << "," << seg->segment_id << "," << seg->begin << ","
          << seg->end;
      for (const auto &m : measures) {
        out << "," << num(measure_cost(corpus.schema, *d, m, seg));
      }
      out << "\n";
    }
  }
  return kOk;
}

// ---- estimate / evaluate / compare ---------------------------------------

std::string fit_table(const RegressionFit &fit, const NumberFormat &num) {
  std::vector<std::vector<std::string>> rows{{"predictor", "coef", "se", "t", "p"}};
  for (std::size_t j = 0; j < fit.names.size(); ++j) {
    rows.push_back({fit.names[j], num(fit.coefficients[j]), num(fit.std_errors[j]),
                    num(fit.t_stats[j]), num(fit.p_values[j])});
  }
  return render_table(rows, "  ");
}

std::string function_equation(const PerformanceFunction &pf,
                              const NumberFormat &num) {
  std::string eq = "performance =";
  bool first = true;
  if (pf.uses_kappa) {
    eq += " " + num(pf.alpha) + " N(kappa)";
    first = false;
  }
  for (const auto &[name, w] : pf.cost_weights) {
    if (first) {
      eq += " " + num(-w) + " N(" + name + ")";
    } else {
      eq += (w >= 0 ? " - " : " + ") + num(std::fabs(w)) + " N(" + name + ")";
    }
    first = false;
  }
  return eq;
}

std::string estimate_summary(const Estimate &est, const NumberFormat &num) {
  std::ostringstream out;
  const auto &pv = est.function.provenance;
  out << "initial model (n=" << est.initial.n << ", df=" << est.initial.df_residual
      << ", R^2=" << num(est.initial.r_squared) << ")\n"
      << fit_table(est.initial, num);
  out << "pruned at p >= " << num(pv.threshold) << ": "
      << (pv.pruned.empty() ? "none" : join(pv.pruned, ", ")) << "\n";
  out << "final model (n=" << est.final_fit.n << ", df=" << est.final_fit.df_residual
      << ", R^2=" << num(est.final_fit.r_squared) << ")\n"
      << fit_table(est.final_fit, num);
  out << function_equation(est.function, num) << "\n";
  return out.str();
}

int cmd_estimate(const Options &o, std::ostream &out) {
  const UnitInput in = load_unit_input(o, o.measures);
  EstimationOptions opts;
  opts.threshold = o.threshold;
  const Estimate est = estimate_function(in.units, in.measures, opts);
  const std::string doc = function_to_json(est.function);
  if (o.out_path.empty()) {
    out << doc;
  } else {
    write_file(o.out_path, doc);
    out << estimate_summary(est, NumberFormat(o.precise));
  }
  return kOk;
}

NormalizationPool pool_for(const Options &o, const PerformanceFunction &pf) {
  if (o.pool_path.empty()) return estimation_pool(pf);
  return parse_pool(read_file(o.pool_path));
}

std::vector<std::string> function_measures(const Options &o,
                                           const PerformanceFunction &pf) {
  if (!o.measures.empty()) return o.measures;
  std::vector<std::string> names;
  for (const auto &[name, w] : pf.cost_weights) names.push_back(name);
  return names;
}

int cmd_evaluate(const Options &o, std::ostream &out) {
  const PerformanceFunction pf = parse_function(read_file(o.function_path));
  const NormalizationPool pool = pool_for(o, pf);
  const NumberFormat num(o.precise);
  std::vector<std::pair<std::string, double>> results;

  if (!std::isnan(o.unit_kappa) || !o.unit_costs.empty()) {
    std::map<std::string, double> costs;
    for (const auto &spec : o.unit_costs) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos) throw UsageError("--cost expects NAME=VALUE");
      costs[normalize_label(spec.substr(0, eq))] =
          parse_double(spec.substr(eq + 1), "--cost");
    }
    std::optional<double> k;
    if (!std::isnan(o.unit_kappa)) k = o.unit_kappa;
    results.emplace_back("unit", evaluate(pf, k, costs, pool));
  } else if (!o.units_path.empty() || !o.corpora.empty()) {
    const UnitInput in = load_unit_input(o, function_measures(o, pf));
    for (const auto &u : in.units) {
      results.emplace_back(u.unit_id, evaluate(pf, u, pool));
    }
  } else if (!pool.members.empty()) {
    for (const auto &m : pool.members) {
      results.emplace_back(m.label, evaluate(pf, m.kappa, m.costs, pool));
    }
  } else {
    throw UsageError("nothing to evaluate: give --units, --corpus, --kappa/--cost "
                     "or a --pool with members");
  }
  out << "unit,performance\n";
  for (const auto &[id, perf] : results) out << id << "," << num(perf) << "\n";
  return kOk;
}

std::string df_text(double df, const NumberFormat &num) {
  return df == std::floor(df) ? std::to_string(static_cast<long long>(df)) : num(df);
}

std::string group_key(const MeasuredUnit &u, const std::string &by) {
  return by == "user" ? u.user_id : u.agent_id;
}

std::string comparison_text(const PerformanceFunction &pf,
                            const std::vector<MeasuredUnit> &units,
                            const std::string &by,
                            std::vector<std::string> groups,
                            const NormalizationPool &pool,
                            const NumberFormat &num) {
  if (groups.empty()) {
    std::set<std::string> seen;
    for (const auto &u : units) seen.insert(group_key(u, by));
    groups.assign(seen.begin(), seen.end());
  }
  if (groups.size() != 2) {
    throw UsageError("comparison needs exactly two groups by " + by + "; found " +
                     std::to_string(groups.size()) + " (use --groups)");
  }
  std::vector<MeasuredUnit> a, b;
  for (const auto &u : units) {
    const auto key = group_key(u, by);
    if (key == groups[0]) a.push_back(u);
    if (key == groups[1]) b.push_back(u);
  }
  if (a.empty() || b.empty()) {
    throw UsageError("group '" + (a.empty() ? groups[0] : groups[1]) + "' has no units");
  }
  const auto c = compare_groups(pf, a, b, pool);
  std::ostringstream out;
  out << render_table({{by, "n", "mean performance"},
                       {groups[0], std::to_string(a.size()), num(c.mean_a)},
                       {groups[1], std::to_string(b.size()), num(c.mean_b)}},
                      "  ");
  out << "  pooled two-sample t test: t = " << num(c.test.t)
      << ", df = " << df_text(c.test.df, num) << ", p = " << num(c.test.p_two_sided)
      << " (two-sided)\n";
  if (!c.test.diagnostic.empty()) out << "  note: " << c.test.diagnostic << "\n";
  return out.str();
}

int cmd_compare(const Options &o, std::ostream &out) {
  const PerformanceFunction pf = parse_function(read_file(o.function_path));
  const NormalizationPool pool = pool_for(o, pf);
  const UnitInput in = load_unit_input(o, function_measures(o, pf));
  out << comparison_text(pf, in.units, o.by, o.groups, pool, NumberFormat(o.precise));
  return kOk;
}

// ---- pool -----------------------------------------------------------------

int cmd_pool(const Options &o, std::ostream &out, std::ostream &err) {
  const Corpus corpus = load_valid(o.corpora);
  std::map<std::string, std::string> labels;
  for (const auto &s : o.strategies) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--strategy expects AGENT=LABEL");
    labels[normalize_label(s.substr(0, eq))] = normalize_label(s.substr(eq + 1));
  }
  std::vector<CostMeasure> measures;
  for (const auto &spec : o.measures) measures.push_back(parse_measure(spec));
  SubdialogueOptions opts;
  opts.cost_granularity = o.granularity == "strategy" ? CostGranularity::kPerStrategy
                                                      : CostGranularity::kPerSegment;
  NormalizationPool pool = subdialogue_units(
      corpus, attribute_list(corpus.schema, o.attributes), labels, measures, opts);

  // NAME=MEAN:STD[:N]
  for (const auto &s : o.stated) {
    const auto eq = s.find('=');
    const auto parts = split(eq == std::string::npos ? "" : s.substr(eq + 1), ':');
    if (eq == std::string::npos || parts.size() < 2 || parts.size() > 3) {
      throw UsageError("--stated expects NAME=MEAN:STD[:N]");
    }
    NormParams p{parse_double(parts[0], "--stated"), parse_double(parts[1], "--stated"), 0};
    if (parts.size() == 3) p.n = static_cast<std::size_t>(parse_double(parts[2], "--stated"));
    check_norm_params(p, "--stated " + s);
    const auto name = normalize_label(s.substr(0, eq));
    if (name == kKappaPredictor) {
      pool.kappa_norm = p;
    } else {
      pool.cost_norms[name] = p;
    }
    pool.notes.push_back("statistics for '" + name + "' stated on the command line");
  }
  // LABEL:NAME=VALUE
  for (const auto &s : o.member_costs) {
    const auto colon = s.find(':');
    const auto eq = s.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon) {
      throw UsageError("--member-cost expects LABEL:NAME=VALUE");
    }
    const auto label = normalize_label(s.substr(0, colon));
    auto it = std::find_if(pool.members.begin(), pool.members.end(),
                           [&](const PoolMember &m) { return m.label == label; });
    if (it == pool.members.end()) throw UsageError("no pool member '" + label + "'");
    it->costs[normalize_label(s.substr(colon + 1, eq - colon - 1))] =
        parse_double(s.substr(eq + 1), "--member-cost");
  }
  for (const auto &n : pool.notes) err << "note: " << n << "\n";
  const auto doc = pool_to_json(pool);
  if (o.out_path.empty()) {
    out << doc;
  } else {
    write_file(o.out_path, doc);
  }
  return kOk;
}

// ---- report ---------------------------------------------------------------

std::string heading(const std::string &title) {
  return "\n" + title + "\n" + std::string(title.size(), '-') + "\n";
}

std::string performance_section(const std::vector<MeasuredUnit> &units,
                                const std::vector<std::string> &measures,
                                const Options &o, const NumberFormat &num) {
  std::ostringstream out;
  EstimationOptions opts;
  opts.threshold = o.threshold;
  Estimate est;
  try {
    est = estimate_function(units, measures, opts);
  } catch (const Error &e) {
    out << "not estimable: " << e.what() << "\n";
    return out.str();
  }
  out << estimate_summary(est, num);
  std::set<std::string> agents;
  for (const auto &u : units) agents.insert(u.agent_id);
  if (agents.size() == 2) {
    out << "comparison by agent (estimation pool):\n";
    try {
      out << comparison_text(est.function, units, "agent", {}, estimation_pool(est.function), num);
    } catch (const Error &e) {
      out << "  not comparable: " << e.what() << "\n";
    }
  }
  return out.str();
}

std::string correlation_section(const std::vector<MeasuredUnit> &units,
                                const std::vector<std::string> &measures,
                                const NumberFormat &num) {
  std::vector<std::string> names{kKappaPredictor};
  names.insert(names.end(), measures.begin(), measures.end());
  auto column = [&](const std::string &name) {
    std::vector<double> col;
    for (const auto &u : units) {
      if (name == kKappaPredictor) {
        if (!u.kappa) return std::vector<double>{};
        col.push_back(*u.kappa);
      } else {
        col.push_back(u.costs.at(name));
      }
    }
    return col;
  };
  std::ostringstream out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const auto x = column(names[i]), y = column(names[j]);
      out << "  corr(" << names[i] << ", " << names[j] << ") = ";
      try {
        out << num(pearson_r(x, y)) << "\n";
      } catch (const Error &) {
        out << "undefined\n";
      }
    }
  }
  return out.str();
}

void report_units(const UnitInput &in, const Options &o, std::ostream &out) {
  const NumberFormat num(o.precise);
  std::set<std::string> agents;
  for (const auto &u : in.units) agents.insert(u.agent_id);
  out << "paradise report\n"
      << "units: " << in.units.size() << "\n"
      << "agents: " << (agents.empty() ? "none" : join({agents.begin(), agents.end()}, ", ")) << "\n"
      << "measures: " << join(in.measures, ", ") << "\n";
  out << heading("correlations") << correlation_section(in.units, in.measures, num);
  out << heading("performance function") << performance_section(in.units, in.measures, o, num);
}

void report_corpus(const Corpus &corpus, const Options &o, std::ostream &out) {
  const NumberFormat num(o.precise);
  std::set<std::string> agents;
  std::size_t utterances = 0;
  bool all_rated = !corpus.dialogues.empty();
  for (const auto &d : corpus.dialogues) {
    agents.insert(d.agent_id);
    utterances += d.utterances.size();
    all_rated = all_rated && d.satisfaction.has_value();
  }
  out << "paradise report\n"
      << "dialogues: " << corpus.dialogues.size() << "\n"
      << "scenarios: " << corpus.keys.size() << "\n"
      << "attributes: " << corpus.schema.size() << "\n"
      << "agents: " << (agents.empty() ? "none" : join({agents.begin(), agents.end()}, ", ")) << "\n"
      << "utterances: " << utterances << "\n";
  if (corpus.dialogues.empty()) return;

  out << heading("task success");
  const ConfusionMatrix all = build_confusion(corpus);
  std::vector<std::vector<std::string>> rows{{"scope", "T", "P(A)", "P(E)", "kappa"}};
  rows.push_back(kappa_row("all", all, num));
  if (agents.size() > 1) {
    for (const auto &a : agents) {
      ScopeFilter f;
      f.agents.insert(a);
      rows.push_back(kappa_row("agent " + a, build_confusion(corpus, f), num));
    }
  }
  out << render_table(rows, "  ");
  for (const auto &a : agents) {
    ScopeFilter f;
    if (agents.size() > 1) f.agents.insert(a);
    out << "per-attribute kappa" << (agents.size() > 1 ? " (agent " + a + ")" : "")
        << ":\n"
        << attribute_kappa_section(build_confusion(corpus, f), num);
    if (agents.size() == 1) break;
  }

  if (utterances == 0) return;
  const auto measures = corpus_measures(o, corpus);
  out << heading("costs");
  const auto table = cost_table(corpus, measures);
  std::vector<std::vector<std::string>> crow{{"measure", "total", "mean", "min", "max"}};
  for (const auto &m : measures) {
    std::vector<double> xs;
    for (const auto &r : table) xs.push_back(r.values.at(m.name));
    double total = 0.0;
    for (double x : xs) total += x;
    crow.push_back({m.name, num(total), num(mean(xs)),
                    num(*std::min_element(xs.begin(), xs.end())),
                    num(*std::max_element(xs.begin(), xs.end()))});
  }
  out << render_table(crow, "  ");

  out << heading("discourse structure");
  std::vector<std::vector<std::string>> srows{{"dialogue", "utterances", "segments", "depth"}};
  for (const auto &d : corpus.dialogues) {
    const Segment root = derive_structure(corpus.schema, d);
    std::size_t count = 0;
    for_each_segment(root, [&count](const Segment &) { ++count; });
    srows.push_back({d.dialogue_id, std::to_string(d.utterances.size()),
                     std::to_string(count), std::to_string(depth(root))});
  }
  out << render_table(srows, "  ");

  if (!all_rated) return;
  out << heading("performance function");
  std::vector<MeasuredUnit> units;
  try {
    units = measure_units(corpus, measures, grouping(o));
  } catch (const Error &e) {
    out << "not estimable: " << e.what() << "\n";
    return;
  }
  out << performance_section(units, measure_names(measures), o, num);
}

int cmd_report(const Options &o, std::ostream &out) {
  bool table = !o.units_path.empty();
  if (!table && o.corpora.size() == 1) {
    table = is_units_document(read_file(o.corpora.front()));
  }
  if (table) {
    report_units(load_unit_input(o, o.measures), o, out);
    return kOk;
  }
  const Corpus corpus = load_corpora(o.corpora);
  const auto validation = validate_corpus(corpus);
  if (!validation.ok()) {
    throw DataError("corpus failed validation:\n" + validation.to_string());
  }
  report_corpus(corpus, o, out);
  return kOk;
}

// ---- synth ----------------------------------------------------------------

int cmd_synth(const Options &o, std::ostream &out) {
  if (o.schema_path.empty()) throw UsageError("--schema is required");
  const Corpus base = load_corpus(o.schema_path);
  Corpus result;
  if (o.random) {
    RandomCorpusOptions ro;
    ro.dialogues = o.n_dialogues;
    ro.scenarios = o.n_scenarios;
    ro.agents = o.n_agents;
    ro.error_rate = o.error_rate;
    ro.seed = o.seed;
    result = random_corpus(base.schema, ro);
  } else {
    if (o.matrix_path.empty()) throw UsageError("give --matrix or --random");
    const auto m = parse_matrix_csv(base.schema, read_file(o.matrix_path));
    result = expand_confusion_matrix(base.schema, m, o.agent,
                                     o.prefix.empty() ? o.agent : o.prefix);
  }
  const auto doc = corpus_to_json(result);
  if (o.out_path.empty()) {
    out << doc;
  } else {
    write_file(o.out_path, doc);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Dialogue agent evaluation: task success (kappa), dialogue "
               "costs, and performance functions fit to user satisfaction.",
               "paradise"};
  app.require_subcommand(1);
  Options o;

  auto corpus_opt = [&o](CLI::App *cmd, bool required) {
    auto *opt = cmd->add_option("--corpus", o.corpora,
                                "Corpus JSON file (repeat to merge corpora)");
    if (required) opt->required();
  };
  auto scope_opts = [&o](CLI::App *cmd) {
    cmd->add_option("--agent", o.agents, "Restrict to agent id (repeatable)");
    cmd->add_option("--user", o.users, "Restrict to user id (repeatable)");
    cmd->add_option("--scenario", o.scenarios, "Restrict to scenario id (repeatable)");
    cmd->add_option("--dialogue", o.dialogues, "Restrict to dialogue id (repeatable)");
  };
  auto measure_opt = [&o](CLI::App *cmd) {
    cmd->add_option("--measures,--measure", o.measures,
                    "Cost measures: NAME or NAME=utterances|event:KIND|sum:KEY")
        ->delimiter(',');
  };
  auto unit_opts = [&o](CLI::App *cmd) {
    cmd->add_option("--units", o.units_path, "Measurement table JSON");
    cmd->add_option("--group", o.group, "Unit of analysis for corpora")
        ->check(CLI::IsMember({"dialogue", "user"}));
  };
  auto precise_opt = [&o](CLI::App *cmd) {
    cmd->add_flag("--precise", o.precise, "Print numbers at full precision");
  };

  auto *validate = app.add_subcommand("validate", "Check a corpus against its schema and keys");
  corpus_opt(validate, true);

  auto *segment = app.add_subcommand("segment", "Derive the task-defined discourse structure");
  corpus_opt(segment, true);
  segment->add_option("--dialogue", o.dialogues, "Dialogue id (repeatable)");
  segment->add_flag("--json", o.json, "Emit JSON instead of an indented tree");

  auto *kappa_cmd = app.add_subcommand("kappa", "Confusion matrix and kappa");
  corpus_opt(kappa_cmd, true);
  scope_opts(kappa_cmd);
  kappa_cmd->add_option("--attribute", o.attributes, "Restrict to attribute (repeatable)");
  kappa_cmd->add_option("--csv", o.csv_path, "Write the confusion matrix as CSV");
  precise_opt(kappa_cmd);

  auto *costs = app.add_subcommand("costs", "Per-dialogue cost table (CSV)");
  corpus_opt(costs, true);
  measure_opt(costs);
  costs->add_option("--dialogue", o.dialogues, "Dialogue id (repeatable)");
  costs->add_option("--subdialogue", o.subdialogue,
                    "Cost the segments about exactly these attributes")
      ->delimiter(',');
  precise_opt(costs);

  auto *estimate = app.add_subcommand("estimate", "Fit a performance function");
  corpus_opt(estimate, false);
  unit_opts(estimate);
  measure_opt(estimate);
  estimate->add_option("--threshold", o.threshold, "Pruning significance level")
      ->check(CLI::Range(0.0, 1.0));
  estimate->add_option("--out", o.out_path, "Write the function JSON here");
  precise_opt(estimate);

  auto *evaluate_cmd = app.add_subcommand("evaluate", "Apply a saved performance function");
  evaluate_cmd->add_option("--function", o.function_path, "Function JSON")->required();
  evaluate_cmd->add_option("--pool", o.pool_path, "Normalization pool JSON");
  corpus_opt(evaluate_cmd, false);
  unit_opts(evaluate_cmd);
  measure_opt(evaluate_cmd);
  evaluate_cmd->add_option("--kappa", o.unit_kappa, "Kappa of a single unit");
  evaluate_cmd->add_option("--cost", o.unit_costs, "NAME=VALUE for a single unit");
  precise_opt(evaluate_cmd);

  auto *compare = app.add_subcommand("compare", "Compare two groups under a function");
  compare->add_option("--function", o.function_path, "Function JSON")->required();
  compare->add_option("--pool", o.pool_path, "Normalization pool JSON");
  corpus_opt(compare, false);
  unit_opts(compare);
  measure_opt(compare);
  compare->add_option("--by", o.by, "Group units by")
      ->check(CLI::IsMember({"agent", "user"}));
  compare->add_option("--groups", o.groups, "The two group ids")->delimiter(',');
  precise_opt(compare);

  auto *pool = app.add_subcommand("pool", "Build a comparable-strategy normalization pool");
  corpus_opt(pool, true);
  pool->add_option("--attributes", o.attributes, "Subdialogue attributes")
      ->delimiter(',')
      ->required();
  pool->add_option("--strategy", o.strategies, "AGENT=LABEL (repeatable)")->required();
  measure_opt(pool);
  pool->add_option("--granularity", o.granularity, "Cost statistics over")
      ->check(CLI::IsMember({"segment", "strategy"}));
  pool->add_option("--stated", o.stated, "NAME=MEAN:STD[:N] stated pool statistics");
  pool->add_option("--member-cost", o.member_costs, "LABEL:NAME=VALUE member cost");
  pool->add_option("--out", o.out_path, "Write the pool JSON here");

  auto *report = app.add_subcommand("report", "Full evaluation report");
  corpus_opt(report, false);
  unit_opts(report);
  measure_opt(report);
  report->add_option("--threshold", o.threshold, "Pruning significance level")
      ->check(CLI::Range(0.0, 1.0));
  precise_opt(report);

  auto *synth = app.add_subcommand("synth", "Synthesize a corpus");
  synth->add_option("--schema", o.schema_path, "Corpus JSON providing the schema")->required();
  synth->add_option("--matrix", o.matrix_path, "Confusion matrix CSV to expand");
  synth->add_option("--agent", o.agent, "Agent id for an expanded matrix");
  synth->add_option("--prefix", o.prefix, "Dialogue id prefix");
  synth->add_flag("--random", o.random, "Generate a random corpus");
  synth->add_option("--dialogues", o.n_dialogues, "Random: dialogue count");
  synth->add_option("--scenarios", o.n_scenarios, "Random: scenario count");
  synth->add_option("--agents", o.n_agents, "Random: agent count");
  synth->add_option("--error-rate", o.error_rate, "Random: AVM error rate")
      ->check(CLI::Range(0.0, 1.0));
  synth->add_option("--seed", o.seed, "Random: seed");
  synth->add_option("--out", o.out_path, "Write the corpus JSON here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    auto needs_input = [&o] {
      if (o.corpora.empty() && o.units_path.empty()) {
        throw UsageError("give --corpus or --units");
      }
    };
    if (validate->parsed()) return cmd_validate(o, out);
    if (segment->parsed()) return cmd_segment(o, out);
    if (kappa_cmd->parsed()) return cmd_kappa(o, out);
    if (costs->parsed()) return cmd_costs(o, out, err);
    if (estimate->parsed()) {
      needs_input();
      return cmd_estimate(o, out);
    }
    if (evaluate_cmd->parsed()) return cmd_evaluate(o, out);
    if (compare->parsed()) {
      needs_input();
      return cmd_compare(o, out);
    }
    if (pool->parsed()) return cmd_pool(o, out, err);
    if (report->parsed()) {
      needs_input();
      return cmd_report(o, out);
    }
    if (synth->parsed()) return cmd_synth(o, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

}  // namespace paradise::cli
