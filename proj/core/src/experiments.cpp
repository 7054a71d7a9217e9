#include "udecide/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "udecide/error.hpp"
#include "udecide/parallel.hpp"
#include "udecide/rng.hpp"

namespace udecide {

std::string_view to_string(ScenarioTag tag) noexcept {
  switch (tag) {
    case ScenarioTag::cost_only: return "cost-only";
    case ScenarioTag::prob_only: return "prob-only";
    case ScenarioTag::both: return "both";
  }
  return "?";
}

std::optional<ScenarioTag> parse_scenario(std::string_view text) noexcept {
  for (ScenarioTag tag : kAllScenarios) {
    if (text == to_string(tag)) return tag;
  }
  return std::nullopt;
}

NoiseSpec Scenario::noise(ProbFamily family_p, CostFamily family_c,
                          bool delta_mode) const {
  NoiseSpec out;
  out.delta_mode = delta_mode;
  if (sigma == 0.0) return out;
  if (tag != ScenarioTag::cost_only) {
    out.sigma_p0 = sigma;
    out.family_p = family_p;
  }
  if (tag != ScenarioTag::prob_only) {
    out.sigma_c01 = sigma;
    out.sigma_c10 = sigma;
    out.family_c = family_c;
  }
  return out;
}

std::string_view to_string(SweepKind kind) noexcept {
  switch (kind) {
    case SweepKind::figure1: return "figure1";
    case SweepKind::figure2: return "figure2";
    case SweepKind::custom: return "custom";
  }
  return "?";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view text) noexcept {
  if (text == "figure1") return SweepKind::figure1;
  if (text == "figure2") return SweepKind::figure2;
  if (text == "custom") return SweepKind::custom;
  return std::nullopt;
}

std::string_view to_string(CostCombination mode) noexcept {
  return mode == CostCombination::paired ? "paired" : "cross";
}

std::optional<CostCombination> parse_cost_combination(
    std::string_view text) noexcept {
  if (text == "paired") return CostCombination::paired;
  if (text == "cross") return CostCombination::cross;
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (sigma_grid.empty()) throw InvalidArgument("sigma_grid must be non-empty");
  if (p0_grid.empty()) throw InvalidArgument("p0_grid must be non-empty");
  if (cost_pairs.empty()) throw InvalidArgument("cost_pairs must be non-empty");
  for (double s : sigma_grid) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw InvalidArgument("sigma_grid values must be finite and >= 0");
    }
  }
  if (!std::is_sorted(sigma_grid.begin(), sigma_grid.end())) {
    throw InvalidArgument("sigma_grid must be sorted ascending");
  }
  for (double p0 : p0_grid) {
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
      throw InvalidArgument("p0_grid values must lie in [0, 1]");
    }
  }
  for (const CostPair& c : cost_pairs) {
    if (!(c.c01 >= 0.0) || !(c.c10 >= 0.0) || !std::isfinite(c.c01) ||
        !std::isfinite(c.c10)) {
      throw InvalidArgument("cost_pairs values must be finite and >= 0");
    }
  }
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (family_p == ProbFamily::exact || family_c == CostFamily::exact) {
    throw InvalidArgument(
        "sweep families must be noisy; sigma = 0 cells use 'exact' "
        "automatically");
  }
}

std::vector<double> default_sigma_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i * 0.05);
  return grid;
}

SweepConfig figure1_config() {
  SweepConfig cfg;
  cfg.kind = SweepKind::figure1;
  cfg.sigma_grid = default_sigma_grid();
  cfg.p0_grid = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
  cfg.cost_pairs = {{0.3, 0.5}};
  cfg.run_mc = false;
  return cfg;
}

std::vector<CostPair> draw_cost_pairs(std::uint64_t master_seed,
                                      std::size_t count,
                                      CostCombination mode) {
  RngStream rng(master_seed, kCostPairStream, 0);
  std::vector<CostPair> pairs;
  if (mode == CostCombination::paired) {
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double c01 = rng.uniform(0.2, 0.4);
      const double c10 = rng.uniform(0.4, 0.6);
      pairs.push_back({c01, c10});
    }
    return pairs;
  }
  std::vector<double> c01(count);
  std::vector<double> c10(count);
  for (double& c : c01) c = rng.uniform(0.2, 0.4);
  for (double& c : c10) c = rng.uniform(0.4, 0.6);
  pairs.reserve(count * count);
  for (double a : c01) {
    for (double b : c10) pairs.push_back({a, b});
  }
  return pairs;
}

SweepConfig figure2_config(std::uint64_t master_seed, CostCombination mode) {
  SweepConfig cfg;
  cfg.kind = SweepKind::figure2;
  cfg.sigma_grid = default_sigma_grid();
  for (int i = 1; i <= 25; ++i) cfg.p0_grid.push_back(i / 26.0);
  cfg.cost_pairs = draw_cost_pairs(master_seed, 25, mode);
  cfg.cost_combination = mode;
  cfg.trials = kFigure2Trials;
  cfg.master_seed = master_seed;
  cfg.run_mc = true;
  cfg.family_p = ProbFamily::beta;
  cfg.family_c = CostFamily::uniform_truncated;
  return cfg;
}

SweepRow run_cell(const SweepConfig& config, const Scenario& scenario,
                  double p0, const CostPair& costs, std::uint64_t stream_id) {
  const DecisionProblem problem(p0, costs.c01, costs.c10);
  const NoiseSpec noise =
      scenario.noise(config.family_p, config.family_c, config.delta_mode);

  SweepRow row;
  row.scenario = scenario.tag;
  row.p0 = p0;
  row.c01 = costs.c01;
  row.c10 = costs.c10;
  row.sigma_p = noise.sigma_p0;
  row.sigma_c01 = noise.sigma_c01;
  row.sigma_c10 = noise.sigma_c10;
  row.trials = config.trials;
  row.seed = config.master_seed;
  row.stream_id = stream_id;

  const AnalyticSensitivity a = expected_increase(problem, noise);
  row.delta = a.delta;
  row.l_star = a.l_star;
  row.var_delta_hat = a.var_delta_hat;
  row.p_err_analytic = a.p_err;
  row.delta_inc_analytic = a.delta_inc;
  row.norm_inc_analytic = a.norm_inc;

  if (config.run_mc) {
    try {
      const SimulationResult sim = simulate(
          {problem, noise, config.trials, config.master_seed, stream_id});
      row.p_err_mc = sim.p_err_hat;
      row.delta_inc_mc = sim.delta_inc_hat;
      row.norm_inc_mc = sim.norm_inc_hat;
      row.clamped = sim.clamp_flag;
      row.truncations = sim.truncation_count;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  return row;
}

SweepRow evaluate_problem(const SimulationConfig& config, bool run_mc,
                          unsigned threads) {
  config.validate();
  const NoiseSpec& noise = config.noise;
  const bool noisy_p = noise.sigma_p0 > 0.0;
  const bool noisy_c = noise.sigma_c01 > 0.0 || noise.sigma_c10 > 0.0;

  SweepRow row;
  row.scenario = noisy_p == noisy_c ? ScenarioTag::both
                 : noisy_c          ? ScenarioTag::cost_only
                                    : ScenarioTag::prob_only;
  row.p0 = config.problem.p0();
  row.c01 = config.problem.c01();
  row.c10 = config.problem.c10();
  row.sigma_p = noise.sigma_p0;
  row.sigma_c01 = noise.sigma_c01;
  row.sigma_c10 = noise.sigma_c10;
  row.trials = config.trials;
  row.seed = config.master_seed;
  row.stream_id = config.stream_id;

  const AnalyticSensitivity a = expected_increase(config.problem, noise);
  row.delta = a.delta;
  row.l_star = a.l_star;
  row.var_delta_hat = a.var_delta_hat;
  row.p_err_analytic = a.p_err;
  row.delta_inc_analytic = a.delta_inc;
  row.norm_inc_analytic = a.norm_inc;
  if (run_mc) {
    const SimulationResult sim = simulate(config, threads);
    row.p_err_mc = sim.p_err_hat;
    row.delta_inc_mc = sim.delta_inc_hat;
    row.norm_inc_mc = sim.norm_inc_hat;
    row.clamped = sim.clamp_flag;
    row.truncations = sim.truncation_count;
  }
  return row;
}

SweepRow summarize(ScenarioTag tag, double sigma,
                   const std::vector<const SweepRow*>& cells) {
  SweepRow out;
  out.scenario = tag;
  out.summary = true;
  out.cells = cells.size();
  out.sigma_p = tag != ScenarioTag::cost_only ? sigma : 0.0;
  out.sigma_c01 = tag != ScenarioTag::prob_only ? sigma : 0.0;
  out.sigma_c10 = out.sigma_c01;
  if (cells.empty()) return out;

  const SweepRow& first = *cells.front();
  out.trials = first.trials;
  out.seed = first.seed;

  double p_err = 0.0, delta_inc = 0.0, norm_inc = 0.0;
  double p_err_mc = 0.0, delta_inc_mc = 0.0, norm_inc_mc = 0.0;
  std::size_t n_norm = 0, n_mc = 0, n_norm_mc = 0;
  bool any_mc = false;
  for (const SweepRow* row : cells) {
    p_err += row->p_err_analytic;
    delta_inc += row->delta_inc_analytic;
    if (row->norm_inc_analytic) {
      norm_inc += *row->norm_inc_analytic;
      ++n_norm;
    }
    out.clamped = out.clamped || row->clamped;
    out.truncations += row->truncations;
    if (row->error) any_mc = true;
    if (row->p_err_mc) {
      any_mc = true;
      p_err_mc += *row->p_err_mc;
      delta_inc_mc += *row->delta_inc_mc;
      ++n_mc;
      if (row->norm_inc_mc) {
        norm_inc_mc += *row->norm_inc_mc;
        ++n_norm_mc;
      }
    }
  }
  const double n = static_cast<double>(cells.size());
  out.p_err_analytic = p_err / n;
  out.delta_inc_analytic = delta_inc / n;
  if (n_norm > 0) out.norm_inc_analytic = norm_inc / static_cast<double>(n_norm);
  out.excluded_analytic = cells.size() - n_norm;

  if (any_mc) {
    if (n_mc > 0) {
      out.p_err_mc = p_err_mc / static_cast<double>(n_mc);
      out.delta_inc_mc = delta_inc_mc / static_cast<double>(n_mc);
    }
    if (n_norm_mc > 0) {
      out.norm_inc_mc = norm_inc_mc / static_cast<double>(n_norm_mc);
    }
    out.excluded_mc = cells.size() - n_norm_mc;
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads) {
  config.validate();

  struct CellIndex {
    Scenario scenario;
    double p0;
    const CostPair* costs;
  };
  std::vector<CellIndex> index;
  index.reserve(config.cell_count());
  for (ScenarioTag tag : kAllScenarios) {
    for (double sigma : config.sigma_grid) {
      for (double p0 : config.p0_grid) {
        for (const CostPair& costs : config.cost_pairs) {
          index.push_back({{tag, sigma}, p0, &costs});
        }
      }
    }
  }

  std::vector<SweepRow> rows(index.size());
  parallel_for(index.size(), threads, [&](std::size_t i) {
    const CellIndex& cell = index[i];
    rows[i] = run_cell(config, cell.scenario, cell.p0, *cell.costs, i);
  });

  const std::size_t per_group = config.p0_grid.size() * config.cost_pairs.size();
  std::vector<SweepRow> summaries;
  for (std::size_t begin = 0; begin < rows.size(); begin += per_group) {
    std::vector<const SweepRow*> group;
    group.reserve(per_group);
    for (std::size_t i = begin; i < begin + per_group; ++i) {
      group.push_back(&rows[i]);
    }
    summaries.push_back(
        summarize(index[begin].scenario.tag, index[begin].scenario.sigma, group));
  }
  rows.insert(rows.end(), summaries.begin(), summaries.end());
  return rows;
}

}  // namespace udecide
