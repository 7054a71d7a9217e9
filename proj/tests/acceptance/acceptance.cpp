// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance --only N   run criterion N

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "oracles/erf_oracle.hpp"
#include "udecide/decision.hpp"
#include "udecide/estimators.hpp"
#include "udecide/experiments.hpp"
#include "udecide/montecarlo.hpp"
#include "udecide/parallel.hpp"
#include "udecide/rng.hpp"
#include "udecide/special_functions.hpp"

namespace {

using namespace udecide;

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Analytic identities over a 6 x 5 x 11 grid.
Outcome criterion1() {
  Outcome o;
  const std::vector<double> p0s{0.05, 0.2, 0.35, 0.5, 0.65, 0.95};
  const std::vector<CostPair> pairs{{0.3, 0.5}, {0.5, 0.3}, {1.0, 1.0}, {0.2, 0.6}, {2.0, 0.5}};
  const std::vector<double> sigmas = default_sigma_grid();
  for (double p0 : p0s) {
    for (const CostPair& c : pairs) {
      const DecisionProblem problem(p0, c.c01, c.c10);
      const double d = delta(problem);
      double prev_inc = -1.0;
      for (double s : sigmas) {
        const NoiseSpec noise = Scenario{ScenarioTag::both, s}.noise(
            ProbFamily::beta, CostFamily::uniform_truncated, false);
        const AnalyticSensitivity a = expected_increase(problem, noise);
        const std::string at = fmt("p0=%g c=(%g,%g) sigma=%g", p0, c.c01, c.c10, s);
        o.check(std::abs(a.delta_inc - a.p_err * std::abs(d)) <= 1e-15 * std::abs(d),
                "Delta != P_err*|delta| at " + at);
        o.check(a.p_err >= 0.0 && a.p_err <= 0.5, "P_err outside [0, 1/2] at " + at);
        o.check(a.delta_inc <= std::abs(d) / 2, "Delta > |delta|/2 at " + at);
        o.check(a.delta_inc >= prev_inc, "Delta decreasing in sigma at " + at);
        prev_inc = a.delta_inc;
      }
      // Monotone over a geometric ladder of 24 variances.
      double prev = -1.0;
      for (int k = 0; k < 24; ++k) {
        const double v = 1e-8 * std::pow(10.0, k * 12.0 / 23.0);
        const double inc = p_err(d, v) * std::abs(d);
        o.check(inc >= prev, fmt("Delta decreasing at var=%g p0=%g", v, p0));
        prev = inc;
      }
      const double inc_limit = p_err(d, 1e6 * d * d) * std::abs(d);
      o.check(std::abs(inc_limit - std::abs(d) / 2) <= 1e-3 * std::abs(d),
              fmt("large-variance limit missed at p0=%g c=(%g,%g)", p0, c.c01, c.c10));
    }
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double x = -6.0 + 12.0 * i / 63.0;
    const double err = std::abs(special::erf(x) - static_cast<double>(oracle::erf(x)));
    worst = std::max(worst, err);
    o.check(err <= 1.5e-7, fmt("|erf(%g) - oracle| = %.3g", x, err));
  }
  o.check(std::abs(static_cast<double>(oracle::erf(1.0L)) - 0.8427007929) <= 5e-11,
          "oracle erf(1) disagrees with 0.8427007929");
  o.check(std::abs(special::erf(1.0) - 0.8427007929) <= 1.5e-7, "erf(1) off");
  if (o.pass) o.detail = fmt("max error %.3g over 64 points", worst);
  return o;
}

// Problem at p0 = 1/2 with c10 = 1 and c01 = 1 + 2*delta; only p0 is noisy,
// so Var(delta_hat) = (c01^2 + c10^2) * sigma_p^2.
SimulationConfig delta_mode_config(double d, double sigma_hat) {
  const double c01 = 1.0 + 2.0 * d;
  SimulationConfig cfg{.problem = DecisionProblem(0.5, c01, 1.0)};
  cfg.noise.sigma_p0 = sigma_hat / std::hypot(c01, 1.0);
  cfg.noise.family_p = ProbFamily::normal;
  cfg.noise.delta_mode = true;
  cfg.trials = 1'000'000;
  cfg.master_seed = kDefaultSeed;
  return cfg;
}

Outcome criterion3() {
  Outcome o;
  std::uint64_t stream = 0;
  const unsigned threads = 1;
  double worst_z = 0.0;
  for (double d : {-0.05, -0.1, -0.26}) {
    for (double sh : {0.03, 0.06, 0.2}) {
      SimulationConfig cfg = delta_mode_config(d, sh);
      cfg.stream_id = stream++;
      const double var = var_delta_hat(cfg.problem, cfg.noise);
      o.check(std::abs(var - sh * sh) <= 1e-12, fmt("variance setup off at sigma=%g", sh));
      const double p_ref = static_cast<double>(oracle::phi(-std::abs(d) / sh));
      const double p_an = expected_increase(cfg.problem, cfg.noise).p_err;
      o.check(std::abs(p_an - p_ref) <= 1e-7,
              fmt("analytic P_err %.8g vs oracle %.8g (delta=%g sigma=%g)", p_an, p_ref, d, sh));
      const SimulationResult r = simulate(cfg, threads);
      const double se = std::sqrt(p_an * (1.0 - p_an) / 1e6);
      const double tol = std::max(4.0 * se, 0.0);
      const double gap = std::abs(r.p_err_hat - p_an);
      if (se > 0) worst_z = std::max(worst_z, gap / se);
      o.check(gap <= tol || (p_an == 0.0 && r.p_err_hat == 0.0),
              fmt("delta=%g sigma=%g: P_hat %.6g vs %.6g (tol %.3g)", d, sh, r.p_err_hat, p_an, tol));
    }
  }
  // Worked example: delta = -0.10, var = 0.0034.
  SimulationConfig ex = delta_mode_config(-0.10, std::sqrt(0.0034));
  ex.stream_id = stream;
  const double p_an = expected_increase(ex.problem, ex.noise).p_err;
  const double p_ref = static_cast<double>(oracle::phi(-0.10 / std::sqrt(0.0034L)));
  o.check(std::abs(p_ref - 0.0432) <= 0.0006, fmt("oracle example P_err %.6g", p_ref));
  o.check(std::abs(p_an - 0.0432) <= 0.0006, fmt("example P_err %.6g", p_an));
  const SimulationResult r = simulate(ex, threads);
  o.check(std::abs(r.p_err_hat - 0.0432) <= 0.0006, fmt("example P_hat %.6g", r.p_err_hat));
  o.check(std::abs(r.p_err_hat - p_an) <= 4.0 * std::sqrt(p_an * (1 - p_an) / 1e6),
          fmt("example P_hat %.6g vs %.6g", r.p_err_hat, p_an));
  if (o.pass) o.detail = fmt("max |z| %.2f; example P_hat %.5f", worst_z, r.p_err_hat);
  return o;
}

struct Curves {
  // sigma -> normalised increase, per scenario
  std::vector<double> sigma;
  std::vector<double> cost, prob, both;
};

Curves summary_curves(const std::vector<SweepRow>& rows, bool simulated) {
  Curves c;
  for (const SweepRow& r : rows) {
    if (!r.summary) continue;
    const std::optional<double>& v = simulated ? r.norm_inc_mc : r.norm_inc_analytic;
    const double value = v.value_or(NAN);
    const double s = std::max({r.sigma_p, r.sigma_c01, r.sigma_c10});
    switch (r.scenario) {
      case ScenarioTag::cost_only:
        c.sigma.push_back(s);
        c.cost.push_back(value);
        break;
      case ScenarioTag::prob_only: c.prob.push_back(value); break;
      case ScenarioTag::both: c.both.push_back(value); break;
    }
  }
  return c;
}

void check_ordering(Outcome& o, const Curves& c, const char* label) {
  if (c.cost.size() != c.prob.size() || c.cost.size() != c.both.size()) {
    o.check(false, std::string(label) + ": curves of unequal length");
    return;
  }
  for (std::size_t i = 0; i < c.sigma.size(); ++i) {
    if (c.sigma[i] <= 0.0) continue;
    o.check(c.prob[i] <= c.cost[i] && c.cost[i] <= c.both[i],
            fmt("%s sigma=%.2f: prob-only %.4g, cost-only %.4g, both %.4g", label,
                c.sigma[i], c.prob[i], c.cost[i], c.both[i]));
  }
}

Outcome criterion4() {
  Outcome o;
  const Curves c = summary_curves(run_sweep(figure1_config()), false);
  o.check(c.sigma.size() == 11, "expected 11 sigma values per curve");
  check_ordering(o, c, "analytic");
  if (o.pass) {
    o.detail = fmt("at sigma=0.5: prob-only %.4f <= cost-only %.4f <= both %.4f",
                   c.prob.back(), c.cost.back(), c.both.back());
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::optional<double> ratio;
  for (const SweepRow& r : run_sweep(figure1_config())) {
    if (r.summary || r.scenario != ScenarioTag::cost_only) continue;
    if (std::abs(*r.p0 - 0.05) < 1e-12 && std::abs(r.sigma_c01 - 0.35) < 1e-12 &&
        *r.c01 == 0.3 && *r.c10 == 0.5 && r.norm_inc_analytic) {
      ratio = 1.0 + *r.norm_inc_analytic;
    }
  }
  o.check(ratio.has_value(), "cell p0=0.05 sigma=0.35 not found");
  if (ratio) {
    o.check(*ratio >= 3.0, fmt("(L*+Delta)/L* = %.4f < 3", *ratio));
    o.check(std::abs(*ratio - 3.26) <= 0.005, fmt("(L*+Delta)/L* = %.4f, expected ~3.26", *ratio));
    o.detail = fmt("(L*+Delta)/L* = %.4f", *ratio);
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SweepConfig cfg = figure2_config(42);
  o.check(cfg.trials == 10'000, "figure2 trials");
  o.check(cfg.p0_grid.size() * cfg.cost_pairs.size() == 625, "625 cells per (sigma, scenario)");
  const std::vector<SweepRow> rows = run_sweep(cfg, resolve_thread_count());
  const Curves an = summary_curves(rows, false);
  const Curves mc = summary_curves(rows, true);
  std::string failures;
  int failed = 0;
  auto compare = [&](const char* name, const std::vector<double>& a, const std::vector<double>& m) {
    for (std::size_t i = 0; i < an.sigma.size(); ++i) {
      if (an.sigma[i] > 0.3 + 1e-12) continue;
      const double tol = std::max(0.25 * std::abs(a[i]), 0.02);
      const bool ok = std::abs(m[i] - a[i]) <= tol;
      if (!ok) {
        ++failed;
        if (failures.size() < 300) {
          failures += fmt(" %s@%.2f(mc %.3g vs %.3g)", name, an.sigma[i], m[i], a[i]);
        }
      }
      o.check(ok, "");
    }
  };
  compare("cost-only", an.cost, mc.cost);
  compare("prob-only", an.prob, mc.prob);
  compare("both", an.both, mc.both);
  Outcome order;
  check_ordering(order, mc, "simulated");
  o.check(order.pass, "");
  o.detail = failed == 0 && order.pass
                 ? std::string("all sigma <= 0.3 within tolerance; simulated ordering holds")
                 : fmt("%d points outside tolerance:", failed) + failures +
                       (order.pass ? "" : "; ordering: " + order.detail);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion7() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / fmt("udecide_ac7_%d", static_cast<int>(::getpid()));
  fs::create_directories(dir);
  std::ostringstream out, err;
  auto run_with = [&](const char* threads, const fs::path& file) {
    ::setenv("UDECIDE_THREADS", threads, 1);
    const std::string path = file.string();
    const char* argv[] = {"udecide", "figure2", "--seed", "42", "--out", path.c_str()};
    return cli::run(6, argv, out, err);
  };
  const int rc1 = run_with("1", dir / "t1.csv");
  const int rc2 = run_with("4", dir / "t4.csv");
  ::unsetenv("UDECIDE_THREADS");
  o.check(rc1 == 0 && rc2 == 0, "figure2 run failed: " + err.str());
  const std::string a = slurp(dir / "t1.csv");
  const std::string b = slurp(dir / "t4.csv");
  o.check(!a.empty() && a == b, "CSV differs between UDECIDE_THREADS=1 and 4");
  if (o.pass) o.detail = fmt("%zu identical bytes", a.size());
  fs::remove_all(dir);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const BetaParams bp = beta_params_from_moments(0.2, 0.01);
  o.check(bp.alpha == 3.0 && bp.beta == 12.0 && !bp.clamped,
          fmt("BetaParams(0.2, 0.01) = (%.17g, %.17g)", bp.alpha, bp.beta));
  constexpr int kDraws = 1'000'000;
  double worst_z = 0.0;
  std::uint64_t stream = 0;
  for (double m : {0.2, 0.5, 0.8}) {
    for (double s : {0.05, 0.1}) {
      RngStream rng(kDefaultSeed, stream++, 0);
      std::vector<double> x(kDraws);
      for (double& v : x) v = sample_p_hat(m, s, ProbFamily::beta, rng).value;
      double mean = 0.0;
      for (double v : x) mean += v;
      mean /= kDraws;
      double m2 = 0.0, m4 = 0.0;
      for (double v : x) {
        const double d2 = (v - mean) * (v - mean);
        m2 += d2;
        m4 += d2 * d2;
      }
      m2 /= kDraws - 1;
      m4 /= kDraws;
      const double sd = std::sqrt(m2);
      const double se_mean = s / std::sqrt(double(kDraws));
      // Delta method: Var(sd_hat) ~ (m4 - sigma^4) / (4 sigma^2 n).
      const double se_sd = std::sqrt((m4 - m2 * m2) / (4.0 * m2 * kDraws));
      const double z_mean = std::abs(mean - m) / se_mean;
      const double z_sd = std::abs(sd - s) / se_sd;
      worst_z = std::max({worst_z, z_mean, z_sd});
      o.check(z_mean <= 4.0, fmt("mean %.6g vs %g (z=%.2f) at sigma=%g", mean, m, z_mean, s));
      o.check(z_sd <= 4.0, fmt("sd %.6g vs %g (z=%.2f) at mean=%g", sd, s, z_sd, m));
    }
  }
  if (o.pass) o.detail = fmt("max |z| %.2f; BetaParams(0.2, 0.01) = (3, 12)", worst_z);
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double budget_s;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--only N]\n");
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {"analytic identities", criterion1, 1.0},
      {"erf accuracy", criterion2, 1.0},
      {"delta_mode oracle equivalence", criterion3, 30.0},
      {"figure1 curve ordering", criterion4, 1.0},
      {"threefold loss at p0=0.05, sigma=0.35", criterion5, 1.0},
      {"figure2 simulated vs analytic", criterion6, 600.0},
      {"thread-count determinism", criterion7, 1200.0},
      {"Beta moment matching", criterion8, 10.0},
  };
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    const Criterion& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.detail += fmt("; over time budget (%.1f s > %.0f s)", secs, c.budget_s);
      o.pass = false;
    }
    std::printf("criterion %zu: %s  %s [%.2f s] %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
