#include "udecide/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "udecide/error.hpp"
#include "udecide/estimators.hpp"
#include "udecide/parallel.hpp"
#include "udecide/rng.hpp"

namespace udecide {
namespace {

constexpr std::uint64_t kBlockSize = 8192;

struct BlockTally {
  std::uint64_t errors = 0;
  std::uint64_t truncations = 0;
  bool clamped = false;
};

}  // namespace

void SimulationConfig::validate() const {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  noise.validate();
}

TrialOutcome simulate_trial(const SimulationConfig& config,
                            std::uint64_t trial_index) {
  if (trial_index >= config.trials) {
    throw InvalidArgument("trial_index out of range");
  }
  const DecisionProblem& problem = config.problem;
  const NoiseSpec& noise = config.noise;
  const double true_delta = delta(problem);
  RngStream rng(config.master_seed, config.stream_id, trial_index);

  TrialOutcome out;
  double estimated_delta = 0.0;
  if (noise.delta_mode) {
    estimated_delta = sample_delta_hat_direct(
        true_delta, var_delta_hat(problem, noise), rng);
  } else {
    const Draw p = sample_p_hat(problem.p0(), noise.sigma_p0, noise.family_p, rng);
    const Draw c01 = sample_cost_hat(problem.c01(), noise.sigma_c01, noise.family_c, rng);
    const Draw c10 = sample_cost_hat(problem.c10(), noise.sigma_c10, noise.family_c, rng);
    estimated_delta = (c01.value - problem.c11()) * (1.0 - p.value) -
                      (c10.value - problem.c00()) * p.value;
    out.truncations = p.truncations + c01.truncations + c10.truncations;
    out.clamped = p.clamped;
  }

  if (true_delta == 0.0) return out;
  const Action chosen = estimated_delta < 0.0 ? Action::a0 : Action::a1;
  out.error = chosen != bayes_action(problem);
  return out;
}

SimulationResult simulate(const SimulationConfig& config, unsigned threads) {
  config.validate();
  const std::uint64_t blocks = (config.trials + kBlockSize - 1) / kBlockSize;
  std::vector<BlockTally> tallies(blocks);

  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(config.trials, begin + kBlockSize);
    BlockTally tally;
    for (std::uint64_t i = begin; i < end; ++i) {
      const TrialOutcome t = simulate_trial(config, i);
      tally.errors += t.error ? 1 : 0;
      tally.truncations += t.truncations;
      tally.clamped = tally.clamped || t.clamped;
    }
    tallies[b] = tally;
  });

  SimulationResult out;
  out.trials = config.trials;
  for (const BlockTally& t : tallies) {
    out.error_count += t.errors;
    out.truncation_count += t.truncations;
    out.clamp_flag = out.clamp_flag || t.clamped;
  }
  const double n = static_cast<double>(out.trials);
  out.p_err_hat = static_cast<double>(out.error_count) / n;
  out.stderr_p_err = std::sqrt(out.p_err_hat * (1.0 - out.p_err_hat) / n);
  out.delta_inc_hat = out.p_err_hat * std::fabs(delta(config.problem));
  const double l_star = min_loss(config.problem);
  if (l_star > 0.0) out.norm_inc_hat = out.delta_inc_hat / l_star;
  return out;
}

}  // namespace udecide
