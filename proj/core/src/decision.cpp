#include "udecide/decision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "udecide/error.hpp"
#include "udecide/special_functions.hpp"

namespace udecide {

std::string_view to_string(Action action) noexcept {
  return action == Action::a0 ? "a0" : "a1";
}

DecisionProblem::DecisionProblem(double p0, double c01, double c10, double c00,
                                 double c11)
    : p0_(p0), c01_(c01), c10_(c10), c00_(c00), c11_(c11) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw InvalidArgument("p0 must lie in [0, 1], got " + std::to_string(p0));
  }
  for (double c : {c00, c01, c10, c11}) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw InvalidArgument("costs must be finite and >= 0, got " +
                            std::to_string(c));
    }
  }
}

DecisionProblem DecisionProblem::scaled_costs(double k) const {
  if (!(k > 0.0)) throw InvalidArgument("cost scale must be > 0");
  return {p0_, k * c01_, k * c10_, k * c00_, k * c11_};
}

std::string_view to_string(ProbFamily family) noexcept {
  switch (family) {
    case ProbFamily::exact: return "exact";
    case ProbFamily::beta: return "beta";
    case ProbFamily::normal: return "normal";
  }
  return "?";
}

std::string_view to_string(CostFamily family) noexcept {
  switch (family) {
    case CostFamily::exact: return "exact";
    case CostFamily::uniform_truncated: return "uniform-truncated";
    case CostFamily::normal: return "normal";
  }
  return "?";
}

std::optional<ProbFamily> parse_prob_family(std::string_view text) noexcept {
  if (text == "exact") return ProbFamily::exact;
  if (text == "beta") return ProbFamily::beta;
  if (text == "normal") return ProbFamily::normal;
  return std::nullopt;
}

std::optional<CostFamily> parse_cost_family(std::string_view text) noexcept {
  if (text == "exact") return CostFamily::exact;
  if (text == "uniform-truncated") return CostFamily::uniform_truncated;
  if (text == "normal") return CostFamily::normal;
  return std::nullopt;
}

void NoiseSpec::validate() const {
  for (double s : {sigma_p0, sigma_c01, sigma_c10}) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw InvalidArgument("standard errors must be finite and >= 0");
    }
  }
  if ((sigma_p0 == 0.0) != (family_p == ProbFamily::exact)) {
    throw InvalidArgument(
        "sigma_p0 must be zero exactly when family_p is 'exact'");
  }
  const bool costs_exact = sigma_c01 == 0.0 && sigma_c10 == 0.0;
  if (costs_exact != (family_c == CostFamily::exact)) {
    throw InvalidArgument(
        "cost sigmas must both be zero exactly when family_c is 'exact'");
  }
}

double delta(const DecisionProblem& problem) noexcept {
  const double p0 = problem.p0();
  return (problem.c01() - problem.c11()) * (1.0 - p0) -
         (problem.c10() - problem.c00()) * p0;
}

Action bayes_action(const DecisionProblem& problem) noexcept {
  return delta(problem) < 0.0 ? Action::a0 : Action::a1;
}

double expected_loss(const DecisionProblem& problem, Action action) noexcept {
  const double p0 = problem.p0();
  if (action == Action::a0) {
    return problem.c00() * p0 + problem.c01() * (1.0 - p0);
  }
  return problem.c10() * p0 + problem.c11() * (1.0 - p0);
}

double min_loss(const DecisionProblem& problem) noexcept {
  return std::min(expected_loss(problem, Action::a0),
                  expected_loss(problem, Action::a1));
}

double var_delta_hat(const DecisionProblem& problem, const NoiseSpec& noise) {
  noise.validate();
  const double p0 = problem.p0();
  const double q0 = 1.0 - p0;
  // Diagonal costs are known constants and only shift the effective costs.
  const double c01 = problem.c01() - problem.c11();
  const double c10 = problem.c10() - problem.c00();
  const double vp = noise.sigma_p0 * noise.sigma_p0;
  const double v01 = noise.sigma_c01 * noise.sigma_c01;
  const double v10 = noise.sigma_c10 * noise.sigma_c10;
  return v01 * vp + v01 * q0 * q0 + vp * c01 * c01 + v10 * vp +
         v10 * p0 * p0 + vp * c10 * c10;
}

double p_err(double delta, double var_delta_hat) {
  if (!(var_delta_hat >= 0.0)) {
    throw InvalidArgument("var_delta_hat must be >= 0");
  }
  if (var_delta_hat == 0.0) return 0.0;
  // 0.5 * (1 + erf(-x)) == 0.5 * erfc(x), without the cancellation.
  return 0.5 * special::erfc(std::fabs(delta) / std::sqrt(2.0 * var_delta_hat));
}

AnalyticSensitivity expected_increase(const DecisionProblem& problem,
                                      const NoiseSpec& noise) {
  AnalyticSensitivity out;
  out.delta = delta(problem);
  out.l_star = min_loss(problem);
  out.var_delta_hat = var_delta_hat(problem, noise);
  out.p_err = p_err(out.delta, out.var_delta_hat);
  out.delta_inc = out.p_err * std::fabs(out.delta);
  if (out.l_star > 0.0) out.norm_inc = out.delta_inc / out.l_star;
  return out;
}

}  // namespace udecide
