#pragma once

// Binary decision task: two states, two actions, a cost table, and the
// closed-form sensitivity of the expected loss to estimator noise.

#include <cstdint>
#include <optional>
#include <string_view>

namespace udecide {

enum class Action : std::uint8_t { a0, a1 };

std::string_view to_string(Action action) noexcept;

/// Ground-truth task. p0 = P(theta = 0); cij is the cost of action ai when
/// the state is j. The diagonal costs default to zero.
class DecisionProblem {
 public:
  /// Throws InvalidArgument unless 0 <= p0 <= 1 and every cost is >= 0.
  DecisionProblem(double p0, double c01, double c10, double c00 = 0.0,
                  double c11 = 0.0);

  double p0() const noexcept { return p0_; }
  double c00() const noexcept { return c00_; }
  double c01() const noexcept { return c01_; }
  double c10() const noexcept { return c10_; }
  double c11() const noexcept { return c11_; }

  bool zero_diagonal() const noexcept { return c00_ == 0.0 && c11_ == 0.0; }

  /// Copy with every cost multiplied by k > 0.
  DecisionProblem scaled_costs(double k) const;

  bool operator==(const DecisionProblem&) const = default;

 private:
  double p0_;
  double c01_;
  double c10_;
  double c00_;
  double c11_;
};

enum class ProbFamily : std::uint8_t { exact, beta, normal };
enum class CostFamily : std::uint8_t { exact, uniform_truncated, normal };

std::string_view to_string(ProbFamily family) noexcept;
std::string_view to_string(CostFamily family) noexcept;
std::optional<ProbFamily> parse_prob_family(std::string_view text) noexcept;
std::optional<CostFamily> parse_cost_family(std::string_view text) noexcept;

/// Standard errors and distribution families of the three estimators
/// (p0, c01, c10). Diagonal costs are treated as exactly known.
struct NoiseSpec {
  double sigma_p0 = 0.0;
  double sigma_c01 = 0.0;
  double sigma_c10 = 0.0;
  ProbFamily family_p = ProbFamily::exact;
  CostFamily family_c = CostFamily::exact;
  /// Simulate delta-hat directly from N(delta, var_delta_hat).
  bool delta_mode = false;

  /// A sigma is zero exactly when its family is `exact`; for the costs the
  /// family is shared, so `exact` means both cost sigmas are zero.
  void validate() const;

  bool operator==(const NoiseSpec&) const = default;
};

struct AnalyticSensitivity {
  double delta = 0.0;
  double l_star = 0.0;
  double var_delta_hat = 0.0;
  double p_err = 0.0;
  double delta_inc = 0.0;
  /// delta_inc / l_star; empty when l_star == 0.
  std::optional<double> norm_inc;
};

/// Expected-loss gap E[C | a0] - E[C | a1]
///   = (c01 - c11)(1 - p0) - (c10 - c00) p0.
double delta(const DecisionProblem& problem) noexcept;

/// a0 when delta < 0, a1 otherwise (ties go to a1).
Action bayes_action(const DecisionProblem& problem) noexcept;

/// Expected loss of each action under the true prior.
double expected_loss(const DecisionProblem& problem, Action action) noexcept;

/// Minimal expected loss L*.
double min_loss(const DecisionProblem& problem) noexcept;

/// Variance of delta-hat under independent unbiased estimators, using the
/// product-variance identity Var(xy) = Var(x)Var(y) + Var(x)E[y]^2 + Var(y)E[x]^2.
double var_delta_hat(const DecisionProblem& problem, const NoiseSpec& noise);

/// Probability that a normal delta-hat with mean `delta` and variance
/// `var_delta_hat` has the opposite sign. Zero when there is no noise.
double p_err(double delta, double var_delta_hat);

/// Full analytic bundle, with delta_inc = p_err * |delta|.
AnalyticSensitivity expected_increase(const DecisionProblem& problem,
                                      const NoiseSpec& noise);

}  // namespace udecide
