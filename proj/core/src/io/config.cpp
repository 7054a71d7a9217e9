#include "udecide/io/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "udecide/error.hpp"

namespace udecide::io {
namespace {

using nlohmann::ordered_json;

std::string describe(const std::string& key, int line, const std::string& what) {
  std::ostringstream os;
  os << key << ": " << what;
  if (line > 0) os << " (line " << line << ")";
  return os.str();
}

int line_of(const YAML::Node& node) {
  if (!node.IsDefined()) return 0;
  const YAML::Mark mark = node.Mark();
  return mark.is_null() ? 0 : mark.line + 1;
}

[[noreturn]] void fail(const std::string& key, const YAML::Node& node,
                       const std::string& what) {
  throw ConfigError(key, line_of(node), what);
}

// A (possibly absent) mapping section with a fixed set of allowed keys.
class Section {
 public:
  Section(YAML::Node node, std::string name,
          std::initializer_list<const char*> allowed)
      : node_(std::move(node)), name_(std::move(name)) {
    if (!node_ || node_.IsNull()) return;
    if (!node_.IsMap()) fail(name_, node_, "expected a mapping");
    for (const auto& entry : node_) {
      const auto key = entry.first.as<std::string>();
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) fail(name_ + "." + key, entry.first, "unknown key");
    }
  }

  bool present() const { return node_ && node_.IsMap(); }
  bool has(const char* key) const { return present() && node_[key]; }
  YAML::Node at(const char* key) const { return node_[key]; }
  std::string path(const char* key) const { return name_ + "." + key; }

  std::optional<double> real(const char* key) const {
    if (!has(key)) return std::nullopt;
    const YAML::Node n = node_[key];
    double v = 0.0;
    if (!n.IsScalar() || !YAML::convert<double>::decode(n, v) ||
        !std::isfinite(v)) {
      fail(path(key), n, "expected a finite number");
    }
    return v;
  }

  std::optional<std::uint64_t> count(const char* key) const {
    if (!has(key)) return std::nullopt;
    const YAML::Node n = node_[key];
    const std::string text = n.IsScalar() ? n.Scalar() : std::string();
    std::uint64_t v = 0;
    if (text.empty() || text.front() == '-' ||
        !YAML::convert<std::uint64_t>::decode(n, v)) {
      fail(path(key), n, "expected a nonnegative integer");
    }
    return v;
  }

  std::optional<bool> flag(const char* key) const {
    if (!has(key)) return std::nullopt;
    const YAML::Node n = node_[key];
    bool v = false;
    if (!n.IsScalar() || !YAML::convert<bool>::decode(n, v)) {
      fail(path(key), n, "expected true or false");
    }
    return v;
  }

  std::optional<std::string> text(const char* key) const {
    if (!has(key)) return std::nullopt;
    const YAML::Node n = node_[key];
    if (!n.IsScalar()) fail(path(key), n, "expected a string");
    return n.Scalar();
  }

  std::optional<std::vector<double>> reals(const char* key) const {
    if (!has(key)) return std::nullopt;
    const YAML::Node n = node_[key];
    if (!n.IsSequence()) fail(path(key), n, "expected a list of numbers");
    std::vector<double> out;
    for (const auto& item : n) {
      double v = 0.0;
      if (!item.IsScalar() || !YAML::convert<double>::decode(item, v) ||
          !std::isfinite(v)) {
        fail(path(key), item, "expected a finite number");
      }
      out.push_back(v);
    }
    return out;
  }

 private:
  YAML::Node node_;
  std::string name_;
};

YAML::Node load(std::string_view text) {
  try {
    YAML::Node root = YAML::Load(std::string(text));
    if (root && !root.IsNull() && !root.IsMap()) {
      throw ConfigError("<document>", line_of(root),
                        "top level must be a mapping");
    }
    for (const auto& entry : root) {
      const auto key = entry.first.as<std::string>();
      if (key != "problem" && key != "noise" && key != "run" && key != "sweep") {
        fail(key, entry.first, "unknown key");
      }
    }
    return root;
  } catch (const YAML::ParserException& e) {
    throw ConfigError("<document>", e.mark.is_null() ? 0 : e.mark.line + 1,
                      e.msg);
  }
}

void require_range(const Section& s, const char* key, double v, double lo,
                   double hi, const char* bound) {
  if (!(v >= lo && v <= hi)) {
    std::ostringstream os;
    os << "must lie in " << bound << ", got " << v;
    fail(s.path(key), s.at(key), os.str());
  }
}

ProbFamily prob_family(const Section& s, const char* key) {
  const auto name = *s.text(key);
  const auto f = parse_prob_family(name);
  if (!f) fail(s.path(key), s.at(key), "unknown family '" + name +
                                           "' (exact, beta, normal)");
  return *f;
}

CostFamily cost_family(const Section& s, const char* key) {
  const auto name = *s.text(key);
  const auto f = parse_cost_family(name);
  if (!f) fail(s.path(key), s.at(key), "unknown family '" + name +
                                           "' (exact, uniform-truncated, normal)");
  return *f;
}

struct RunSection {
  std::uint64_t trials;
  std::uint64_t seed;
  std::uint64_t stream_id;
};

RunSection parse_run(const YAML::Node& root, const ConfigOverrides& overrides,
                     std::uint64_t default_trials) {
  const Section run(root["run"], "run", {"trials", "seed", "stream_id"});
  RunSection out{run.count("trials").value_or(default_trials),
                 run.count("seed").value_or(kDefaultSeed),
                 run.count("stream_id").value_or(0)};
  if (overrides.trials) out.trials = *overrides.trials;
  if (overrides.seed) out.seed = *overrides.seed;
  if (out.trials < 1) fail("run.trials", run.at("trials"), "must be >= 1");
  return out;
}

SimulationConfig simulation_from(const YAML::Node& root,
                                 const ConfigOverrides& overrides) {
  const Section problem(root["problem"], "problem",
                        {"p0", "c00", "c01", "c10", "c11"});
  if (!problem.present()) {
    throw ConfigError("problem", 0, "missing required section");
  }
  for (const char* key : {"p0", "c01", "c10"}) {
    if (!problem.has(key)) throw ConfigError(problem.path(key), 0, "missing");
  }
  const double p0 = *problem.real("p0");
  require_range(problem, "p0", p0, 0.0, 1.0, "[0, 1]");
  double costs[4] = {};
  const char* cost_keys[4] = {"c00", "c01", "c10", "c11"};
  for (int i = 0; i < 4; ++i) {
    costs[i] = problem.real(cost_keys[i]).value_or(0.0);
    if (costs[i] < 0.0) {
      require_range(problem, cost_keys[i], costs[i], 0.0, HUGE_VAL, "[0, inf)");
    }
  }

  const Section noise_s(root["noise"], "noise",
                        {"sigma_p0", "sigma_c01", "sigma_c10", "family_p",
                         "family_c", "delta_mode"});
  NoiseSpec noise;
  const char* sigma_keys[3] = {"sigma_p0", "sigma_c01", "sigma_c10"};
  double* sigma_fields[3] = {&noise.sigma_p0, &noise.sigma_c01, &noise.sigma_c10};
  for (int i = 0; i < 3; ++i) {
    *sigma_fields[i] = noise_s.real(sigma_keys[i]).value_or(0.0);
    if (*sigma_fields[i] < 0.0) {
      require_range(noise_s, sigma_keys[i], *sigma_fields[i], 0.0, HUGE_VAL,
                    "[0, inf)");
    }
  }
  // Unspecified families follow the noise: Beta for p0, truncated uniform
  // for the costs, exact when the corresponding sigma is zero.
  noise.family_p = noise_s.has("family_p") ? prob_family(noise_s, "family_p")
                   : noise.sigma_p0 > 0.0  ? ProbFamily::beta
                                           : ProbFamily::exact;
  const bool noisy_costs = noise.sigma_c01 > 0.0 || noise.sigma_c10 > 0.0;
  noise.family_c = noise_s.has("family_c") ? cost_family(noise_s, "family_c")
                   : noisy_costs           ? CostFamily::uniform_truncated
                                           : CostFamily::exact;
  noise.delta_mode = noise_s.flag("delta_mode").value_or(false);
  try {
    noise.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError("noise", 0, e.what());
  }
  if (noise.family_p == ProbFamily::beta && noise.sigma_p0 > 0.0 &&
      (p0 == 0.0 || p0 == 1.0) && !noise.delta_mode) {
    fail("noise.family_p", noise_s.at("family_p"),
         "beta needs 0 < p0 < 1 when sigma_p0 > 0");
  }

  const RunSection run = parse_run(root, overrides, kDefaultTrials);
  return SimulationConfig{
      DecisionProblem(p0, costs[1], costs[2], costs[0], costs[3]), noise,
      run.trials, run.seed, run.stream_id};
}

SweepConfig sweep_from(const YAML::Node& root, const ConfigOverrides& overrides,
                       SweepKind default_kind) {
  const Section sweep(root["sweep"], "sweep",
                      {"kind", "sigma_grid", "p0_grid", "cost_pairs",
                       "cost_combination", "run_mc", "family_p", "family_c",
                       "delta_mode"});
  for (const char* section : {"problem", "noise"}) {
    if (root[section]) {
      fail(section, root[section], "not allowed in a sweep document");
    }
  }

  SweepKind kind = default_kind;
  if (const auto name = sweep.text("kind")) {
    const auto k = parse_sweep_kind(*name);
    if (!k) fail("sweep.kind", sweep.at("kind"),
                 "unknown kind '" + *name + "' (figure1, figure2, custom)");
    kind = *k;
  }
  CostCombination combination = CostCombination::paired;
  if (const auto name = sweep.text("cost_combination")) {
    const auto c = parse_cost_combination(*name);
    if (!c) fail("sweep.cost_combination", sweep.at("cost_combination"),
                 "expected 'paired' or 'cross'");
    combination = *c;
  }

  const std::uint64_t default_trials =
      kind == SweepKind::figure2 ? kFigure2Trials : kDefaultTrials;
  const RunSection run = parse_run(root, overrides, default_trials);

  SweepConfig cfg;
  switch (kind) {
    case SweepKind::figure1: cfg = figure1_config(); break;
    case SweepKind::figure2: cfg = figure2_config(run.seed, combination); break;
    case SweepKind::custom:
      cfg.kind = SweepKind::custom;
      cfg.sigma_grid = default_sigma_grid();
      break;
  }
  cfg.cost_combination = combination;
  cfg.trials = run.trials;
  cfg.master_seed = run.seed;

  if (auto v = sweep.reals("sigma_grid")) cfg.sigma_grid = std::move(*v);
  if (auto v = sweep.reals("p0_grid")) cfg.p0_grid = std::move(*v);
  if (sweep.has("cost_pairs")) {
    const YAML::Node list = sweep.at("cost_pairs");
    if (!list.IsSequence()) {
      fail("sweep.cost_pairs", list, "expected a list of [c01, c10] pairs");
    }
    cfg.cost_pairs.clear();
    for (const auto& item : list) {
      double c01 = 0.0, c10 = 0.0;
      const bool ok = item.IsSequence() && item.size() == 2 &&
                      YAML::convert<double>::decode(item[0], c01) &&
                      YAML::convert<double>::decode(item[1], c10);
      if (!ok) fail("sweep.cost_pairs", item, "expected [c01, c10]");
      cfg.cost_pairs.push_back({c01, c10});
    }
  }
  if (auto v = sweep.flag("run_mc")) cfg.run_mc = *v;
  if (sweep.has("family_p")) cfg.family_p = prob_family(sweep, "family_p");
  if (sweep.has("family_c")) cfg.family_c = cost_family(sweep, "family_c");
  if (auto v = sweep.flag("delta_mode")) cfg.delta_mode = *v;

  if (kind == SweepKind::custom && cfg.p0_grid.empty()) {
    throw ConfigError("sweep.p0_grid", 0, "required for a custom sweep");
  }
  if (kind == SweepKind::custom && cfg.cost_pairs.empty()) {
    throw ConfigError("sweep.cost_pairs", 0, "required for a custom sweep");
  }
  try {
    cfg.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError("sweep", line_of(root["sweep"]), e.what());
  }
  if (cfg.run_mc && cfg.family_p == ProbFamily::beta && !cfg.delta_mode) {
    for (double p0 : cfg.p0_grid) {
      if ((p0 == 0.0 || p0 == 1.0) && cfg.sigma_grid.back() > 0.0) {
        throw ConfigError("sweep.p0_grid", line_of(sweep.at("p0_grid")),
                          "beta estimator needs 0 < p0 < 1");
      }
    }
  }
  return cfg;
}

}  // namespace

ConfigError::ConfigError(std::string key, int line, const std::string& what)
    : std::runtime_error(describe(key, line, what)),
      key_(std::move(key)),
      line_(line) {}

Config parse_config(std::string_view text, const ConfigOverrides& overrides) {
  const YAML::Node root = load(text);
  if (root["sweep"]) return sweep_from(root, overrides, SweepKind::custom);
  return simulation_from(root, overrides);
}

SimulationConfig parse_simulation_config(std::string_view text,
                                         const ConfigOverrides& overrides) {
  const YAML::Node root = load(text);
  if (root["sweep"]) {
    fail("sweep", root["sweep"], "not allowed in a single-problem document");
  }
  return simulation_from(root, overrides);
}

SweepConfig parse_sweep_config(std::string_view text,
                               const ConfigOverrides& overrides,
                               SweepKind default_kind) {
  return sweep_from(load(text), overrides, default_kind);
}

std::string to_document(const SimulationConfig& config) {
  const DecisionProblem& p = config.problem;
  const NoiseSpec& n = config.noise;
  ordered_json doc;
  doc["problem"] = {{"p0", p.p0()},   {"c00", p.c00()}, {"c01", p.c01()},
                    {"c10", p.c10()}, {"c11", p.c11()}};
  doc["noise"] = {{"sigma_p0", n.sigma_p0},
                  {"sigma_c01", n.sigma_c01},
                  {"sigma_c10", n.sigma_c10},
                  {"family_p", to_string(n.family_p)},
                  {"family_c", to_string(n.family_c)},
                  {"delta_mode", n.delta_mode}};
  doc["run"] = {{"trials", config.trials},
                {"seed", config.master_seed},
                {"stream_id", config.stream_id}};
  return doc.dump(2);
}

std::string to_document(const SweepConfig& config) {
  ordered_json pairs = ordered_json::array();
  for (const CostPair& c : config.cost_pairs) pairs.push_back({c.c01, c.c10});
  ordered_json doc;
  doc["sweep"] = {{"kind", to_string(config.kind)},
                  {"sigma_grid", config.sigma_grid},
                  {"p0_grid", config.p0_grid},
                  {"cost_pairs", pairs},
                  {"cost_combination", to_string(config.cost_combination)},
                  {"run_mc", config.run_mc},
                  {"family_p", to_string(config.family_p)},
                  {"family_c", to_string(config.family_c)},
                  {"delta_mode", config.delta_mode}};
  doc["run"] = {{"trials", config.trials}, {"seed", config.master_seed}};
  return doc.dump(2);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace udecide::io
