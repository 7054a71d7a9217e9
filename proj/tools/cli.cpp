#include "cli.hpp"

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "udecide/error.hpp"
#include "udecide/experiments.hpp"
#include "udecide/io/config.hpp"
#include "udecide/io/csv.hpp"
#include "udecide/io/manifest.hpp"
#include "udecide/io/plot.hpp"
#include "udecide/parallel.hpp"
#include "udecide/version.hpp"

namespace udecide::cli {
namespace {

struct Invocation {
  std::string subcommand;
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::string plot_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
};

void add_common_options(CLI::App& sub, Invocation& inv, bool config_required) {
  auto* config = sub.add_option("--config", inv.config_path,
                                "YAML or JSON config document");
  if (config_required) config->required();
  sub.add_option("--out", inv.out_path, "output data file")->required();
  sub.add_option("--format", inv.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--plot", inv.plot_path, "SVG line chart of summary rows");
  sub.add_option("--seed", inv.seed, "master seed (default 42)");
  sub.add_option("--trials", inv.trials, "Monte Carlo trials per cell")
      ->check(CLI::PositiveNumber);
}

void write_rows(const Invocation& inv, const std::vector<SweepRow>& rows) {
  if (inv.format == "json") {
    io::emit_json(rows, inv.out_path);
  } else {
    io::emit_csv(rows, inv.out_path);
  }
}

io::RunManifest base_manifest(const Invocation& inv) {
  io::RunManifest m;
  m.tool_version = std::string(kVersion);
  m.subcommand = inv.subcommand;
  m.timestamp = io::utc_timestamp();
  return m;
}

int run_single(const Invocation& inv, bool run_mc, std::ostream& err) {
  const io::ConfigOverrides overrides{inv.seed, inv.trials};
  const SimulationConfig config = io::parse_simulation_config(
      io::read_text_file(inv.config_path), overrides);
  const unsigned threads = run_mc ? resolve_thread_count() : 1;
  const std::vector<SweepRow> rows{evaluate_problem(config, run_mc, threads)};
  write_rows(inv, rows);

  io::RunManifest m = base_manifest(inv);
  m.config_document = io::to_document(config);
  m.seed = config.master_seed;
  m.trials = config.trials;
  io::tally(m, rows);
  io::write_manifest(m, io::manifest_path_for(inv.out_path));
  if (!inv.plot_path.empty()) {
    err << "warning: --plot needs a sweep; ignored for '" << inv.subcommand
        << "'\n";
  }
  return kOk;
}

int run_figure(const Invocation& inv, SweepKind kind, std::ostream& err) {
  const io::ConfigOverrides overrides{inv.seed, inv.trials};
  const std::string text =
      inv.config_path.empty() ? std::string() : io::read_text_file(inv.config_path);
  const SweepConfig config = io::parse_sweep_config(text, overrides, kind);
  if (config.kind != kind) {
    throw io::ConfigError("sweep.kind", 0,
                          "document describes '" +
                              std::string(to_string(config.kind)) +
                              "', subcommand is '" + inv.subcommand + "'");
  }
  const std::vector<SweepRow> rows = run_sweep(config, resolve_thread_count());
  write_rows(inv, rows);

  io::RunManifest m = base_manifest(inv);
  m.config_document = io::to_document(config);
  m.seed = config.master_seed;
  m.trials = config.trials;
  io::tally(m, rows);
  io::write_manifest(m, io::manifest_path_for(inv.out_path));
  if (m.failed_cells > 0) {
    err << "warning: " << m.failed_cells
        << " cell(s) failed in Monte Carlo; marked 'error' in the output\n";
  }

  if (!inv.plot_path.empty()) {
    io::PlotOptions options;
    options.title = kind == SweepKind::figure2
                        ? "Average normalised loss increase"
                        : "Normalised loss increase";
    options.dashed_analytic = config.run_mc;
    for (const std::string& w : io::emit_plot(rows, inv.plot_path, options)) {
      err << "warning: " << w << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sensitivity of a binary decision's expected loss to "
               "probability and cost estimation error",
               "udecide"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Invocation inv;
  auto* analytic = app.add_subcommand("analytic", "closed-form sensitivity of one problem");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo plus closed form for one problem");
  auto* figure1 = app.add_subcommand("figure1", "analytic sweep over p0 and standard error");
  auto* figure2 = app.add_subcommand("figure2", "simulated vs analytic sweep over a random cost grid");
  add_common_options(*analytic, inv, true);
  add_common_options(*simulate, inv, true);
  add_common_options(*figure1, inv, false);
  add_common_options(*figure2, inv, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (analytic->parsed()) {
      inv.subcommand = "analytic";
      return run_single(inv, false, err);
    }
    if (simulate->parsed()) {
      inv.subcommand = "simulate";
      return run_single(inv, true, err);
    }
    if (figure1->parsed()) {
      inv.subcommand = "figure1";
      return run_figure(inv, SweepKind::figure1, err);
    }
    inv.subcommand = "figure2";
    return run_figure(inv, SweepKind::figure2, err);
  } catch (const io::ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace udecide::cli
