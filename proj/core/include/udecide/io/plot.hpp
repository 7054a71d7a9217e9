#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "udecide/experiments.hpp"

namespace udecide::io {

struct PlotOptions {
  std::string title;
  /// Overlay dashed analytic curves on solid Monte Carlo curves.
  bool dashed_analytic = false;
};

struct SvgChart {
  std::string svg;
  std::vector<std::string> warnings;
  int solid_lines = 0;
  int dashed_lines = 0;
};

/// Line chart of mean normalized increase against standard error, one curve
/// per scenario (cost-only green, prob-only red, both black). Only summary
/// rows are used. Solid curves are Monte Carlo values when present,
/// otherwise analytic values.
SvgChart render_svg(const std::vector<SweepRow>& rows,
                    const PlotOptions& options = {});

/// Writes render_svg() to `path`; returns its warnings.
std::vector<std::string> emit_plot(const std::vector<SweepRow>& rows,
                                   const std::filesystem::path& path,
                                   const PlotOptions& options = {});

}  // namespace udecide::io
