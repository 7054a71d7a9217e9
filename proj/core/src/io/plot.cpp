#include "udecide/io/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace udecide::io {
namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

using Curve = std::vector<std::pair<double, double>>;

const char* color_of(ScenarioTag tag) {
  switch (tag) {
    case ScenarioTag::cost_only: return "green";
    case ScenarioTag::prob_only: return "red";
    case ScenarioTag::both: return "black";
  }
  return "gray";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

double sigma_of(const SweepRow& row) {
  return std::max({row.sigma_p, row.sigma_c01, row.sigma_c10});
}

}  // namespace

SvgChart render_svg(const std::vector<SweepRow>& rows,
                    const PlotOptions& options) {
  std::map<ScenarioTag, Curve> analytic;
  std::map<ScenarioTag, Curve> simulated;
  for (const SweepRow& row : rows) {
    if (!row.summary) continue;
    analytic[row.scenario];  // every scenario gets a curve slot
    if (row.norm_inc_analytic) {
      analytic[row.scenario].emplace_back(sigma_of(row), *row.norm_inc_analytic);
    }
    if (row.norm_inc_mc) {
      simulated[row.scenario].emplace_back(sigma_of(row), *row.norm_inc_mc);
    }
  }
  if (analytic.empty()) {
    throw std::invalid_argument("render_svg: no summary rows to plot");
  }

  SvgChart chart;
  const bool have_mc = !simulated.empty();
  if (options.dashed_analytic && !have_mc) {
    chart.warnings.emplace_back(
        "no Monte Carlo values; dashed analytic overlay omitted");
  }
  const auto& solid = have_mc ? simulated : analytic;
  const bool dashed = have_mc && options.dashed_analytic;

  double x_max = 0.0, y_max = 0.0;
  for (const auto* curves : {&analytic, &simulated}) {
    for (const auto& [tag, curve] : *curves) {
      for (const auto& [x, y] : curve) {
        x_max = std::max(x_max, x);
        y_max = std::max(y_max, y);
      }
    }
  }
  if (x_max <= 0.0) x_max = 1.0;
  y_max = y_max <= 0.0 ? 1.0 : 1.05 * y_max;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + plot_w * x / x_max; };
  auto py = [&](double y) { return kTop + plot_h * (1.0 - y / y_max); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"28\" "
        << "text-anchor=\"middle\" font-size=\"15\">" << escape(options.title)
        << "</text>\n";
  }

  // Axes and ticks.
  svg << "<g stroke=\"#444\" fill=\"none\">\n";
  svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h)
      << "\" x2=\"" << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h)
      << "\"/>\n";
  svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\""
      << num(kLeft) << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n";
  svg << "</g>\n<g fill=\"#222\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_max * i / kTicks;
    const double yv = y_max * i / kTicks;
    svg << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << num(kTop + plot_h)
        << "\" x2=\"" << num(px(xv)) << "\" y2=\"" << num(kTop + plot_h + 5)
        << "\" stroke=\"#444\"/>\n";
    svg << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\">" << tick_label(xv) << "</text>\n";
    svg << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(yv))
        << "\" x2=\"" << num(kLeft) << "\" y2=\"" << num(py(yv))
        << "\" stroke=\"#444\"/>\n";
    svg << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(yv) + 4)
        << "\" text-anchor=\"end\">" << tick_label(yv) << "</text>\n";
  }
  svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\""
      << num(kHeight - 15)
      << "\" text-anchor=\"middle\">standard error of the estimators</text>\n";
  svg << "<text transform=\"translate(20," << num(kTop + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">"
      << "mean normalised increase &#916;/L*</text>\n";
  svg << "</g>\n";

  auto polyline = [&](const Curve& curve, ScenarioTag tag, bool is_dashed) {
    svg << "<polyline fill=\"none\" stroke=\"" << color_of(tag)
        << "\" stroke-width=\"2\"";
    if (is_dashed) svg << " stroke-dasharray=\"6,4\"";
    svg << " data-scenario=\"" << to_string(tag) << "\" points=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (i) svg << ' ';
      svg << num(px(curve[i].first)) << ',' << num(py(curve[i].second));
    }
    svg << "\"/>\n";
  };

  for (ScenarioTag tag : kAllScenarios) {
    if (auto it = solid.find(tag); it != solid.end()) {
      polyline(it->second, tag, false);
      ++chart.solid_lines;
    }
    if (dashed) {
      if (auto it = analytic.find(tag); it != analytic.end()) {
        polyline(it->second, tag, true);
        ++chart.dashed_lines;
      }
    }
  }

  // Legend.
  double ly = kTop + 10;
  const double lx = kLeft + plot_w + 20;
  for (ScenarioTag tag : kAllScenarios) {
    if (!solid.count(tag)) continue;
    svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(lx + 24) << "\" y2=\"" << num(ly) << "\" stroke=\""
        << color_of(tag) << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\">"
        << to_string(tag) << "</text>\n";
    ly += 20;
  }
  if (dashed) {
    svg << "<text x=\"" << num(lx) << "\" y=\"" << num(ly + 8)
        << "\">solid: simulated</text>\n";
    svg << "<text x=\"" << num(lx) << "\" y=\"" << num(ly + 24)
        << "\">dashed: analytic</text>\n";
  }
  svg << "</svg>\n";
  chart.svg = svg.str();
  return chart;
}

std::vector<std::string> emit_plot(const std::vector<SweepRow>& rows,
                                   const std::filesystem::path& path,
                                   const PlotOptions& options) {
  SvgChart chart = render_svg(rows, options);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << chart.svg;
  if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
  return std::move(chart.warnings);
}

}  // namespace udecide::io
