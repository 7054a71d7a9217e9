#include "udecide/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace udecide::io {
namespace {

std::string scenario_label(const SweepRow& row) {
  std::string label(to_string(row.scenario));
  if (row.summary) label += "/summary";
  return label;
}

std::string mc_field(const SweepRow& row, const std::optional<double>& v) {
  return row.error ? std::string("error") : format_real(v);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_real(const std::optional<double>& value) {
  if (!value) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", *value);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << scenario_label(r) << ',' << format_real(r.p0) << ','
        << format_real(r.c01) << ',' << format_real(r.c10) << ','
        << format_real(r.sigma_p) << ',' << format_real(r.sigma_c01) << ','
        << format_real(r.sigma_c10) << ',' << format_real(r.delta) << ','
        << format_real(r.l_star) << ',' << format_real(r.var_delta_hat) << ','
        << format_real(r.p_err_analytic) << ','
        << format_real(r.delta_inc_analytic) << ','
        << format_real(r.norm_inc_analytic) << ',' << mc_field(r, r.p_err_mc)
        << ',' << mc_field(r, r.delta_inc_mc) << ','
        << mc_field(r, r.norm_inc_mc) << ',' << r.trials << ',' << r.seed
        << ',' << (r.clamped ? 1 : 0) << ',' << r.truncations << '\n';
  }
}

void emit_csv(const std::vector<SweepRow>& rows,
              const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows");
  auto out = open_for_write(path);
  write_csv(out, rows);
  if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  using nlohmann::ordered_json;
  auto real = [](const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json doc = ordered_json::array();
  for (const SweepRow& r : rows) {
    ordered_json o;
    o["scenario"] = scenario_label(r);
    o["p0"] = real(r.p0);
    o["c01"] = real(r.c01);
    o["c10"] = real(r.c10);
    o["sigma_p"] = r.sigma_p;
    o["sigma_c01"] = r.sigma_c01;
    o["sigma_c10"] = r.sigma_c10;
    o["delta"] = real(r.delta);
    o["l_star"] = real(r.l_star);
    o["var_delta_hat"] = real(r.var_delta_hat);
    o["p_err_analytic"] = r.p_err_analytic;
    o["delta_inc_analytic"] = r.delta_inc_analytic;
    o["norm_inc_analytic"] = real(r.norm_inc_analytic);
    o["p_err_mc"] = real(r.p_err_mc);
    o["delta_inc_mc"] = real(r.delta_inc_mc);
    o["norm_inc_mc"] = real(r.norm_inc_mc);
    o["trials"] = r.trials;
    o["seed"] = r.seed;
    o["clamped"] = r.clamped;
    o["truncations"] = r.truncations;
    if (r.error) o["error"] = *r.error;
    if (r.summary) {
      o["cells"] = r.cells;
      o["excluded_analytic"] = r.excluded_analytic;
      o["excluded_mc"] = r.excluded_mc;
    }
    doc.push_back(std::move(o));
  }
  out << doc.dump(2) << '\n';
}

void emit_json(const std::vector<SweepRow>& rows,
               const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("emit_json: no rows");
  auto out = open_for_write(path);
  write_json(out, rows);
  if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace udecide::io
