#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udecide/experiments.hpp"

namespace udecide::io {

inline constexpr std::string_view kCsvHeader =
    "scenario,p0,c01,c10,sigma_p,sigma_c01,sigma_c10,delta,l_star,"
    "var_delta_hat,p_err_analytic,delta_inc_analytic,norm_inc_analytic,"
    "p_err_mc,delta_inc_mc,norm_inc_mc,trials,seed,clamped,truncations";

/// Real with 9 significant digits; empty for a missing value.
std::string format_real(const std::optional<double>& value);

/// Header line plus one line per row. Summary rows are tagged
/// "<scenario>/summary"; failed Monte Carlo cells print "error" in the
/// Monte Carlo columns.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void emit_csv(const std::vector<SweepRow>& rows,
              const std::filesystem::path& path);

/// JSON array with one object per row, keyed by the CSV column names.
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);
void emit_json(const std::vector<SweepRow>& rows,
               const std::filesystem::path& path);

}  // namespace udecide::io
