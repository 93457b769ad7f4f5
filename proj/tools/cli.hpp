#pragma once

// Command-line front end: eval | scan | verify. The logic lives here so tests
// can drive it with in-memory streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "hlz/functional_eq.hpp"
#include "hlz/zeros.hpp"

namespace hlz::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal that round-trips to the same double; -0 prints as 0.
std::string format_double(double x);

/// "0.5", "-1", "i", "-2i", "0.3+0.4i", "1e-3-2e-1i", "unit:<theta>" (= e^{i theta}).
/// Throws ErrorKind::Domain on malformed input.
Complex parse_complex(const std::string& text);

/// Comma-separated list of parse_complex tokens.
std::vector<Complex> parse_z_list(const std::string& text);

struct Settings {
  QuadConfig quad{};
  FESumConfig fe{};
  ScanOptions scan{};
};

/// key=value lines; '#' starts a comment. Keys: split_point, tail_cutoff,
/// max_levels, tol, fe_n_max, fe_tail_correction, grid_step, scan_tol.
/// Throws ErrorKind::Io on unknown keys or bad values.
void apply_config_text(const std::string& text, Settings& s);
void apply_config_file(const std::string& path, Settings& s);

struct ScanRow {
  double a = 0.0;
  Complex z;
  Verdict verdict = Verdict::ZeroExists;
  std::vector<double> roots;
  double max_residual = 0.0;
};

/// Rows in (a, z_re, z_im) order. Cells run on up to `threads` workers.
std::vector<ScanRow> scan_grid(const std::vector<double>& a_values, const std::vector<Complex>& zs,
                               const ScanOptions& opts, unsigned threads);

std::string scan_csv(const std::vector<ScanRow>& rows);

/// min(hardware threads, LERCH_THREADS if set to a positive integer), at least 1.
unsigned thread_budget();

/// Runs a verification suite ("fe", "signs", "kernels", "identities", "all"),
/// writing one PASS/FAIL line per check. Returns true iff all pass.
bool run_suite(const std::string& suite, const Settings& s, std::ostream& out);

}  // namespace hlz::cli
