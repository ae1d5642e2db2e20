#pragma once

// Command-line front end. Everything the `scorer` executable does is exposed
// here so that it can be driven from tests without spawning processes.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scorer/scorer.hpp"

namespace scorer::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kNumerical = 2 };

enum class Function { gi, hi, ai, bi };

std::string_view to_string(Function fn);
/// Throws std::invalid_argument for names other than gi, hi, ai, bi.
Function parse_function(std::string_view name);

struct OutputRecord {
  double z_re = 0.0;
  double z_im = 0.0;
  std::string function;
  double value_re = 0.0;
  double value_im = 0.0;
  std::string method;
  double abs_error_estimate = 0.0;
  std::size_t n_evaluations = 0;
  bool converged = true;

  bool operator==(const OutputRecord&) const = default;
};

/// Evaluates one function; Airy values carry the method tag "airy".
OutputRecord evaluate(Function fn, Complex z, const EngineConfig& cfg = {});

inline constexpr int kDefaultDigits = 8;
inline constexpr int kMaxDigits = 15;

/// One line: z, value and method with `digits` significant digits.
std::string to_text(const OutputRecord& rec, int digits = kDefaultDigits);
std::string csv_header();
/// Numbers in %.15e, no trailing newline.
std::string to_csv(const OutputRecord& rec);
nlohmann::json to_json(const OutputRecord& rec);
OutputRecord from_json(const nlohmann::json& j);

/// Parses a real number or a multiple of pi: "pi", "-pi/2", "5pi/6",
/// "0.25pi", "2*pi/3", "1.5". Throws std::invalid_argument.
double parse_phase(std::string_view text);

// --- reference table -----------------------------------------------------------------

struct TableCell {
  double radius = 0.0;
  std::string phase_label;
  std::string part;       // "Re" or "Im"
  std::string printed;    // as printed in the table
  double computed = 0.0;
  double abs_diff = 0.0;
  double half_unit = 0.0; // half a unit in the last printed digit
  std::size_t n_evaluations = 0;
  bool ok = false;
};

struct AsymptoticCell {
  double radius = 0.0;
  std::string phase_label;
  std::string part;
  std::string printed;
  double computed = 0.0;
  /// Computed value rounded or truncated to the printed digits reproduces the
  /// printed text (the table mixes both conventions in its last digit).
  bool ok = false;
  /// Relative difference between the asymptotic and quadrature values.
  double rel_gap_to_quadrature = 0.0;
};

struct Table41Report {
  std::vector<TableCell> cells;
  std::vector<AsymptoticCell> asymptotic;
  bool all_ok() const;
};

/// Recomputes reference table with the steepest-descent integral and the
/// asymptotic expansion truncated after the 1/z^10 term.
Table41Report table41(const EngineConfig& cfg = {});
void print_table41(const Table41Report& report, std::ostream& out);

/// True when `value` agrees with the decimal text `printed` to within half a
/// unit in its last digit; `half_unit` receives that bound.
bool matches_printed(double value, const std::string& printed, double* half_unit = nullptr);
/// True when rounding or truncating `value` to the digits of `printed`
/// reproduces it.
bool reproduces_printed(double value, const std::string& printed);

// --- Arc data ---------------------------------------------------------------------

struct ArcSample {
  double phase = 0.0;
  Complex value{};
  bool converged = true;
};

/// Uniform phases over [phase_min, phase_max], endpoints included.
std::vector<ArcSample> arc(Function fn, double radius, double phase_min, double phase_max,
                           std::size_t samples, const EngineConfig& cfg = {});
void write_arc_csv(const std::vector<ArcSample>& samples, std::ostream& out);

struct SmoothnessReport {
  bool ok = false;
  /// Largest ratio of a sample jump |f(theta_{k+1}) - f(theta_k)| to its
  /// Taylor bound; the check passes when it does not exceed 1.
  double worst_ratio = 0.0;
  double worst_phase = 0.0;
};

/// Bounds every jump by h max(|f'_k|, |f'_{k+1}|) + (h^2/2)|f''| with the
/// phase derivatives estimated by central differences of the engine itself.
SmoothnessReport check_arc_smoothness(Function fn, double radius,
                                      const std::vector<ArcSample>& samples,
                                      const EngineConfig& cfg = {});

// --- Self-test ---------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariant suite over all modules.
std::vector<CheckResult> run_selftest(const EngineConfig& cfg);

// --- Bench --------------------------------------------------------------------------

struct BenchRow {
  double radius = 0.0;
  std::string phase_label;
  double phase = 0.0;
  std::size_t n_evaluations = 0;
  double microseconds = 0.0;
  bool converged = true;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Per radius: the Stokes-line point has the largest count in its row
  /// (only when the sweep contains 2pi/3).
  bool stokes_max_ok = true;
  /// Off-Stokes counts at the largest radius do not exceed those at the
  /// smallest radius (only when the sweep has at least two radii).
  bool radius_trend_ok = true;
  std::vector<std::string> notes;
};

/// Integrand evaluation counts of the steepest-descent integral for Hi over
/// the given radii and phases.
BenchReport bench(const std::vector<double>& radii, const std::vector<std::string>& phases,
                  const EngineConfig& cfg = {});
void print_bench(const BenchReport& report, std::ostream& out);

// --- Entry point --------------------------------------------------------------------

/// Parses argv and runs a subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scorer::cli
