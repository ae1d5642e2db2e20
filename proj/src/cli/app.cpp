#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scorer/cli.hpp"

namespace scorer::cli {

namespace {

struct EngineFlags {
  double rel_tol = quad::QuadratureConfig{}.rel_tol;
  std::size_t max_subdivisions = quad::QuadratureConfig{}.max_subdivisions;
};

void add_engine_flags(CLI::App* sub, EngineFlags& flags) {
  sub->add_option("--rel-tol", flags.rel_tol, "Quadrature relative tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-subdivisions", flags.max_subdivisions,
                  "Quadrature interval budget")
      ->check(CLI::PositiveNumber);
}

EngineConfig engine_config(const EngineFlags& flags) {
  EngineConfig cfg;
  cfg.quad.rel_tol = flags.rel_tol;
  cfg.quad.max_subdivisions = flags.max_subdivisions;
  cfg.validate();
  return cfg;
}

// Exact points on the real and imaginary axes so that polar input agrees
// with the Cartesian form there.
Complex polar_point(double r, double phase) {
  const double quarter = phase / (0.5 * kPi);
  const double nearest = std::round(quarter);
  if (std::abs(quarter - nearest) < 1e-15) {
    switch ((static_cast<long long>(nearest) % 4 + 4) % 4) {
      case 0: return {r, 0.0};
      case 1: return {0.0, r};
      case 2: return {-r, 0.0};
      default: return {0.0, -r};
    }
  }
  return std::polar(r, phase);
}

struct EvalArgs {
  std::string fn;
  std::optional<double> re, im, r;
  std::optional<std::string> phase;
  std::string format = "text";
  int digits = kDefaultDigits;
  EngineFlags engine;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const bool cartesian = a.re || a.im;
  const bool polar = a.r || a.phase;
  if (cartesian == polar) {
    err << "eval: give exactly one of --re/--im or --r/--phase\n";
    return kUsage;
  }
  if (cartesian && !(a.re && a.im)) {
    err << "eval: --re and --im must be given together\n";
    return kUsage;
  }
  if (polar && !(a.r && a.phase)) {
    err << "eval: --r and --phase must be given together\n";
    return kUsage;
  }
  Complex z;
  try {
    z = cartesian ? Complex{*a.re, *a.im} : polar_point(*a.r, parse_phase(*a.phase));
  } catch (const std::invalid_argument& e) {
    err << "eval: " << e.what() << "\n";
    return kUsage;
  }
  if (polar && !(*a.r >= 0.0)) {
    err << "eval: --r must be non-negative\n";
    return kUsage;
  }
  const OutputRecord rec = evaluate(parse_function(a.fn), z, engine_config(a.engine));
  if (a.format == "csv") {
    out << csv_header() << "\n" << to_csv(rec) << "\n";
  } else if (a.format == "json") {
    out << to_json(rec).dump() << "\n";
  } else {
    out << to_text(rec, a.digits) << "\n";
  }
  return rec.converged ? kSuccess : kNumerical;
}

struct ArcArgs {
  std::string fn;
  double radius = 1.0;
  std::string phase_min = "0";
  std::string phase_max = "pi";
  std::size_t samples = 181;
  std::string out_path = "-";
  EngineFlags engine;
};

int cmd_arc(const ArcArgs& a, std::ostream& out, std::ostream& err) {
  double lo = 0.0;
  double hi_phase = 0.0;
  try {
    lo = parse_phase(a.phase_min);
    hi_phase = parse_phase(a.phase_max);
  } catch (const std::invalid_argument& e) {
    err << "arc: " << e.what() << "\n";
    return kUsage;
  }
  if (!(a.radius > 0.0) || !std::isfinite(a.radius) || a.samples < 2) {
    err << "arc: need radius > 0 and samples >= 2\n";
    return kUsage;
  }
  const std::vector<ArcSample> rows =
      arc(parse_function(a.fn), a.radius, lo, hi_phase, a.samples, engine_config(a.engine));
  if (a.out_path == "-") {
    write_arc_csv(rows, out);
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) {
      err << "arc: cannot open '" << a.out_path << "' for writing\n";
      return kUsage;
    }
    write_arc_csv(rows, file);
    file.flush();
    if (!file) {
      err << "arc: write to '" << a.out_path << "' failed\n";
      return kUsage;
    }
  }
  for (const ArcSample& s : rows) {
    if (!s.converged) {
      err << "arc: not converged at phase " << s.phase << "\n";
      return kNumerical;
    }
  }
  return kSuccess;
}

int cmd_table41(const EngineFlags& flags, std::ostream& out) {
  const Table41Report report = table41(engine_config(flags));
  print_table41(report, out);
  return report.all_ok() ? kSuccess : kNumerical;
}

int cmd_selftest(const EngineFlags& flags, const std::string& fault, std::ostream& out) {
  EngineConfig cfg = engine_config(flags);
  cfg.fault = fault == "hi-jacobian-sign" ? Fault::hi_jacobian_sign : Fault::none;
  const std::vector<CheckResult> checks = run_selftest(cfg);
  std::size_t failed = 0;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) {
      out << "  " << c.detail;
    }
    out << "\n";
    failed += c.passed ? 0 : 1;
  }
  out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kSuccess : kNumerical;
}

int cmd_bench(const std::vector<double>& radii, const std::vector<std::string>& phases,
              const EngineFlags& flags, std::ostream& out, std::ostream& err) {
  for (const std::string& p : phases) {
    try {
      parse_phase(p);
    } catch (const std::invalid_argument& e) {
      err << "bench: " << e.what() << "\n";
      return kUsage;
    }
  }
  const BenchReport report = bench(radii, phases, engine_config(flags));
  print_bench(report, out);
  return report.stokes_max_ok && report.radius_trend_ok ? kSuccess : kNumerical;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scorer functions Gi and Hi in the complex plane"};
  app.require_subcommand(1);

  const std::vector<std::string> functions = {"gi", "hi", "ai", "bi"};

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one function at one point");
  eval->add_option("--fn", eval_args.fn, "gi, hi, ai or bi")
      ->required()
      ->check(CLI::IsMember(functions));
  eval->add_option("--re", eval_args.re, "Real part");
  eval->add_option("--im", eval_args.im, "Imaginary part");
  eval->add_option("--r", eval_args.r, "Modulus");
  eval->add_option("--phase", eval_args.phase, "Phase, e.g. 5pi/6 or 0.3");
  eval->add_option("--format", eval_args.format)->check(CLI::IsMember({"text", "csv", "json"}));
  eval->add_option("--digits", eval_args.digits, "Significant digits in text output")
      ->check(CLI::Range(1, kMaxDigits));
  add_engine_flags(eval, eval_args.engine);

  EngineFlags table_flags;
  CLI::App* table = app.add_subcommand("table41", "Recompute the Hi reference table");
  add_engine_flags(table, table_flags);

  ArcArgs arc_args;
  CLI::App* arc_cmd = app.add_subcommand("arc", "Sample a function on a circular arc as CSV");
  arc_cmd->add_option("--fn", arc_args.fn)->required()->check(CLI::IsMember(functions));
  arc_cmd->add_option("--radius", arc_args.radius);
  arc_cmd->add_option("--phase-min", arc_args.phase_min);
  arc_cmd->add_option("--phase-max", arc_args.phase_max);
  arc_cmd->add_option("--samples", arc_args.samples);
  arc_cmd->add_option("--out", arc_args.out_path, "Output file, - for stdout");
  add_engine_flags(arc_cmd, arc_args.engine);

  EngineFlags selftest_flags;
  std::string fault = "none";
  CLI::App* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  selftest->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"none", "hi-jacobian-sign"}));
  add_engine_flags(selftest, selftest_flags);

  EngineFlags bench_flags;
  std::vector<double> radii = {1.0, 10.0, 100.0};
  std::vector<std::string> phases = {"pi", "5pi/6", "2pi/3"};
  CLI::App* bench_cmd = app.add_subcommand("bench", "Quadrature effort over a polar grid");
  bench_cmd->add_option("--radii", radii)->delimiter(',');
  bench_cmd->add_option("--phases", phases)->delimiter(',');
  add_engine_flags(bench_cmd, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_args, out, err);
    if (*table) return cmd_table41(table_flags, out);
    if (*arc_cmd) return cmd_arc(arc_args, out, err);
    if (*selftest) return cmd_selftest(selftest_flags, fault, out);
    if (*bench_cmd) return cmd_bench(radii, phases, bench_flags, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

}  // namespace scorer::cli
