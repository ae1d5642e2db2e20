#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "scorer/cli.hpp"

namespace scorer::cli {

namespace {

bool is_stokes(double phase) { return std::abs(phase - 2.0 * kPi / 3.0) < 1e-12; }

}  // namespace

BenchReport bench(const std::vector<double>& radii, const std::vector<std::string>& phases,
                  const EngineConfig& cfg) {
  BenchReport report;
  for (double r : radii) {
    for (const std::string& label : phases) {
      const double p = parse_phase(label);
      const Complex z = p == kPi ? Complex{-r, 0.0} : r * unit_phase(p);
      const auto t0 = std::chrono::steady_clock::now();
      const ScorerResult res = hi_integral_principal(z, cfg);
      const auto t1 = std::chrono::steady_clock::now();
      BenchRow row;
      row.radius = r;
      row.phase_label = label;
      row.phase = p;
      row.n_evaluations = res.n_evaluations;
      row.microseconds = std::chrono::duration<double, std::micro>(t1 - t0).count();
      row.converged = res.converged;
      report.rows.push_back(row);
    }
  }

  for (double r : radii) {
    const BenchRow* stokes = nullptr;
    for (const auto& row : report.rows) {
      if (row.radius == r && is_stokes(row.phase)) stokes = &row;
    }
    if (stokes == nullptr) continue;
    for (const auto& row : report.rows) {
      if (row.radius == r && &row != stokes && row.n_evaluations >= stokes->n_evaluations) {
        report.stokes_max_ok = false;
        char note[160];
        std::snprintf(note, sizeof note, "|z| = %g: %s needs %zu evaluations, Stokes line %zu",
                      r, row.phase_label.c_str(), row.n_evaluations, stokes->n_evaluations);
        report.notes.emplace_back(note);
      }
    }
  }

  if (radii.size() >= 2) {
    const double rmin = *std::min_element(radii.begin(), radii.end());
    const double rmax = *std::max_element(radii.begin(), radii.end());
    std::map<std::string, std::size_t> small;
    for (const auto& row : report.rows) {
      if (row.radius == rmin && !is_stokes(row.phase)) small[row.phase_label] = row.n_evaluations;
    }
    for (const auto& row : report.rows) {
      if (row.radius != rmax || is_stokes(row.phase)) continue;
      const auto it = small.find(row.phase_label);
      if (it != small.end() && row.n_evaluations > it->second) {
        report.radius_trend_ok = false;
        char note[160];
        std::snprintf(note, sizeof note, "ph %s: %zu evaluations at |z| = %g exceed %zu at |z| = %g",
                      row.phase_label.c_str(), row.n_evaluations, rmax, it->second, rmin);
        report.notes.emplace_back(note);
      }
    }
  }
  return report;
}

void print_bench(const BenchReport& report, std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof line, "%8s %8s %8s %10s %s\n", "|z|", "ph", "n_eval", "usec", "converged");
  out << line;
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof line, "%8g %8s %8zu %10.1f %s\n", row.radius, row.phase_label.c_str(),
                  row.n_evaluations, row.microseconds, row.converged ? "yes" : "no");
    out << line;
  }
  out << "stokes line has the most evaluations: " << (report.stokes_max_ok ? "yes" : "no") << "\n";
  out << "no more evaluations at the largest radius: " << (report.radius_trend_ok ? "yes" : "no")
      << "\n";
  for (const auto& n : report.notes) out << "  " << n << "\n";
}

}  // namespace scorer::cli
