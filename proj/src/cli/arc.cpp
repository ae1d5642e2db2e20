#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "scorer/cli.hpp"

namespace scorer::cli {

namespace {

Complex value_at(Function fn, Complex z, const EngineConfig& cfg, bool* converged) {
  const OutputRecord rec = evaluate(fn, z, cfg);
  if (converged != nullptr) {
    *converged = rec.converged;
  }
  return {rec.value_re, rec.value_im};
}

}  // namespace

std::vector<ArcSample> arc(Function fn, double radius, double phase_min, double phase_max,
                           std::size_t samples, const EngineConfig& cfg) {
  if (samples < 2) {
    throw std::invalid_argument("arc needs at least 2 samples");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("arc radius must be positive");
  }
  if (!(phase_max > phase_min)) {
    throw std::invalid_argument("arc phase range must be increasing");
  }
  std::vector<ArcSample> out(samples);
  const double step = (phase_max - phase_min) / static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    // The last phase is taken verbatim so that e.g. pi hits the negative axis.
    const double phase = k + 1 == samples ? phase_max : phase_min + step * static_cast<double>(k);
    const Complex z = phase == kPi ? Complex{-radius, 0.0} : radius * unit_phase(phase);
    out[k].phase = phase;
    out[k].value = value_at(fn, z, cfg, &out[k].converged);
  }
  return out;
}

void write_arc_csv(const std::vector<ArcSample>& samples, std::ostream& out) {
  out << "phase,re_value,im_value\n";
  char line[128];
  for (const ArcSample& s : samples) {
    std::snprintf(line, sizeof line, "%.15e,%.15e,%.15e\n", s.phase, s.value.real(),
                  s.value.imag());
    out << line;
  }
}

SmoothnessReport check_arc_smoothness(Function fn, double radius,
                                      const std::vector<ArcSample>& samples,
                                      const EngineConfig& cfg) {
  SmoothnessReport report;
  const std::size_t n = samples.size();
  if (n < 2) {
    report.ok = true;
    return report;
  }
  const double h = samples[1].phase - samples[0].phase;
  const double delta = h / 16.0;
  std::vector<Complex> d(n);
  double fmax = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double p = samples[k].phase;
    const Complex up = value_at(fn, radius * unit_phase(p + delta), cfg, nullptr);
    const Complex dn = value_at(fn, radius * unit_phase(p - delta), cfg, nullptr);
    d[k] = (up - dn) / (2.0 * delta);
    fmax = std::max(fmax, std::abs(samples[k].value));
  }
  report.ok = true;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double jump = std::abs(samples[k + 1].value - samples[k].value);
    const double second = std::abs(d[k + 1] - d[k]) / h;
    const double bound = h * std::max(std::abs(d[k]), std::abs(d[k + 1])) +
                         0.55 * h * h * second + 1e-12 * fmax;
    const double ratio = jump / bound;
    if (ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_phase = samples[k].phase;
    }
  }
  report.ok = report.worst_ratio <= 1.0;
  return report;
}

}  // namespace scorer::cli
