// Invariant suite behind `scorer selftest`.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "scorer/cli.hpp"
#include "scorer/contour.hpp"

namespace scorer::cli {

namespace {

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Worst relative residual of `residual` over z; fails on exceptions too.
CheckResult grid_check(std::string name, const std::vector<Complex>& grid, double tol,
                       const std::function<double(Complex)>& residual) {
  double worst = 0.0;
  Complex at{};
  for (Complex z : grid) {
    double r = 0.0;
    try {
      r = residual(z);
    } catch (const std::exception& e) {
      return {std::move(name), false, std::string("exception: ") + e.what()};
    }
    if (!(r <= worst)) {
      worst = std::isnan(r) ? INFINITY : r;
      at = z;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail, "%zu points, worst %.2e at (%.3g, %.3g), tol %.0e",
                grid.size(), worst, at.real(), at.imag(), tol);
  return {std::move(name), worst <= tol, detail};
}

std::vector<Complex> polar_grid(const std::vector<double>& radii,
                                const std::vector<double>& phases) {
  std::vector<Complex> g;
  for (double r : radii) {
    for (double p : phases) {
      g.push_back(p == kPi ? Complex{-r, 0.0} : r * unit_phase(p));
    }
  }
  return g;
}

std::vector<double> phase_steps(double from, double to, int n) {
  std::vector<double> p;
  for (int k = 0; k <= n; ++k) {
    p.push_back(k == n ? to : from + (to - from) * k / n);
  }
  return p;
}

CheckResult quadrature_oracles(const EngineConfig& cfg) {
  struct Case {
    const char* name;
    std::function<quad::QuadratureResult()> run;
    Complex exact;
  };
  const auto& q = cfg.quad;
  const std::vector<Case> cases = {
      {"t^2", [&] { return quad::integrate_finite([](double t) { return Complex{t * t}; }, 0, 1, q); },
       1.0 / 3.0},
      {"exp(-t) on (0,10)",
       [&] { return quad::integrate_finite([](double t) { return Complex{std::exp(-t)}; }, 0, 10, q); },
       1.0 - std::exp(-10.0)},
      {"sin", [&] { return quad::integrate_finite([](double t) { return Complex{std::sin(t)}; }, 0, kPi, q); },
       2.0},
      {"1/(1+t^2)",
       [&] { return quad::integrate_finite([](double t) { return Complex{1.0 / (1.0 + t * t)}; }, 0, 1, q); },
       kPi / 4.0},
      {"sqrt",
       [&] { return quad::integrate_finite([](double t) { return Complex{std::sqrt(t)}; }, 0, 1, q); },
       2.0 / 3.0},
      {"exp(it)",
       [&] { return quad::integrate_finite([](double t) { return std::exp(Complex{0.0, t}); }, 0, 1, q); },
       Complex{std::sin(1.0), 1.0 - std::cos(1.0)}},
      {"exp(-t) on (0,inf)",
       [&] { return quad::integrate_semi_infinite([](double t) { return Complex{std::exp(-t)}; }, 0, q); },
       1.0},
      {"exp(-t^2)",
       [&] { return quad::integrate_semi_infinite([](double t) { return Complex{std::exp(-t * t)}; }, 0, q); },
       std::sqrt(kPi) / 2.0},
      {"exp(-t^3/3)",
       [&] {
         return quad::integrate_semi_infinite(
             [](double t) { return Complex{std::exp(-t * t * t / 3.0)}; }, 0, q);
       },
       kPi * hi_at_zero()},
      {"t exp(-t)",
       [&] { return quad::integrate_semi_infinite([](double t) { return Complex{t * std::exp(-t)}; }, 0, q); },
       1.0},
      {"cos(t) exp(-t)",
       [&] {
         return quad::integrate_semi_infinite(
             [](double t) { return Complex{std::cos(t) * std::exp(-t)}; }, 0, q);
       },
       0.5},
  };
  for (const Case& c : cases) {
    const quad::QuadratureResult r = c.run();
    const double err = std::abs(r.value - c.exact);
    if (r.converged && err > 10.0 * r.abs_error_estimate + 4e-16 * std::abs(c.exact)) {
      return {"quadrature.error_honesty", false,
              std::string(c.name) + ": true error " + fmt("%.2e", err) + " vs estimate " +
                  fmt("%.2e", r.abs_error_estimate)};
    }
  }
  return {"quadrature.error_honesty", true, std::to_string(cases.size()) + " closed forms"};
}

CheckResult contour_residuals() {
  double worst = 0.0;
  const Complex zs[] = {10.0 * unit_phase(5.0 * kPi / 6.0), 3.0 * unit_phase(0.9 * kPi),
                        1.0 * unit_phase(0.7 * kPi)};
  for (Complex z : zs) {
    const double x = z.real(), y = z.imag();
    for (int k = 1; k <= 100; ++k) {
      const double u = 0.05 * k;
      const double v = contour::hi_path_v_of_u(u, x, y);
      const double phi = std::abs(contour::phi_parts(u, v, x, y).imag_part);
      worst = std::max(worst, phi / (1.0 + u * u * u));
    }
  }
  for (int k = 1; k <= 100; ++k) {
    const double u = 0.05 * k;
    const double x = -2.0;
    const double v = contour::stokes_path(u, x).v;
    worst = std::max(worst, std::abs(contour::phi_parts(u, v, x, -kSqrt3 * x).imag_part) /
                                (1.0 + u * u * u));
    const Complex zg = 2.0 * unit_phase(kPi / 3.0);
    const double vg = contour::gi_path_v_of_u(u, zg.real(), zg.imag());
    worst = std::max(worst, std::abs(contour::psi_parts(u, vg, zg.real(), zg.imag()).real_part) /
                                (1.0 + u * u * u));
  }
  return {"contour.constant_phase", worst < 1e-11, fmt("worst scaled residual %.2e", worst)};
}

}  // namespace

std::vector<CheckResult> run_selftest(const EngineConfig& cfg) {
  std::vector<CheckResult> out;
  const double third = kPi / 3.0;

  out.push_back(quadrature_oracles(cfg));

  {
    const auto grid = polar_grid({0.5, 1.0, 2.0, 4.0, 6.0, 8.0}, phase_steps(-kPi, kPi, 24));
    out.push_back(grid_check("airy.wronskian", grid, 1e-11, [&](Complex z) {
      const auto a = airy::ai(z, cfg.airy);
      const auto b = airy::bi(z, cfg.airy);
      const Complex p = a.value * b.derivative;
      const Complex q = a.derivative * b.value;
      const double scale = std::max({std::abs(p), std::abs(q), 1.0 / kPi});
      return std::abs(p - q - 1.0 / kPi) / scale;
    }));
    out.push_back(grid_check("airy.three_solutions", grid, 1e-12, [&](Complex z) {
      const Complex a0 = airy::ai(z, cfg.airy).value;
      const Complex a1 = unit_phase(-2.0 * third) *
                         airy::airy_rotated(z, airy::RotationIndex::plus, cfg.airy);
      const Complex am = unit_phase(2.0 * third) *
                         airy::airy_rotated(z, airy::RotationIndex::minus, cfg.airy);
      return std::abs(a0 + a1 + am) / std::max({std::abs(a0), std::abs(a1), std::abs(am)});
    }));
  }

  {
    const double g0 = gi(0.0, cfg).value.real();
    const double h0 = hi(0.0, cfg).value.real();
    const double b0 = airy::bi(0.0, cfg.airy).value.real();
    const double closed = 1.0 / (std::pow(3.0, 7.0 / 6.0) * kGammaTwoThirds);
    const double worst = std::max({std::abs(g0 - closed) / closed,
                                   std::abs(h0 - 2.0 * closed) / (2.0 * closed),
                                   std::abs(b0 - 3.0 * g0) / b0});
    out.push_back({"scorer.initial_values", worst < 1e-13, fmt("worst %.2e", worst)});
  }

  {
    const Table41Report t = table41(cfg);
    int bad = 0;
    double worst = 0.0;
    for (const auto& c : t.cells) {
      bad += c.ok ? 0 : 1;
      worst = std::max(worst, c.abs_diff / c.half_unit);
    }
    out.push_back({"table41.quadrature", bad == 0,
                   std::to_string(t.cells.size() - bad) + "/" + std::to_string(t.cells.size()) +
                       " cells, worst " + fmt("%.2f", worst) + " half-units"});
    int abad = 0;
    for (const auto& c : t.asymptotic) abad += c.ok ? 0 : 1;
    out.push_back({"table41.asymptotic", abad == 0,
                   std::to_string(t.asymptotic.size() - abad) + "/" +
                       std::to_string(t.asymptotic.size()) + " bracketed values"});
  }

  const auto identity_grid =
      polar_grid({0.5, 1.0, 2.0, 5.0, 8.0}, phase_steps(0.0, kPi, 6));
  out.push_back(grid_check("identity.gi_plus_hi.dispatch", identity_grid, 1e-9, [&](Complex z) {
    const Complex g = gi(z, cfg).value;
    const Complex h = hi(z, cfg).value;
    const Complex b = airy::bi(z, cfg.airy).value;
    return std::abs(g + h - b) / std::max({std::abs(g), std::abs(h), std::abs(b)});
  }));

  {
    // Gi and Hi each from a representation of its own, never through Bi.
    std::vector<Complex> g;
    for (Complex z : identity_grid) {
      if (std::arg(z) <= 2.0 * third + 1e-12) g.push_back(z);
    }
    out.push_back(grid_check("identity.gi_plus_hi.independent", g, 1e-9, [&](Complex z) {
      const Complex gv = z.imag() == 0.0 ? gi_real_positive(z.real(), cfg).value
                                         : gi_integral(z, cfg).value;
      const Complex hv = std::arg(z) >= 2.0 * third - 1e-12
                             ? hi_integral_principal(z, cfg).value
                             : hi_connection(z, ConnectionSign::upper, cfg).value;
      const Complex b = airy::bi(z, cfg.airy).value;
      return std::abs(gv + hv - b) / std::max({std::abs(gv), std::abs(hv), std::abs(b)});
    }));
  }

  out.push_back(grid_check(
      "connection.upper", polar_grid({0.5, 1.0, 2.0, 3.0, 5.0, 8.0}, phase_steps(third, 0.66 * kPi, 4)),
      1e-9, [&](Complex z) {
        const Complex lhs = hi(z, cfg).value;
        const Complex rhs = unit_phase(2.0 * third) * hi(airy::rotate(z, 2.0 * third), cfg).value +
                            2.0 * unit_phase(-kPi / 6.0) *
                                airy::ai(airy::rotate(z, -2.0 * third), cfg.airy).value;
        return rel(lhs, rhs);
      }));

  {
    const auto s0 = polar_grid({0.5, 1.0, 2.0, 5.0, 8.0},
                               {0.1, 0.3, 0.5, 0.7, 0.9, -0.1, -0.5, -0.9});
    out.push_back(grid_check("rotation.s0", s0, 1e-9, [&](Complex z) {
      const Complex a = gi_from_hi_rotations(z, cfg).value;
      const Complex b = z.imag() < 0.0 ? std::conj(gi_integral(std::conj(z), cfg).value)
                                       : gi_integral(z, cfg).value;
      return rel(a, b);
    }));
    out.push_back(grid_check("rotation.s0.real_axis", polar_grid({0.5, 1.0, 2.0, 5.0, 8.0}, {0.0}),
                             1e-9, [&](Complex z) {
                               return rel(gi_from_hi_rotations(z, cfg).value,
                                          gi_real_positive(z.real(), cfg).value);
                             }));
  }

  {
    const auto grid = polar_grid({0.5, 1.0, 2.0, 5.0, 8.0, 12.0, 20.0}, phase_steps(0.05, kPi - 0.05, 12));
    out.push_back(grid_check("symmetry.conjugate", grid, 1e-14, [&](Complex z) {
      return std::max(rel(gi(std::conj(z), cfg).value, std::conj(gi(z, cfg).value)),
                      rel(hi(std::conj(z), cfg).value, std::conj(hi(z, cfg).value)));
    }));
  }

  out.push_back(contour_residuals());

  {
    const auto grid = polar_grid({1.0, 3.0, 10.0, 30.0}, {0.7 * kPi, 5.0 * kPi / 6.0, 0.95 * kPi});
    out.push_back(grid_check("cross.u_form_vs_v_form", grid, 1e-9, [&](Complex z) {
      return rel(hi_integral_principal(z, cfg).value, hi_integral_v_form(z, cfg).value);
    }));
    const auto lower = polar_grid({0.5, 2.0, 5.0}, {third, 0.4 * kPi, 0.5 * kPi, 0.6 * kPi, 2.0 * third});
    out.push_back(grid_check("cross.path_l_vs_connection", lower, 1e-9, [&](Complex z) {
      return rel(hi_integral_remark(z, cfg).value, hi_connection(z, ConnectionSign::upper, cfg).value);
    }));
  }

  {
    double worst = 0.0;
    for (double p : phase_steps(-kPi, kPi, 24)) {
      const Complex z = unit_phase(p);
      const SeriesJet g = scorer_series_jet(ScorerKind::gi, z);
      const SeriesJet h = scorer_series_jet(ScorerKind::hi, z);
      worst = std::max(worst, std::abs(g.second - z * g.value + 1.0 / kPi));
      worst = std::max(worst, std::abs(h.second - z * h.value - 1.0 / kPi));
    }
    out.push_back({"ode_residual", worst < 1e-10, fmt("worst %.2e at |z| = 1", worst)});
  }

  for (Function fn : {Function::gi, Function::hi}) {
    const auto samples = arc(fn, 1.0, 0.0, kPi, 181, cfg);
    const bool converged =
        std::all_of(samples.begin(), samples.end(), [](const ArcSample& s) { return s.converged; });
    const SmoothnessReport s = check_arc_smoothness(fn, 1.0, samples, cfg);
    out.push_back({"arc." + std::string(to_string(fn)) + ".smooth", converged && s.ok,
                   fmt("worst jump/bound %.3f", s.worst_ratio)});
  }
  return out;
}

}  // namespace scorer::cli
