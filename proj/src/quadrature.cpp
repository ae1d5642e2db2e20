#include "scorer/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace scorer::quad {

namespace {

// Kronrod abscissae on [-1, 1]; the odd-indexed ones are the 7-point Gauss
// nodes. xgk[7] is the centre.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// QUADPACK-style error for one real component of the panel.
double component_error(double resk, double resg, double resabs, double resasc,
                       double half) {
  double err = std::abs((resk - resg) * half);
  resasc *= half;
  resabs *= half;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > kTiny / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return err;
}

struct Panel {
  double a;
  double b;
  Complex value;
  double err;
};

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const {
    return l.err < r.err;
  }
};

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 10.0 * kEps)) {
    throw std::invalid_argument("rel_tol must exceed 10 machine epsilon");
  }
  if (!(abs_tol >= 0.0)) {
    throw std::invalid_argument("abs_tol must be non-negative");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("max_subdivisions must be at least 1");
  }
  if (!(tail_cut_ratio > 0.0 && tail_cut_ratio < 1.0)) {
    throw std::invalid_argument("tail_cut_ratio must lie in (0, 1)");
  }
}

PanelEstimate panel_rule(const Integrand& f, double a, double b) {
  if (!(a < b)) {
    throw DomainError("panel_rule requires a < b");
  }
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  auto eval = [&](double t) {
    const Complex v = f(t);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NonFiniteIntegrand(t);
    }
    return v;
  };

  std::array<Complex, 7> lo{};
  std::array<Complex, 7> hi{};
  const Complex fc = eval(centre);

  Complex resk = fc * wgk[7];
  Complex resg = fc * wg[3];
  double absk_re = std::abs(fc.real()) * wgk[7];
  double absk_im = std::abs(fc.imag()) * wgk[7];

  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    lo[j] = eval(centre - dx);
    hi[j] = eval(centre + dx);
    const Complex sum = lo[j] + hi[j];
    resk += wgk[j] * sum;
    if (j % 2 == 1) {
      resg += wg[j / 2] * sum;
    }
    absk_re += wgk[j] * (std::abs(lo[j].real()) + std::abs(hi[j].real()));
    absk_im += wgk[j] * (std::abs(lo[j].imag()) + std::abs(hi[j].imag()));
  }

  const Complex mean = 0.5 * resk;
  double asc_re = wgk[7] * std::abs(fc.real() - mean.real());
  double asc_im = wgk[7] * std::abs(fc.imag() - mean.imag());
  for (std::size_t j = 0; j < 7; ++j) {
    asc_re += wgk[j] * (std::abs(lo[j].real() - mean.real()) +
                        std::abs(hi[j].real() - mean.real()));
    asc_im += wgk[j] * (std::abs(lo[j].imag() - mean.imag()) +
                        std::abs(hi[j].imag() - mean.imag()));
  }

  PanelEstimate out;
  out.value = resk * half;
  out.err = component_error(resk.real(), resg.real(), absk_re, asc_re, half) +
            component_error(resk.imag(), resg.imag(), absk_im, asc_im, half);
  out.n = kPanelNodes;
  return out;
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b)) {
    throw DomainError("integrate_finite requires a < b");
  }

  QuadratureResult result;
  std::priority_queue<Panel, std::vector<Panel>, ByError> panels;

  const PanelEstimate first = panel_rule(f, a, b);
  result.n_evaluations += first.n;
  panels.push({a, b, first.value, first.err});

  Complex total = first.value;
  double total_err = first.err;
  auto tolerance = [&] {
    return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
  };

  bool converged = total_err <= tolerance();
  while (!converged && panels.size() < cfg.max_subdivisions) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Too narrow to split further in double precision.
    if (!(worst.a < mid && mid < worst.b)) {
      break;
    }
    panels.pop();
    const PanelEstimate left = panel_rule(f, worst.a, mid);
    const PanelEstimate right = panel_rule(f, mid, worst.b);
    result.n_evaluations += left.n + right.n;
    panels.push({worst.a, mid, left.value, left.err});
    panels.push({mid, worst.b, right.value, right.err});

    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    converged = total_err <= tolerance();
  }

  // Resum to drop the drift of the running updates.
  total = {};
  total_err = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_err += panels.top().err;
    panels.pop();
  }
  result.value = total;
  result.abs_error_estimate = total_err;
  result.converged = total_err <= tolerance();
  return result;
}

namespace {

QuadratureResult semi_infinite_mapped(const Integrand& f, double a, double scale,
                                      const QuadratureConfig& cfg) {
  const Integrand mapped = [&f, a, scale](double s) -> Complex {
    const double w = 1.0 - s;
    const Complex v = f(a + scale * s / w);
    if (v == Complex{}) {
      return v;
    }
    return v * (scale / (w * w));
  };
  return integrate_finite(mapped, 0.0, 1.0, cfg);
}

QuadratureResult semi_infinite_doubling(const Integrand& f, double a, double scale,
                                        const QuadratureConfig& cfg) {
  QuadratureResult result;
  result.converged = true;
  double left = a;
  double width = scale;
  int quiet_panels = 0;
  // 2^64 panel widths reach far beyond any decay scale seen in practice.
  for (int k = 0; k < 64 && quiet_panels < 2; ++k) {
    const QuadratureResult piece =
        integrate_finite(f, left, left + width, cfg);
    result.value += piece.value;
    result.abs_error_estimate += piece.abs_error_estimate;
    result.n_evaluations += piece.n_evaluations;
    result.converged = result.converged && piece.converged;
    if (std::abs(piece.value) <= cfg.tail_cut_ratio * std::abs(result.value)) {
      ++quiet_panels;
    } else {
      quiet_panels = 0;
    }
    left += width;
    width *= 2.0;
  }
  result.converged = result.converged && quiet_panels >= 2;
  return result;
}

}  // namespace

QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureConfig& cfg, double scale) {
  cfg.validate();
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("integrate_semi_infinite requires a positive finite scale");
  }
  switch (cfg.semi_infinite) {
    case SemiInfiniteStrategy::panel_doubling:
      return semi_infinite_doubling(f, a, scale, cfg);
    case SemiInfiniteStrategy::rational_map:
      break;
  }
  return semi_infinite_mapped(f, a, scale, cfg);
}

}  // namespace scorer::quad
