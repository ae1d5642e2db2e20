// Integral representations of Hi and Gi along steepest-descent paths, and the
// connection formulas that carry them to the rest of the plane.

#include <algorithm>
#include <cmath>
#include <limits>

#include "scorer/contour.hpp"
#include "scorer/scorer.hpp"

namespace scorer {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Relative error charged for one Airy function evaluation.
constexpr double kAiryRelErr = 256.0 * kEps;

struct Sum {
  Complex value{};
  double err = 0.0;
  std::size_t n = 0;
  bool converged = true;

  void add(const quad::QuadratureResult& r) {
    value += r.value;
    err += r.abs_error_estimate;
    n += r.n_evaluations;
    converged = converged && r.converged;
  }

  // Later pieces of one contour share the tolerance of the whole integral.
  quad::QuadratureConfig next_piece(const quad::QuadratureConfig& cfg) const {
    quad::QuadratureConfig c = cfg;
    c.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    return c;
  }
};

ScorerResult finish(const Sum& s, Complex scale, Method method) {
  ScorerResult out;
  out.value = s.value * scale;
  out.abs_error_estimate = s.err * std::abs(scale);
  out.n_evaluations = s.n;
  out.converged = s.converged;
  out.method = method;
  out.trace = std::string(to_string(method));
  return out;
}

// Length over which exp(-p(t)) changes appreciably near a start point with
// p' and p'' as given.
double laplace_scale(Complex first, Complex second) {
  return 1.0 / std::max({1.0, std::abs(first), std::sqrt(std::abs(second))});
}

// For p(t) = t^3/3 - z t along the Hi paths.
double hi_scale(Complex t, Complex z) { return laplace_scale(t * t - z, 2.0 * t); }

// For p(t) = z t + t^3/3 along the Gi path.
double gi_scale(Complex t, Complex z) { return laplace_scale(t * t + z, 2.0 * t); }

double upper_phase(Complex z) { return std::atan2(z.imag(), z.real()); }

bool on_stokes(Complex z) {
  return std::abs(upper_phase(z) - 2.0 * kPi / 3.0) < contour::kStokesPhaseTol;
}

ScorerResult conjugated(ScorerResult r) {
  r.value = std::conj(r.value);
  r.trace = "conj_2_9>" + r.trace;
  return r;
}

// Hi(w) for any w whose upper-half image lies in 2pi/3 <= ph <= pi.
ScorerResult principal_any_half(Complex w, const EngineConfig& cfg) {
  if (w.imag() < 0.0) {
    return conjugated(hi_integral_principal(std::conj(w), cfg));
  }
  return hi_integral_principal({w.real(), std::abs(w.imag())}, cfg);
}

}  // namespace

ScorerResult hi_integral_principal(Complex z, const EngineConfig& cfg) {
  cfg.quad.validate();
  const double x = z.real();
  const double y = z.imag();
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("hi_integral_principal requires a finite argument");
  }
  if (y < 0.0) {
    throw DomainError("hi_integral_principal requires Im z >= 0");
  }
  Sum sum;
  if (y == 0.0 && x <= 0.0) {
    const quad::Integrand f = [x](double u) {
      return Complex{std::exp(x * u - u * u * u / 3.0), 0.0};
    };
    sum.add(quad::integrate_semi_infinite(f, 0.0, cfg.quad, hi_scale(0.0, z)));
    return finish(sum, 1.0 / kPi, Method::quad_3_6);
  }

  const contour::HiPathSpec spec = contour::hi_path_spec(x, y);
  if (spec.kind == contour::HiPathKind::stokes) {
    const double xs = spec.x;
    const double ys = spec.y;
    const double u0 = spec.u1;
    const quad::Integrand line = [xs, ys](double u) {
      const double phr = contour::phi_parts(u, kSqrt3 * u, xs, ys).real_part;
      return std::exp(-phr) * Complex{1.0, kSqrt3};
    };
    const quad::Integrand hyperbola = [xs, ys](double u) {
      const double v = contour::stokes_path(u, xs).v;
      const double phr = contour::phi_parts(u, v, xs, ys).real_part;
      const double e = std::exp(-phr);
      return e == 0.0 ? Complex{} : e * contour::stokes_jacobian(u, xs);
    };
    sum.add(quad::integrate_finite(line, 0.0, u0, cfg.quad));
    sum.add(quad::integrate_semi_infinite(hyperbola, u0, sum.next_piece(cfg.quad),
                                          hi_scale(spec.saddle, {xs, ys})));
    return finish(sum, 1.0 / kPi, Method::quad_3_6);
  }

  const bool faulty = cfg.fault == Fault::hi_jacobian_sign;
  const quad::Integrand f = [x, y, faulty](double u) {
    const double v = contour::hi_path_v_of_u(u, x, y);
    const double phr = contour::phi_parts(u, v, x, y).real_part;
    const double e = std::exp(-phr);
    if (e == 0.0) {
      return Complex{};
    }
    const Complex h = contour::hi_jacobian_u(u, v, x, y);
    return e * (faulty ? std::conj(h) : h);
  };
  sum.add(quad::integrate_semi_infinite(f, 0.0, cfg.quad, hi_scale(0.0, z)));
  return finish(sum, 1.0 / kPi, Method::quad_3_6);
}

ScorerResult hi_integral_v_form(Complex z, const EngineConfig& cfg) {
  cfg.quad.validate();
  const double x = z.real();
  const double y = z.imag();
  if (!(y > 0.0)) {
    throw DomainError("hi_integral_v_form requires Im z > 0");
  }
  const contour::HiPathSpec spec = contour::hi_path_spec(x, y);
  if (spec.kind != contour::HiPathKind::interior_sector) {
    throw DomainError("hi_integral_v_form requires 2pi/3 < ph z < pi");
  }
  const double v1 = spec.v1;
  const double w2 = 1.5 * (-x + std::sqrt(x * x - y * y / 3.0));

  // v = v1 - tau^2 removes the inverse square root at v1: with
  // R^2 = (4/3)(v1^2 - v^2)(w2 - v^2) and v1^2 - v^2 = tau^2 (2 v1 - tau^2),
  // 2 tau du/dv = -+2 (v^2 - u^2 + x) / sqrt((4/3)(2 v1 - tau^2)(w2 - v^2)).
  const quad::Integrand f = [x, y, v1, w2](double tau) {
    const double v = v1 - tau * tau;
    const double rfac = std::sqrt(4.0 / 3.0 * (2.0 * v1 - tau * tau) * (w2 - v * v));
    const double r = tau * rfac;
    const auto branch = [&](double u, double sign) {
      const double e = std::exp(-contour::phi_parts(u, v, x, y).real_part);
      if (e == 0.0) {
        return Complex{};
      }
      const double dudv = sign * 2.0 * (v * v - u * u + x) / rfac;
      return e * Complex{dudv, 2.0 * tau};
    };
    const double u_minus = -2.0 * v * (x + v * v / 3.0) / (y + r);
    const double u_plus = (y + r) / (2.0 * v);
    return branch(u_minus, -1.0) - branch(u_plus, 1.0);
  };
  Sum sum;
  sum.add(quad::integrate_finite(f, 0.0, std::sqrt(v1), cfg.quad));
  return finish(sum, 1.0 / kPi, Method::quad_3_10);
}

ScorerResult hi_integral_remark(Complex z, const EngineConfig& cfg) {
  cfg.quad.validate();
  const double x = z.real();
  const double y = z.imag();
  const double phase = upper_phase(z);
  constexpr double tol = contour::kStokesPhaseTol;
  if (!(y > 0.0) || phase < kPi / 3.0 - tol || phase > 2.0 * kPi / 3.0 + tol) {
    throw DomainError("hi_integral_remark requires pi/3 <= ph z <= 2pi/3");
  }
  Sum sum;
  if (on_stokes(z)) {
    // R vanishes doubly at the saddle; the two pieces of L are explicit.
    const double r = std::abs(z);
    const double xs = -0.5 * r;
    const double ys = 0.5 * kSqrt3 * r;
    const double v0 = std::sqrt(0.75 * r);
    const quad::Integrand line = [xs, ys](double v) {
      const double u = v / kSqrt3;
      const double e = std::exp(-contour::phi_parts(u, v, xs, ys).real_part);
      return e * Complex{1.0 / kSqrt3, 1.0};
    };
    const quad::Integrand hyperbola = [xs, ys](double v) {
      const double u = ys / v - v / kSqrt3;
      const double e = std::exp(-contour::phi_parts(u, v, xs, ys).real_part);
      if (e == 0.0) {
        return Complex{};
      }
      return e * Complex{-ys / (v * v) - 1.0 / kSqrt3, 1.0};
    };
    sum.add(quad::integrate_finite(line, 0.0, v0, cfg.quad));
    const Complex t0{v0 / kSqrt3, v0};
    sum.add(quad::integrate_semi_infinite(hyperbola, v0, sum.next_piece(cfg.quad),
                                          hi_scale(t0, {xs, ys})));
  } else {
    const quad::Integrand f = [x, y](double v) {
      const double u = contour::hi_path_u_of_v(v, x, y, contour::Branch::minus);
      const double e = std::exp(-contour::phi_parts(u, v, x, y).real_part);
      if (e == 0.0) {
        return Complex{};
      }
      const double r = contour::hi_path_radical(v, x, y);
      if (r == 0.0) {
        throw SingularJacobian("dt/dv is singular on path L");
      }
      return e * Complex{-(v * v - u * u + x) / r, 1.0};
    };
    if (x < 0.0) {
      const double vm = std::sqrt(-1.5 * x);
      sum.add(quad::integrate_finite(f, 0.0, vm, cfg.quad));
      const Complex tm{contour::hi_path_u_of_v(vm, x, y, contour::Branch::minus), vm};
      sum.add(quad::integrate_semi_infinite(f, vm, sum.next_piece(cfg.quad), hi_scale(tm, z)));
    } else {
      sum.add(quad::integrate_semi_infinite(f, 0.0, cfg.quad, hi_scale(0.0, z)));
    }
  }
  ScorerResult out = finish(sum, 1.0 / kPi, Method::quad_3_12);
  const Complex airy_term = 2.0 * unit_phase(-kPi / 6.0) *
                            airy::ai(airy::rotate(z, -2.0 * kPi / 3.0), cfg.airy).value;
  out.value += airy_term;
  out.abs_error_estimate +=
      kAiryRelErr * std::abs(airy_term) + 2.0 * kEps * std::abs(out.value);
  out.n_evaluations += 1;
  return out;
}

ScorerResult hi_connection(Complex z, ConnectionSign sign, const EngineConfig& cfg) {
  const double angle = sign == ConnectionSign::upper ? 2.0 * kPi / 3.0 : -2.0 * kPi / 3.0;
  const Complex w = airy::rotate(z, angle);
  if (w != Complex{}) {
    const double a = std::abs(std::arg(w));
    if (a < 2.0 * kPi / 3.0 - contour::kStokesPhaseTol) {
      throw DomainError("hi_connection: rotated argument is outside 2pi/3 <= |ph| <= pi");
    }
  }
  const ScorerResult rotated = principal_any_half(w, cfg);
  const Complex airy_term = 2.0 * unit_phase(-angle / 4.0) *
                            airy::ai(airy::rotate(z, -angle), cfg.airy).value;
  const Complex first = unit_phase(angle) * rotated.value;
  ScorerResult out;
  out.value = first + airy_term;
  out.method = Method::conn_2_7;
  out.abs_error_estimate = rotated.abs_error_estimate + kAiryRelErr * std::abs(airy_term) +
                           2.0 * kEps * (std::abs(first) + std::abs(out.value));
  out.n_evaluations = rotated.n_evaluations + 1;
  out.converged = rotated.converged;
  out.trace = "conn_2_7>" + rotated.trace;
  return out;
}

ScorerResult gi_integral(Complex z, const EngineConfig& cfg) {
  cfg.quad.validate();
  const double x = z.real();
  const double y = z.imag();
  if (!(y > 0.0)) {
    throw DomainError("gi_integral requires Im z > 0; use gi_real_positive on the real axis");
  }
  if (upper_phase(z) > 2.0 * kPi / 3.0 + contour::kStokesPhaseTol) {
    throw DomainError("gi_integral requires 0 <= ph z <= 2pi/3");
  }
  const quad::Integrand f = [x, y](double u) {
    const double v = contour::gi_path_v_of_u(u, x, y);
    const double e = std::exp(-contour::psi_parts(u, v, x, y).imag_part);
    if (e == 0.0) {
      return Complex{};
    }
    return e * contour::gi_jacobian_u(u, v, x, y);
  };
  Sum sum;
  if (x < 0.0) {
    const double um = std::sqrt(-1.5 * x);
    sum.add(quad::integrate_finite(f, 0.0, um, cfg.quad));
    const Complex tm{um, contour::gi_path_v_of_u(um, x, y)};
    sum.add(quad::integrate_semi_infinite(f, um, sum.next_piece(cfg.quad), gi_scale(tm, z)));
  } else {
    sum.add(quad::integrate_semi_infinite(f, 0.0, cfg.quad, gi_scale(0.0, z)));
  }
  ScorerResult out = finish(sum, Complex{0.0, -1.0 / kPi}, Method::quad_3_17);
  const Complex airy_term = Complex{0.0, 1.0} * airy::ai(z, cfg.airy).value;
  out.value += airy_term;
  out.abs_error_estimate +=
      kAiryRelErr * std::abs(airy_term) + 2.0 * kEps * std::abs(out.value);
  out.n_evaluations += 1;
  return out;
}

ScorerResult gi_real_positive(double x, const EngineConfig& cfg) {
  cfg.quad.validate();
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("gi_real_positive requires finite x >= 0");
  }
  const double s = std::sqrt(x);
  Sum sum;
  if (s > 0.0) {
    const quad::Integrand near = [x](double v) {
      return Complex{std::exp(-x * v + v * v * v / 3.0), 0.0};
    };
    sum.add(quad::integrate_finite(near, 0.0, s, cfg.quad));
  }
  const quad::Integrand far = [x](double v) {
    return Complex{std::exp(2.0 * x * v - 8.0 / 3.0 * v * v * v), 0.0};
  };
  sum.add(quad::integrate_semi_infinite(far, s, sum.next_piece(cfg.quad),
                                        laplace_scale(6.0 * x, 16.0 * s)));
  ScorerResult out = finish(sum, 1.0 / kPi, Method::quad_3_18);
  out.value = {out.value.real(), 0.0};
  return out;
}

ScorerResult gi_from_hi_rotations(Complex z, const EngineConfig& cfg) {
  if (z != Complex{} && std::abs(std::arg(z)) > kPi / 3.0 + contour::kStokesPhaseTol) {
    throw DomainError("gi_from_hi_rotations requires |ph z| <= pi/3");
  }
  // One rotated argument lands in 2pi/3 <= |ph| <= pi and is integrated
  // directly; off the real axis the other falls in pi/3 <= |ph| < 2pi/3 and
  // is first carried across by the connection formula.
  const auto rotated_hi = [&cfg](Complex w) {
    const double a = std::abs(std::arg(w));
    if (w == Complex{} || a >= 2.0 * kPi / 3.0 - contour::kStokesPhaseTol) {
      return principal_any_half(w, cfg);
    }
    if (w.imag() < 0.0) {
      return conjugated(hi_connection(std::conj(w), ConnectionSign::upper, cfg));
    }
    return hi_connection(w, ConnectionSign::upper, cfg);
  };
  const ScorerResult plus = rotated_hi(airy::rotate(z, 2.0 * kPi / 3.0));
  const ScorerResult minus = rotated_hi(airy::rotate(z, -2.0 * kPi / 3.0));
  const Complex a = unit_phase(2.0 * kPi / 3.0) * plus.value;
  const Complex b = unit_phase(-2.0 * kPi / 3.0) * minus.value;
  ScorerResult out;
  out.value = -0.5 * (a + b);
  out.method = Method::conn_2_8;
  out.abs_error_estimate = 0.5 * (plus.abs_error_estimate + minus.abs_error_estimate) +
                           2.0 * kEps * (std::abs(a) + std::abs(b));
  out.n_evaluations = plus.n_evaluations + minus.n_evaluations;
  out.converged = plus.converged && minus.converged;
  out.trace = "conn_2_8>(" + plus.trace + "," + minus.trace + ")";
  return out;
}

}  // namespace scorer
