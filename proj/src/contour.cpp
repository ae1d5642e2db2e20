#include "scorer/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scorer::contour {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Radicand y^2 + 4w^2(x + w^2/3), clamped at zero when it is negative only by
// rounding.
double clamped_radicand(double w, double x, double y) {
  const double w2 = w * w;
  const double rad = y * y + 4.0 * w2 * (x + w2 / 3.0);
  if (rad >= 0.0) {
    return rad;
  }
  const double scale = y * y + 4.0 * w2 * (std::abs(x) + w2 / 3.0);
  if (rad >= -64.0 * kEps * scale) {
    return 0.0;
  }
  throw DomainError("negative radicand y^2 + 4w^2(x + w^2/3)");
}

}  // namespace

HiPathSpec hi_path_spec(double x, double y) {
  if (y < 0.0) {
    throw DomainError("hi_path_spec requires y >= 0");
  }
  const double phase = std::atan2(y, x);
  HiPathSpec spec;
  spec.x = x;
  spec.y = y;
  if (y == 0.0 && x < 0.0) {
    spec.kind = HiPathKind::real_axis;
    return spec;
  }
  if (std::abs(phase - 2.0 * kPi / 3.0) < kStokesPhaseTol) {
    spec.kind = HiPathKind::stokes;
    const double r = std::hypot(x, y);
    // x = -r/2 on the line, taken from |z| to keep the saddle exact.
    spec.x = -0.5 * r;
    spec.y = 0.5 * kSqrt3 * r;
    spec.saddle = {std::sqrt(0.25 * r), std::sqrt(0.75 * r)};
    spec.v1 = spec.saddle.imag();
    spec.u1 = spec.saddle.real();
    return spec;
  }
  if (!(phase > 2.0 * kPi / 3.0) || !(x < 0.0)) {
    throw DomainError("Hi contour requires 2pi/3 <= ph z <= pi");
  }
  spec.kind = HiPathKind::interior_sector;
  const BranchPoint bp = v1_branch_point(x, y);
  spec.v1 = bp.v1;
  spec.u1 = bp.u1;
  return spec;
}

PhaseParts phi_parts(double u, double v, double x, double y) {
  return {u * u * u / 3.0 - u * v * v - x * u + y * v,
          u * u * v - v * v * v / 3.0 - x * v - y * u};
}

PhaseParts psi_parts(double u, double v, double x, double y) {
  return {u * u * u / 3.0 - u * v * v + x * u - y * v,
          u * u * v - v * v * v / 3.0 + x * v + y * u};
}

double hi_path_v_of_u(double u, double x, double y) {
  if (u < 0.0) throw DomainError("hi_path_v_of_u requires u >= 0");
  if (!(x < 0.0)) throw DomainError("hi_path_v_of_u requires x < 0");
  if (y < 0.0) throw DomainError("hi_path_v_of_u requires y >= 0");
  if (!(3.0 * x * x > y * y)) {
    throw DomainError("hi_path_v_of_u requires 3x^2 > y^2");
  }
  const double q = u * u - x;
  const double p = 1.5 * y * u;
  const double s = std::min(1.0, p / (q * std::sqrt(q)));
  return 2.0 * std::sqrt(q) * std::sin(std::asin(s) / 3.0);
}

Complex hi_jacobian_u(double u, double v, double x, double y) {
  const double den = v * v - u * u + x;
  if (den == 0.0) {
    throw SingularJacobian("dt/du is singular: v^2 - u^2 + x = 0");
  }
  return {1.0, (2.0 * u * v - y) / den};
}

double hi_path_radical(double v, double x, double y) {
  return std::sqrt(clamped_radicand(v, x, y));
}

double hi_path_u_of_v(double v, double x, double y, Branch branch) {
  if (!(v > 0.0)) {
    throw DomainError("hi_path_u_of_v requires v > 0");
  }
  const double r = hi_path_radical(v, x, y);
  if (branch == Branch::plus) {
    return (y + r) / (2.0 * v);
  }
  // (y - R)/(2v) rewritten without cancellation.
  if (y + r == 0.0) {
    return 0.0;
  }
  return -2.0 * v * (x + v * v / 3.0) / (y + r);
}

BranchPoint v1_branch_point(double x, double y) {
  if (!(x < 0.0)) throw DomainError("v1_branch_point requires x < 0");
  if (!(y > 0.0)) throw DomainError("v1_branch_point requires y > 0");
  const double disc = x * x - y * y / 3.0;
  if (disc < -64.0 * kEps * x * x) {
    throw DomainError("v1_branch_point requires 3x^2 >= y^2");
  }
  // -x - sqrt(x^2 - y^2/3) = (y^2/3)/(-x + sqrt(x^2 - y^2/3))
  const double root = std::sqrt(std::max(0.0, disc));
  const double inner = (y * y / 3.0) / (-x + root);
  BranchPoint bp;
  bp.v1 = std::sqrt(1.5 * inner);
  bp.u1 = y / (2.0 * bp.v1);
  return bp;
}

Complex hi_jacobian_v(double u, double v, double x, double y) {
  const double den = 2.0 * u * v - y;
  if (den == 0.0) {
    throw SingularJacobian("dt/dv is singular: 2uv - y = 0");
  }
  return {(v * v - u * u + x) / den, 1.0};
}

double stokes_saddle_u(double x) {
  if (x > 0.0) throw DomainError("Stokes path requires x <= 0");
  return std::sqrt(-0.5 * x);
}

StokesPoint stokes_path(double u, double x) {
  if (u < 0.0) throw DomainError("stokes_path requires u >= 0");
  const double u0 = stokes_saddle_u(x);
  if (u <= u0) {
    return {kSqrt3 * u, StokesPiece::line};
  }
  // Positive root of v^2 + sqrt(3) u v + 3x = 0.
  const double s = std::sqrt(3.0 * u * u - 12.0 * x);
  return {-6.0 * x / (kSqrt3 * u + s), StokesPiece::hyperbola};
}

Complex stokes_jacobian(double u, double x) {
  const double u0 = stokes_saddle_u(x);
  if (u < u0) {
    return {1.0, kSqrt3};
  }
  const double s = std::sqrt(3.0 * u * u - 12.0 * x);
  const double d = kSqrt3 * u + s;
  return {1.0, 6.0 * x * (kSqrt3 + 3.0 * u / s) / (d * d)};
}

double gi_path_v_of_u(double u, double x, double y) {
  if (u < 0.0 || (u == 0.0 && y == 0.0)) {
    throw DomainError("gi_path_v_of_u requires u > 0 (or u = 0 with y > 0)");
  }
  const double s = std::sqrt(clamped_radicand(u, x, y));
  // (-y + S)/(2u) rewritten without cancellation.
  return 2.0 * u * (x + u * u / 3.0) / (y + s);
}

Complex gi_jacobian_u(double u, double v, double x, double y) {
  const double den = 2.0 * u * v + y;
  if (den == 0.0) {
    throw SingularJacobian("g(u) is singular: 2uv + y = 0");
  }
  return {1.0, (u * u - v * v + x) / den};
}

}  // namespace scorer::contour
