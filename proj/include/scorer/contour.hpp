#pragma once

// Steepest-descent geometry for the Scorer integrals. The complex variable of
// integration is t = u + i v and the argument is z = x + i y.
//
// Hi uses the phase phi(t) = t^3/3 - z t; its contour starts at the origin and
// keeps Im phi = 0. Gi uses psi(t) = z t + t^3/3 and keeps Re psi = 0.

#include "scorer/types.hpp"

namespace scorer::contour {

/// Phase tolerance for treating ph z = 2pi/3 as the Stokes line.
inline constexpr double kStokesPhaseTol = 1e-12;

struct PhaseParts {
  double real_part = 0.0;
  double imag_part = 0.0;
};

enum class HiPathKind { real_axis, interior_sector, stokes };

struct HiPathSpec {
  double x = 0.0;
  double y = 0.0;
  HiPathKind kind = HiPathKind::real_axis;
  double v1 = 0.0;
  double u1 = 0.0;
  /// Saddle t0 = sqrt(-x/2) + i sqrt(-3x/2); only set for kind == stokes.
  Complex saddle{};
};

/// Classifies the Hi contour for z = x + iy with y >= 0 and
/// 2pi/3 <= ph z <= pi. Throws DomainError outside that sector.
HiPathSpec hi_path_spec(double x, double y);

PhaseParts phi_parts(double u, double v, double x, double y);
PhaseParts psi_parts(double u, double v, double x, double y);

/// Root of u^2 v - v^3/3 - x v - y u = 0 through the origin,
/// v = 2 sqrt(Q) sin(theta/3) with sin(theta) = P/Q^{3/2}, P = 3yu/2,
/// Q = u^2 - x. Requires u >= 0, x < 0, 3x^2 > y^2, y >= 0.
double hi_path_v_of_u(double u, double x, double y);

/// dt/du = 1 + i (2uv - y)/(v^2 - u^2 + x) along the Hi contour.
Complex hi_jacobian_u(double u, double v, double x, double y);

enum class Branch { minus, plus };

/// u = (y -+ R)/(2v), R = sqrt(y^2 + 4v^2 (x + v^2/3)) >= 0.
double hi_path_u_of_v(double v, double x, double y, Branch branch);

/// R(v) of hi_path_u_of_v; throws DomainError when the radicand is negative.
double hi_path_radical(double v, double x, double y);

struct BranchPoint {
  double v1 = 0.0;
  double u1 = 0.0;
};

/// Smallest positive v with R(v) = 0, and u1 = y/(2 v1).
BranchPoint v1_branch_point(double x, double y);

/// dt/dv = (v^2 - u^2 + x)/(2uv - y) + i.
Complex hi_jacobian_v(double u, double v, double x, double y);

enum class StokesPiece { line, hyperbola };

struct StokesPoint {
  double v = 0.0;
  StokesPiece piece = StokesPiece::line;
};

/// Contour for ph z = 2pi/3: the line v = sqrt(3) u up to the saddle abscissa
/// u0 = sqrt(-x/2), then the branch of v^2 + sqrt(3) u v + 3x = 0 with v > 0.
StokesPoint stokes_path(double u, double x);

/// dt/du along stokes_path; one-sided (hyperbola) derivative at u0.
Complex stokes_jacobian(double u, double x);

/// Abscissa u0 = sqrt(-x/2) of the saddle on the Stokes line.
double stokes_saddle_u(double x);

/// Gi contour psi_r(u, v) = 0:
/// v = (-y + sqrt(y^2 + 4u^2(x + u^2/3)))/(2u).
double gi_path_v_of_u(double u, double x, double y);

/// g(u) = 1 + i (u^2 - v^2 + x)/(2uv + y).
Complex gi_jacobian_u(double u, double v, double x, double y);

}  // namespace scorer::contour
