#pragma once

#include "scorer/types.hpp"

namespace scorer::airy {

struct AiryPair {
  Complex value{};
  Complex derivative{};
  /// False when a series hit its term cap or an asymptotic expansion could
  /// not reach full double precision before its terms started growing.
  bool converged = true;
};

/// Index j of the rotated solutions Ai_j(z) = Ai(e^{-2 pi i j/3} z).
enum class RotationIndex : int { minus = -1, zero = 0, plus = 1 };

/// Radii that split the complex plane between the evaluation methods for Ai.
/// Inside `series_radius` the Maclaurin series is used; beyond
/// `asymptotic_radius` the Poincare expansion (after rotation when
/// |ph z| > 2pi/3). In between, values are carried along the ray through z by
/// Taylor steps of the Airy equation, inward from the asymptotic circle when
/// Ai is recessive (|ph z| <= pi/3) and outward from the series circle
/// otherwise, so that the transported solution never decays relative to the
/// companion solution.
struct AiryConfig {
  double series_radius = 2.0;
  double asymptotic_radius = 9.0;
  int max_terms = 200;
};

/// Ai(0) = 3^{-2/3}/Gamma(2/3)
double ai_at_zero();
/// Ai'(0) = -3^{-1/3}/Gamma(1/3)
double ai_prime_at_zero();

/// Power series for Ai and Ai' about the origin.
AiryPair ai_maclaurin(Complex z, int max_terms = 200);

/// Power series for Bi and Bi' about the origin.
AiryPair bi_maclaurin(Complex z, int max_terms = 200);

/// Poincare expansion in zeta = (2/3) z^{3/2}, truncated at the smallest term.
/// Requires |ph z| <= 2pi/3; throws DomainError otherwise.
AiryPair ai_asymptotic(Complex z, int max_terms = 60);

/// Solves w'' = z w from (start, w(start), w'(start)) to `target` by
/// successive Taylor steps along the straight segment.
AiryPair ai_taylor_transport(Complex start, const AiryPair& initial,
                             Complex target);

/// Ai(z) and Ai'(z) for any finite complex z.
AiryPair ai(Complex z, const AiryConfig& cfg = {});

/// Ai_j(z) = Ai(e^{-2 pi i j/3} z).
Complex airy_rotated(Complex z, RotationIndex j, const AiryConfig& cfg = {});

/// Bi(z) and Bi'(z); Maclaurin series near the origin, otherwise
/// Bi = e^{pi i/6} Ai_{-1} + e^{-pi i/6} Ai_1.
AiryPair bi(Complex z, const AiryConfig& cfg = {});

/// Multiplies z by e^{i*angle} through its polar form so that the phase of
/// the result is exact up to one rounding.
Complex rotate(Complex z, double angle);

}  // namespace scorer::airy
