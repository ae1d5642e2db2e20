#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "scorer/airy.hpp"
#include "scorer/quadrature.hpp"
#include "scorer/types.hpp"

namespace scorer {

enum class SectorLabel {
  S0,            // |ph z| < pi/3
  S1_lower,      // pi/3 <= ph z < 2pi/3
  S1_upper,      // 2pi/3 < ph z < pi
  Sm1_lower,     // conjugate of S1_lower
  Sm1_upper,     // conjugate of S1_upper
  stokes_pos,    // ph z = 2pi/3
  stokes_neg,    // ph z = -2pi/3
  neg_real_axis, // ph z = pi
  origin,
};

std::string_view to_string(SectorLabel label);

/// Phase tolerance used to assign the boundary rays of the sectors.
inline constexpr double kSectorPhaseTol = 1e-12;

/// Deterministic sector label; throws DomainError for non-finite z.
SectorLabel classify_sector(Complex z);

/// Which representation produced a value.
enum class Method {
  series,
  quad_3_6,      // u-parametrised steepest-descent integral for Hi
  quad_3_10,     // v-parametrised two-branch integral for Hi
  quad_3_12,     // path L integral plus Airy term for Hi
  quad_3_17,     // Gi integral plus i Ai(z)
  quad_3_18,     // real representation of Gi(x), x >= 0
  conn_2_7,      // Hi connection formula
  conn_2_8,      // Gi from two rotated Hi values
  identity_1_6,  // Gi + Hi = Bi
  conj_2_9,      // conjugate symmetry
  asymptotic,
};

std::string_view to_string(Method method);

struct ScorerResult {
  Complex value{};
  Method method = Method::series;
  double abs_error_estimate = 0.0;
  std::size_t n_evaluations = 0;
  bool converged = true;
  /// Composition of methods, outermost first, e.g. "conj_2_9>quad_3_6".
  std::string trace;
};

enum class ScorerKind { gi, hi };

/// Test hook: deliberately corrupts one formula so that the self-test can
/// demonstrate that its checks catch the damage.
enum class Fault { none, hi_jacobian_sign };

struct EngineConfig {
  quad::QuadratureConfig quad;
  airy::AiryConfig airy;
  double series_radius = 2.5;
  double asymptotic_radius = 15.0;
  int asymptotic_max_terms = 10;
  double target_rel_accuracy = 1e-10;
  /// Gi with 0 < ph z < this band (and Re z > 0) goes through the rotated-Hi
  /// formula instead of the Gi integral.
  double gi_real_axis_band = 0.05;
  Fault fault = Fault::none;

  void validate() const;
};

// Closed-form values at the origin.
double gi_at_zero();
double gi_prime_at_zero();
double hi_at_zero();
double hi_prime_at_zero();

// --- Maclaurin series --------------------------------------------------------

/// Value and first two derivatives of a Maclaurin evaluation.
struct SeriesJet {
  Complex value{};
  Complex first{};
  Complex second{};
  std::size_t terms = 0;
  double abs_error_estimate = 0.0;
  bool converged = true;
};

/// Series w = sum a_k z^k with a_0, a_1 from the initial values,
/// a_2 = +-1/(2pi) and a_{k+2} = a_{k-1}/((k+2)(k+1)). No radius check.
SeriesJet scorer_series_jet(ScorerKind kind, Complex z, int max_terms = 400);

/// Throws DomainError when |z| > cfg.series_radius.
ScorerResult hi_series(Complex z, const EngineConfig& cfg = {});
ScorerResult gi_series(Complex z, const EngineConfig& cfg = {});

// --- Asymptotic expansions ---------------------------------------------------

struct AsymptoticSum {
  Complex value{};
  /// Magnitude of the last term included, relative to the bracket.
  double last_term = 0.0;
  int terms_used = 0;
  /// Terms grew from the first one on: |z| is too small.
  bool diverging = false;
};

/// sign/(pi z) [1 + z^{-3} sum_{s<n} (3s+2)!/(s! (3z^3)^s)], truncated at
/// n_terms or before the first term that is larger than its predecessor.
AsymptoticSum scorer_asymptotic_sum(Complex z, int n_terms, double sign);

/// Hi(z) ~ -1/(pi z)[...], valid for |ph(-z)| <= 2pi/3 - delta.
Complex hi_asymptotic(Complex z, int n_terms);
/// Gi(z) ~ 1/(pi z)[...], valid for |ph z| <= pi/3 - delta.
Complex gi_asymptotic(Complex z, int n_terms);

// --- Integral representations ------------------------------------------------

/// Hi by the steepest-descent integral in u; 2pi/3 <= ph z <= pi, Im z >= 0.
/// The Stokes ray and the negative real axis use their own exact paths.
ScorerResult hi_integral_principal(Complex z, const EngineConfig& cfg = {});

/// Same integral parametrised by v over both branches u-(v), u+(v).
/// Requires 2pi/3 < ph z < pi.
ScorerResult hi_integral_v_form(Complex z, const EngineConfig& cfg = {});

/// Path L plus 2 e^{-pi i/6} Ai(z e^{-2pi i/3}); pi/3 <= ph z <= 2pi/3.
ScorerResult hi_integral_remark(Complex z, const EngineConfig& cfg = {});

enum class ConnectionSign { upper, lower };

/// Hi(z) = e^{+-2pi i/3} Hi(z e^{+-2pi i/3}) + 2 e^{-+pi i/6} Ai(z e^{-+2pi i/3}).
/// The rotated Hi must fall in the quadrature sector (after conjugation).
ScorerResult hi_connection(Complex z, ConnectionSign sign,
                           const EngineConfig& cfg = {});

/// Gi(z) = (1/(pi i)) int_0^inf e^{-psi_i} g(u) du + i Ai(z);
/// 0 <= ph z <= 2pi/3 with Im z > 0.
ScorerResult gi_integral(Complex z, const EngineConfig& cfg = {});

/// Real representation of Gi(x) for x >= 0.
ScorerResult gi_real_positive(double x, const EngineConfig& cfg = {});

/// Gi(z) = -1/2 [e^{2pi i/3} Hi(z e^{2pi i/3}) + e^{-2pi i/3} Hi(z e^{-2pi i/3})]
/// with each Hi from the principal integral.
ScorerResult gi_from_hi_rotations(Complex z, const EngineConfig& cfg = {});

// --- Dispatch ------------------------------------------------------------------

ScorerResult hi(Complex z, const EngineConfig& cfg = {});
ScorerResult gi(Complex z, const EngineConfig& cfg = {});

/// Both functions with a single Bi evaluation shared by the identity step.
std::pair<ScorerResult, ScorerResult> gi_hi_pair(Complex z,
                                                 const EngineConfig& cfg = {});

}  // namespace scorer
