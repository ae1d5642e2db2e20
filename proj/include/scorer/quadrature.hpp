#pragma once

#include <cstddef>
#include <functional>

#include "scorer/types.hpp"

namespace scorer::quad {

using Integrand = std::function<Complex(double)>;

enum class SemiInfiniteStrategy {
  /// t = a + L s/(1-s), then adaptive integration over s in (0,1).
  rational_map,
  /// Panels [a, a+L], [a+L, a+3L], ... until a panel drops below
  /// tail_cut_ratio of the running sum.
  panel_doubling,
};

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  std::size_t max_subdivisions = 200;
  double tail_cut_ratio = 1e-18;
  SemiInfiniteStrategy semi_infinite = SemiInfiniteStrategy::rational_map;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct QuadratureResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  std::size_t n_evaluations = 0;
  bool converged = false;
};

struct PanelEstimate {
  Complex value{};
  double err = 0.0;
  std::size_t n = 0;
};

/// Order of the embedded Gauss-Kronrod pair used on every panel.
inline constexpr std::size_t kPanelNodes = 15;

/// 15-point Kronrod estimate on (a, b) with the embedded 7-point Gauss rule
/// providing the error. Nodes are strictly interior to (a, b).
PanelEstimate panel_rule(const Integrand& f, double a, double b);

/// Adaptive bisection of the panel with the largest error until the global
/// error drops below max(abs_tol, rel_tol*|value|). Running out of
/// subdivisions is reported through `converged`, not by throwing.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg = {});

/// Integral over [a, inf) for integrands with super-algebraic decay. `scale`
/// is the length L over which f is expected to change appreciably.
QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureConfig& cfg = {},
                                         double scale = 1.0);

}  // namespace scorer::quad
