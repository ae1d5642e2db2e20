// Maclaurin and large-|z| expansions of Gi and Hi.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "scorer/scorer.hpp"

namespace scorer {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

SeriesJet scorer_series_jet(ScorerKind kind, Complex z, int max_terms) {
  const double sign = kind == ScorerKind::hi ? 1.0 : -1.0;
  const double scale = kind == ScorerKind::hi ? 2.0 : 1.0;

  // Rolling window a_{k-2}, a_{k-1}, a_k; a_{k+1} = a_{k-2}/((k+1)k).
  std::array<double, 3> a = {scale * gi_at_zero(), scale * gi_prime_at_zero(),
                             sign * 0.5 / kPi};
  SeriesJet jet;
  jet.value = a[0] + a[1] * z + a[2] * z * z;
  jet.first = a[1] + 2.0 * a[2] * z;
  jet.second = 2.0 * a[2];
  double abs_sum = std::abs(a[0]) + std::abs(a[1] * z) + std::abs(a[2] * z * z);

  const double r = std::abs(z);
  const double peak = std::pow(r, 1.5) + 3.0;
  Complex zk = z * z;  // z^k for the newest coefficient
  jet.converged = false;
  int k = 2;
  for (; k < max_terms; ++k) {
    const double next = a[0] / ((k + 1.0) * k);
    a = {a[1], a[2], next};
    const Complex zkm1 = zk;  // z^k
    zk *= z;                  // z^{k+1}
    const Complex term = next * zk;
    const Complex d1 = (k + 1.0) * next * zkm1;
    const Complex d2 = (k + 1.0) * k * next * (zkm1 / (z == Complex{} ? 1.0 : z));
    jet.value += term;
    jet.first += d1;
    if (z != Complex{}) {
      jet.second += d2;
    }
    abs_sum += std::abs(term);
    if (k > peak && std::abs(term) <= 0.25 * kEps * std::abs(jet.value) &&
        std::abs(d1) <= 0.25 * kEps * std::abs(jet.first) &&
        std::abs(d2) <= 0.25 * kEps * std::abs(jet.second)) {
      jet.converged = true;
      break;
    }
    if (z == Complex{}) {
      jet.converged = true;
      break;
    }
  }
  jet.terms = static_cast<std::size_t>(k + 1);
  jet.abs_error_estimate = 4.0 * kEps * abs_sum;
  return jet;
}

namespace {

ScorerResult series_result(ScorerKind kind, Complex z, const EngineConfig& cfg) {
  if (std::abs(z) > cfg.series_radius) {
    throw DomainError("Maclaurin series requires |z| <= series_radius");
  }
  const SeriesJet jet = scorer_series_jet(kind, z);
  ScorerResult out;
  out.value = jet.value;
  out.method = Method::series;
  out.abs_error_estimate = jet.abs_error_estimate;
  out.n_evaluations = jet.terms;
  out.converged = jet.converged;
  out.trace = "series";
  return out;
}

}  // namespace

ScorerResult hi_series(Complex z, const EngineConfig& cfg) {
  return series_result(ScorerKind::hi, z, cfg);
}

ScorerResult gi_series(Complex z, const EngineConfig& cfg) {
  return series_result(ScorerKind::gi, z, cfg);
}

AsymptoticSum scorer_asymptotic_sum(Complex z, int n_terms, double sign) {
  if (z == Complex{}) {
    throw DomainError("asymptotic expansion requires z != 0");
  }
  const Complex z3 = z * z * z;
  // T_0 = 2/z^3, T_{s+1} = T_s (3s+5)(3s+4)/z^3 (the z^{-3} prefactor is
  // folded into the terms).
  Complex term = 2.0 / z3;
  Complex bracket = 1.0;
  AsymptoticSum out;
  double previous = std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_terms; ++s) {
    const double size = std::abs(term);
    if (size > previous) {
      out.diverging = s == 1;
      break;
    }
    bracket += term;
    previous = size;
    out.last_term = size;
    out.terms_used = s + 1;
    term *= (3.0 * s + 5.0) * (3.0 * s + 4.0) / z3;
  }
  out.value = sign / (kPi * z) * bracket;
  out.last_term /= std::max(std::abs(bracket), 1e-300);
  return out;
}

Complex hi_asymptotic(Complex z, int n_terms) {
  return scorer_asymptotic_sum(z, n_terms, -1.0).value;
}

Complex gi_asymptotic(Complex z, int n_terms) {
  return scorer_asymptotic_sum(z, n_terms, 1.0).value;
}

}  // namespace scorer
