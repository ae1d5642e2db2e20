// Sector dispatch for Gi and Hi.

#include <cmath>
#include <limits>
#include <optional>

#include "scorer/scorer.hpp"

namespace scorer {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kAiryRelErr = 256.0 * kEps;

// Values shared between the two functions at one point in the upper half.
struct Workspace {
  Complex z{};
  SectorLabel label = SectorLabel::origin;
  std::optional<Complex> bi;
  std::optional<ScorerResult> gi;
  std::optional<ScorerResult> hi;
};

ScorerResult hi_upper(Workspace& ws, const EngineConfig& cfg);
ScorerResult gi_upper(Workspace& ws, const EngineConfig& cfg);

Workspace make_workspace(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("Scorer functions require a finite argument");
  }
  Workspace ws;
  ws.z = {z.real(), std::abs(z.imag())};
  ws.label = classify_sector(ws.z);
  const double r = std::abs(ws.z);
  if (ws.label == SectorLabel::neg_real_axis) {
    ws.z = {-r, 0.0};
  } else if (ws.label == SectorLabel::stokes_pos) {
    ws.z = {-0.5 * r, 0.5 * kSqrt3 * r};
  }
  return ws;
}

Complex shared_bi(Workspace& ws, const EngineConfig& cfg) {
  if (!ws.bi) {
    ws.bi = airy::bi(ws.z, cfg.airy).value;
  }
  return *ws.bi;
}

ScorerResult via_identity(Workspace& ws, const ScorerResult& other,
                          const EngineConfig& cfg) {
  const Complex b = shared_bi(ws, cfg);
  ScorerResult out;
  out.value = b - other.value;
  out.method = Method::identity_1_6;
  out.abs_error_estimate = other.abs_error_estimate + kAiryRelErr * std::abs(b) +
                           2.0 * kEps * std::abs(out.value);
  out.n_evaluations = other.n_evaluations + 1;
  out.converged = other.converged;
  out.trace = "identity_1_6>" + other.trace;
  return out;
}

// Asymptotic value when both the truncation error and the neglected
// exponentially small term are below the target; `exp_weight` is the
// magnitude of that term relative to the leading 1/(pi z).
std::optional<ScorerResult> try_asymptotic(Complex z, double sign, double exp_weight,
                                           const EngineConfig& cfg) {
  const AsymptoticSum s = scorer_asymptotic_sum(z, cfg.asymptotic_max_terms, sign);
  if (s.diverging || s.last_term > cfg.target_rel_accuracy ||
      exp_weight > cfg.target_rel_accuracy) {
    return std::nullopt;
  }
  ScorerResult out;
  out.value = s.value;
  out.method = Method::asymptotic;
  out.abs_error_estimate = (s.last_term + exp_weight + 2.0 * kEps) * std::abs(s.value);
  out.n_evaluations = static_cast<std::size_t>(s.terms_used);
  out.trace = "asymptotic";
  return out;
}

bool series_region(const Workspace& ws, const EngineConfig& cfg) {
  return std::abs(ws.z) <= cfg.series_radius;
}

bool asymptotic_region(const Workspace& ws, const EngineConfig& cfg) {
  return std::abs(ws.z) >= cfg.asymptotic_radius;
}

ScorerResult compute_hi(Workspace& ws, const EngineConfig& cfg) {
  const Complex z = ws.z;
  if (series_region(ws, cfg)) {
    return hi_series(z, cfg);
  }
  const double theta = std::arg(z);
  const double r = std::abs(z);
  if (asymptotic_region(ws, cfg) && ws.label != SectorLabel::S0) {
    double weight = 0.0;
    if (ws.label == SectorLabel::S1_lower) {
      // 2 e^{-pi i/6} Ai(z e^{-2pi i/3}) relative to 1/(pi z).
      const double re_zeta = 2.0 / 3.0 * r * std::sqrt(r) *
                             std::cos(1.5 * (theta - 2.0 * kPi / 3.0));
      weight = std::sqrt(kPi) * std::pow(r, 0.75) * std::exp(-re_zeta);
    }
    if (auto a = try_asymptotic(z, -1.0, weight, cfg)) {
      return *a;
    }
  }
  switch (ws.label) {
    case SectorLabel::S1_upper:
    case SectorLabel::stokes_pos:
    case SectorLabel::neg_real_axis:
      return hi_integral_principal(z, cfg);
    case SectorLabel::S1_lower:
      return hi_connection(z, ConnectionSign::upper, cfg);
    default:
      return via_identity(ws, gi_upper(ws, cfg), cfg);
  }
}

ScorerResult compute_gi(Workspace& ws, const EngineConfig& cfg) {
  const Complex z = ws.z;
  if (series_region(ws, cfg)) {
    return gi_series(z, cfg);
  }
  const double theta = std::arg(z);
  const double r = std::abs(z);
  if (asymptotic_region(ws, cfg) && ws.label == SectorLabel::S0) {
    // i Ai(z) relative to 1/(pi z).
    const double re_zeta = 2.0 / 3.0 * r * std::sqrt(r) * std::cos(1.5 * theta);
    const double weight = 0.5 * std::sqrt(kPi) * std::pow(r, 0.75) * std::exp(-re_zeta);
    if (auto a = try_asymptotic(z, 1.0, weight, cfg)) {
      return *a;
    }
  }
  switch (ws.label) {
    case SectorLabel::S0:
      if (z.imag() == 0.0) {
        return gi_real_positive(z.real(), cfg);
      }
      if (theta < cfg.gi_real_axis_band) {
        return gi_from_hi_rotations(z, cfg);
      }
      return gi_integral(z, cfg);
    case SectorLabel::S1_lower:
      return gi_integral(z, cfg);
    default:
      return via_identity(ws, hi_upper(ws, cfg), cfg);
  }
}

ScorerResult hi_upper(Workspace& ws, const EngineConfig& cfg) {
  if (!ws.hi) {
    ws.hi = compute_hi(ws, cfg);
  }
  return *ws.hi;
}

ScorerResult gi_upper(Workspace& ws, const EngineConfig& cfg) {
  if (!ws.gi) {
    ws.gi = compute_gi(ws, cfg);
  }
  return *ws.gi;
}

ScorerResult restore_half(ScorerResult r, bool lower) {
  if (!lower) {
    return r;
  }
  r.value = std::conj(r.value);
  r.method = Method::conj_2_9;
  r.trace = "conj_2_9>" + r.trace;
  return r;
}

}  // namespace

ScorerResult hi(Complex z, const EngineConfig& cfg) {
  cfg.validate();
  Workspace ws = make_workspace(z);
  return restore_half(hi_upper(ws, cfg), z.imag() < 0.0);
}

ScorerResult gi(Complex z, const EngineConfig& cfg) {
  cfg.validate();
  Workspace ws = make_workspace(z);
  return restore_half(gi_upper(ws, cfg), z.imag() < 0.0);
}

std::pair<ScorerResult, ScorerResult> gi_hi_pair(Complex z, const EngineConfig& cfg) {
  cfg.validate();
  Workspace ws = make_workspace(z);
  const bool lower = z.imag() < 0.0;
  ScorerResult g = gi_upper(ws, cfg);
  ScorerResult h = hi_upper(ws, cfg);
  return {restore_half(std::move(g), lower), restore_half(std::move(h), lower)};
}

}  // namespace scorer
