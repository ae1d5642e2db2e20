#include <cmath>
#include <stdexcept>

#include "scorer/scorer.hpp"

namespace scorer {

std::string_view to_string(SectorLabel label) {
  switch (label) {
    case SectorLabel::S0: return "S0";
    case SectorLabel::S1_lower: return "S1_lower";
    case SectorLabel::S1_upper: return "S1_upper";
    case SectorLabel::Sm1_lower: return "Sm1_lower";
    case SectorLabel::Sm1_upper: return "Sm1_upper";
    case SectorLabel::stokes_pos: return "stokes_pos";
    case SectorLabel::stokes_neg: return "stokes_neg";
    case SectorLabel::neg_real_axis: return "neg_real_axis";
    case SectorLabel::origin: return "origin";
  }
  return "unknown";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::series: return "series";
    case Method::quad_3_6: return "quad_3_6";
    case Method::quad_3_10: return "quad_3_10";
    case Method::quad_3_12: return "quad_3_12";
    case Method::quad_3_17: return "quad_3_17";
    case Method::quad_3_18: return "quad_3_18";
    case Method::conn_2_7: return "conn_2_7";
    case Method::conn_2_8: return "conn_2_8";
    case Method::identity_1_6: return "identity_1_6";
    case Method::conj_2_9: return "conj_2_9";
    case Method::asymptotic: return "asymptotic";
  }
  return "unknown";
}

SectorLabel classify_sector(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("classify_sector requires a finite argument");
  }
  if (z == Complex{}) {
    return SectorLabel::origin;
  }
  const double theta = std::arg(z);
  const double a = std::abs(theta);
  const bool upper = theta >= 0.0;
  if (std::abs(a - kPi) < kSectorPhaseTol) {
    return SectorLabel::neg_real_axis;
  }
  if (std::abs(a - 2.0 * kPi / 3.0) < kSectorPhaseTol) {
    return upper ? SectorLabel::stokes_pos : SectorLabel::stokes_neg;
  }
  if (a < kPi / 3.0 - kSectorPhaseTol) {
    return SectorLabel::S0;
  }
  if (a < 2.0 * kPi / 3.0) {
    return upper ? SectorLabel::S1_lower : SectorLabel::Sm1_lower;
  }
  return upper ? SectorLabel::S1_upper : SectorLabel::Sm1_upper;
}

void EngineConfig::validate() const {
  quad.validate();
  if (!(series_radius > 0.0)) {
    throw std::invalid_argument("series_radius must be positive");
  }
  if (!(series_radius < asymptotic_radius)) {
    throw std::invalid_argument("series_radius must be below asymptotic_radius");
  }
  if (asymptotic_max_terms < 1) {
    throw std::invalid_argument("asymptotic_max_terms must be at least 1");
  }
  if (!(target_rel_accuracy > 0.0)) {
    throw std::invalid_argument("target_rel_accuracy must be positive");
  }
}

double gi_at_zero() {
  return 1.0 / (std::pow(3.0, 7.0 / 6.0) * kGammaTwoThirds);
}

double gi_prime_at_zero() {
  return 1.0 / (std::pow(3.0, 5.0 / 6.0) * kGammaOneThird);
}

double hi_at_zero() { return 2.0 * gi_at_zero(); }

double hi_prime_at_zero() { return 2.0 * gi_prime_at_zero(); }

}  // namespace scorer
