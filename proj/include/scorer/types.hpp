#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace scorer {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

// Gamma(1/3) and Gamma(2/3) to 20 significant digits.
inline constexpr double kGammaOneThird = 2.6789385347077476337;
inline constexpr double kGammaTwoThirds = 1.3541179394264004169;

/// Argument outside the domain of a formula (violated precondition).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A path Jacobian whose denominator vanishes at the requested point.
class SingularJacobian : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The integrand returned NaN or Inf at a rule node.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  explicit NonFiniteIntegrand(double abscissa)
      : std::runtime_error("non-finite integrand at t = " +
                           std::to_string(abscissa)),
        abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// e^{i*angle}
inline Complex unit_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace scorer
