#include "scorer/airy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scorer::airy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPiThirds = 2.0 * kPi / 3.0;

// Maclaurin parts f, g of the two standard solutions (f(0)=1, f'(0)=0,
// g(0)=0, g'(0)=1) together with their derivatives.
struct SeriesParts {
  Complex f{}, fp{}, g{}, gp{};
  bool converged = true;
};

SeriesParts maclaurin_parts(Complex z, int max_terms) {
  SeriesParts s;
  const Complex z2 = z * z;
  const Complex z3 = z2 * z;
  // Terms grow until k ~ |z|^{3/2}/3.
  const double peak = std::pow(std::abs(z), 1.5) / 3.0 + 1.0;

  // f_k = a_k z^{3k}, g_k = b_k z^{3k+1}; a_{k+1} = a_k/((3k+3)(3k+2)),
  // b_{k+1} = b_k/((3k+4)(3k+3)). Derivative terms follow from the value
  // terms of the previous index.
  Complex fk = 1.0;
  Complex gk = z;
  s.f = fk;
  s.g = gk;
  s.gp = 1.0;
  s.converged = false;
  for (int k = 0; k < max_terms; ++k) {
    const double k3 = 3.0 * k;
    const Complex dfk = fk * z2 / (k3 + 2.0);
    const Complex dgk = gk * z2 / (k3 + 3.0);
    fk *= z3 / ((k3 + 3.0) * (k3 + 2.0));
    gk *= z3 / ((k3 + 4.0) * (k3 + 3.0));
    s.f += fk;
    s.g += gk;
    s.fp += dfk;
    s.gp += dgk;
    const double scale = std::abs(s.f) + std::abs(s.g);
    const double dscale = std::abs(s.fp) + std::abs(s.gp);
    if (k + 1 > peak && std::abs(fk) + std::abs(gk) <= 0.25 * kEps * scale &&
        std::abs(dfk) + std::abs(dgk) <= 0.25 * kEps * dscale) {
      s.converged = true;
      break;
    }
  }
  return s;
}

// z^{1/4} and zeta = (2/3) z^{3/2} on the principal branch.
struct AsymptoticVariables {
  Complex quarter;
  Complex zeta;
};

AsymptoticVariables asymptotic_variables(Complex z) {
  const Complex root = std::sqrt(z);
  return {std::sqrt(root), 2.0 / 3.0 * z * root};
}

double normalize_phase(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

// Ai for Im z >= 0.
AiryPair ai_upper(Complex z, const AiryConfig& cfg) {
  const double r = std::abs(z);
  const double theta = std::arg(z);
  if (r <= cfg.series_radius) {
    return ai_maclaurin(z, cfg.max_terms);
  }
  if (r >= cfg.asymptotic_radius) {
    if (theta <= kTwoPiThirds) {
      return ai_asymptotic(z, cfg.max_terms);
    }
    // Ai(z) = -e^{-2pi i/3} Ai(e^{-2pi i/3} z) - e^{2pi i/3} Ai(e^{2pi i/3} z)
    const Complex w1 = std::polar(r, theta - kTwoPiThirds);
    const Complex w2 = std::polar(r, normalize_phase(theta + kTwoPiThirds));
    const AiryPair a1 = ai_asymptotic(w1, cfg.max_terms);
    const AiryPair a2 = ai_asymptotic(w2, cfg.max_terms);
    const Complex e1 = unit_phase(-kTwoPiThirds);
    const Complex e2 = unit_phase(kTwoPiThirds);
    AiryPair out;
    out.value = -e1 * a1.value - e2 * a2.value;
    out.derivative = -e1 * e1 * a1.derivative - e2 * e2 * a2.derivative;
    out.converged = a1.converged && a2.converged;
    return out;
  }
  if (theta <= kPi / 3.0) {
    const Complex start = std::polar(cfg.asymptotic_radius, theta);
    return ai_taylor_transport(start, ai_asymptotic(start, cfg.max_terms), z);
  }
  const Complex start = std::polar(cfg.series_radius, theta);
  return ai_taylor_transport(start, ai_maclaurin(start, cfg.max_terms), z);
}

AiryPair conj(const AiryPair& p) {
  return {std::conj(p.value), std::conj(p.derivative), p.converged};
}

}  // namespace

double ai_at_zero() { return 1.0 / (std::cbrt(9.0) * kGammaTwoThirds); }

double ai_prime_at_zero() { return -1.0 / (std::cbrt(3.0) * kGammaOneThird); }

AiryPair ai_maclaurin(Complex z, int max_terms) {
  const SeriesParts s = maclaurin_parts(z, max_terms);
  const double c1 = ai_at_zero();
  const double c2 = -ai_prime_at_zero();
  return {c1 * s.f - c2 * s.g, c1 * s.fp - c2 * s.gp, s.converged};
}

AiryPair bi_maclaurin(Complex z, int max_terms) {
  const SeriesParts s = maclaurin_parts(z, max_terms);
  const double c1 = kSqrt3 * ai_at_zero();
  const double c2 = -kSqrt3 * ai_prime_at_zero();
  return {c1 * s.f + c2 * s.g, c1 * s.fp + c2 * s.gp, s.converged};
}

AiryPair ai_asymptotic(Complex z, int max_terms) {
  if (z == Complex{} || std::abs(std::arg(z)) > kTwoPiThirds + 1e-12) {
    throw DomainError("ai_asymptotic requires z != 0 and |ph z| <= 2pi/3");
  }
  const auto [quarter, zeta] = asymptotic_variables(z);
  const Complex inv_zeta = 1.0 / zeta;

  Complex sum_u = 1.0;
  Complex sum_v = 1.0;
  double u = 1.0;
  Complex power = 1.0;  // (-1/zeta)^k
  double last = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int k = 1; k < max_terms; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
         ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    power *= -inv_zeta;
    const Complex tu = u * power;
    const Complex tv = v * power;
    const double size = std::max(std::abs(tu), std::abs(tv));
    if (size > last) {
      break;  // smallest term passed
    }
    sum_u += tu;
    sum_v += tv;
    last = size;
    if (size <= 0.5 * kEps * std::min(std::abs(sum_u), std::abs(sum_v))) {
      converged = true;
      break;
    }
  }
  if (!converged && last <= 1e-15) {
    converged = true;
  }
  const Complex ez = std::exp(-zeta);
  const double norm = 0.5 / std::sqrt(kPi);
  AiryPair out;
  out.value = norm * ez / quarter * sum_u;
  out.derivative = -norm * quarter * ez * sum_v;
  out.converged = converged;
  return out;
}

AiryPair ai_taylor_transport(Complex start, const AiryPair& initial,
                             Complex target) {
  const Complex span = target - start;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(span) / 0.4)));
  const Complex h = span / static_cast<double>(steps);

  Complex w = initial.value;
  Complex wp = initial.derivative;
  Complex z0 = start;
  for (int s = 0; s < steps; ++s) {
    // c_{n+2} = (z0 c_n + c_{n-1}) / ((n+2)(n+1)), scaled by h^n.
    Complex cm1 = w;           // c_0 h^0
    Complex c0 = wp * h;       // c_1 h^1
    Complex c1 = z0 * w * h * h / 2.0;  // c_2 h^2
    Complex value = cm1 + c0 + c1;
    Complex deriv = wp + 2.0 * c1 / h;
    Complex prev2 = cm1, prev1 = c0, cur = c1;
    for (int n = 1; n < 80; ++n) {
      // cur = c_{n+1} h^{n+1}, prev1 = c_n h^n, prev2 = c_{n-1} h^{n-1}
      const Complex next =
          (z0 * prev1 * h * h + prev2 * h * h * h) / ((n + 2.0) * (n + 1.0));
      value += next;
      deriv += (n + 2.0) * next / h;
      const double tail = std::abs(next) + std::abs(cur);
      prev2 = prev1;
      prev1 = cur;
      cur = next;
      if (n > 3 && tail <= 0.25 * kEps * std::abs(value) &&
          std::abs(next) * (n + 2.0) <= 0.25 * kEps * std::abs(deriv * h)) {
        break;
      }
    }
    w = value;
    wp = deriv;
    z0 += h;
  }
  return {w, wp, initial.converged};
}

AiryPair ai(Complex z, const AiryConfig& cfg) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("Airy function argument must be finite");
  }
  if (z.imag() < 0.0) {
    return conj(ai_upper(std::conj(z), cfg));
  }
  AiryPair out = ai_upper(z, cfg);
  if (z.imag() == 0.0) {
    out.value.imag(0.0);
    out.derivative.imag(0.0);
  }
  return out;
}

Complex rotate(Complex z, double angle) {
  if (z == Complex{}) {
    return z;
  }
  return std::polar(std::abs(z), normalize_phase(std::arg(z) + angle));
}

Complex airy_rotated(Complex z, RotationIndex j, const AiryConfig& cfg) {
  const int idx = static_cast<int>(j);
  if (idx == 0) {
    return ai(z, cfg).value;
  }
  return ai(rotate(z, -idx * kTwoPiThirds), cfg).value;
}

AiryPair bi(Complex z, const AiryConfig& cfg) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("Airy function argument must be finite");
  }
  if (std::abs(z) <= cfg.series_radius) {
    return bi_maclaurin(z, cfg.max_terms);
  }
  const bool lower = z.imag() < 0.0;
  const Complex zu = lower ? std::conj(z) : z;
  // Bi = e^{pi i/6} Ai(e^{2pi i/3} z) + e^{-pi i/6} Ai(e^{-2pi i/3} z)
  const AiryPair am = ai(rotate(zu, kTwoPiThirds), cfg);
  const AiryPair ap = ai(rotate(zu, -kTwoPiThirds), cfg);
  const Complex em = unit_phase(kPi / 6.0);
  const Complex ep = unit_phase(-kPi / 6.0);
  AiryPair out;
  out.value = em * am.value + ep * ap.value;
  out.derivative = em * unit_phase(kTwoPiThirds) * am.derivative +
                   ep * unit_phase(-kTwoPiThirds) * ap.derivative;
  out.converged = am.converged && ap.converged;
  if (zu.imag() == 0.0) {
    // The two terms are complex conjugates on the real axis.
    out.value = 2.0 * (em * am.value).real();
    out.derivative = 2.0 * (em * unit_phase(kTwoPiThirds) * am.derivative).real();
  }
  return lower ? conj(out) : out;
}

}  // namespace scorer::airy
