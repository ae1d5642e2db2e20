#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "scorer/scorer.hpp"

using scorer::Complex;
using scorer::kPi;
using scorer::unit_phase;
using namespace scorer;

namespace {

Complex polar(double r, double ph) { return r * unit_phase(ph); }

std::vector<Complex> grid(const std::vector<double>& radii, double ph_lo, double ph_hi, int n) {
  std::vector<Complex> out;
  for (double r : radii) {
    for (int k = 0; k <= n; ++k) out.push_back(polar(r, ph_lo + (ph_hi - ph_lo) * k / n));
  }
  return out;
}

double rel(Complex a, Complex b) { return oracle::rel_diff(a, b); }

}  // namespace

TEST(Sector, Examples) {
  EXPECT_EQ(classify_sector(-3.0), SectorLabel::neg_real_axis);
  EXPECT_EQ(classify_sector(unit_phase(2.0 * kPi / 3.0)), SectorLabel::stokes_pos);
  EXPECT_EQ(classify_sector(unit_phase(-2.0 * kPi / 3.0)), SectorLabel::stokes_neg);
  EXPECT_EQ(classify_sector(Complex{1.0, 1.0}), SectorLabel::S0);
  EXPECT_EQ(classify_sector(0.0), SectorLabel::origin);
  EXPECT_EQ(classify_sector(unit_phase(kPi / 3.0)), SectorLabel::S1_lower);
  EXPECT_EQ(classify_sector(unit_phase(-kPi / 3.0)), SectorLabel::Sm1_lower);
  EXPECT_EQ(classify_sector(unit_phase(0.9 * kPi)), SectorLabel::S1_upper);
  EXPECT_EQ(classify_sector(unit_phase(-0.9 * kPi)), SectorLabel::Sm1_upper);
  EXPECT_THROW(classify_sector(Complex{NAN, 0.0}), DomainError);
}

TEST(Config, Validation) {
  EngineConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.series_radius = 20.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_THROW(hi(1.0, cfg), std::invalid_argument);
}

TEST(InitialValues, ClosedForms) {
  EXPECT_LT(std::abs(gi_at_zero() - oracle::gi_at_zero()) / oracle::gi_at_zero(), 1e-13);
  EXPECT_LT(std::abs(hi_at_zero() - oracle::hi_at_zero()) / oracle::hi_at_zero(), 1e-13);
  EXPECT_NEAR(gi(0.0).value.real(), 0.2049755424, 1e-10);
  EXPECT_NEAR(hi(0.0).value.real(), 0.4099510849, 1e-10);
  const double bi0 = airy::bi(0.0).value.real();
  EXPECT_NEAR(hi_at_zero() / gi_at_zero(), 2.0, 2e-13);
  EXPECT_NEAR(bi0 / gi_at_zero(), 3.0, 3e-13);
  // Derivatives are a third and two thirds of Bi'(0).
  const double bip0 = airy::bi(0.0).derivative.real();
  EXPECT_NEAR(3.0 * gi_prime_at_zero() / bip0, 1.0, 1e-13);
  EXPECT_NEAR(1.5 * hi_prime_at_zero() / bip0, 1.0, 1e-13);
}

TEST(Series, Examples) {
  EXPECT_NEAR(hi_series(0.0).value.real(), oracle::hi_at_zero(), 1e-16);
  const SeriesJet jet = scorer_series_jet(ScorerKind::hi, 0.0);
  EXPECT_NEAR(jet.first.real(), hi_prime_at_zero(), 1e-16);
  EXPECT_NEAR(hi_series(-1.0).value.real(), 0.22066961, 5e-9);
  EXPECT_EQ(hi_series(-1.0).method, Method::series);
  EXPECT_THROW(hi_series(3.0), DomainError);
  for (Complex z : grid({0.5, 1.5, 2.49}, -kPi, kPi, 12)) {
    EXPECT_LT(rel(hi_series(z).value, oracle::hi(z)), 1e-13) << z;
    EXPECT_LT(rel(gi_series(z).value, oracle::gi(z)), 1e-13) << z;
  }
}

TEST(Series, OdeResidual) {
  for (Complex z : grid({1.0}, -kPi, kPi, 24)) {
    for (auto [kind, rhs] : {std::pair{ScorerKind::gi, -1.0 / kPi}, std::pair{ScorerKind::hi, 1.0 / kPi}}) {
      const SeriesJet j = scorer_series_jet(kind, z);
      EXPECT_LT(std::abs(j.second - z * j.value - rhs), 1e-10) << z;
    }
  }
}

TEST(Asymptotic, TableBrackets) {
  EXPECT_NEAR(hi_asymptotic(-10.0, 3).real(), 3.1768528e-2, 1e-9);
  EXPECT_NEAR(hi_asymptotic(-100.0, 3).real(), 3.1830925e-3, 1e-10);
  const Complex a = hi_asymptotic(polar(100.0, 5.0 * kPi / 6.0), 3);
  EXPECT_NEAR(a.real(), 2.7566477e-3, 1e-10);
  EXPECT_NEAR(a.imag(), 1.5915439e-3, 1e-10);
  EXPECT_TRUE(scorer_asymptotic_sum(0.5, 10, -1.0).diverging);
  EXPECT_FALSE(scorer_asymptotic_sum(20.0, 10, -1.0).diverging);
  EXPECT_THROW(scorer_asymptotic_sum(0.0, 3, 1.0), DomainError);
}

TEST(Asymptotic, GiSectorTrend) {
  // Quadrature against the expansion at |z| = 10 inside S0: close near the
  // real axis, with the gap growing towards ph z = pi/3 where the neglected
  // i Ai(z) stops being small.
  std::vector<double> gaps;
  for (double ph : {0.0, 0.2, 0.4, 0.6, 0.8, kPi / 3.0 - 0.1}) {
    const Complex z = polar(10.0, ph);
    const Complex q = ph == 0.0 ? gi_real_positive(10.0).value : gi_integral(z).value;
    gaps.push_back(rel(gi_asymptotic(z, 10), q));
  }
  EXPECT_LE(gaps[0], 1e-6);
  EXPECT_LE(gaps[1], 1e-6);
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    EXPECT_GT(gaps[i], gaps[i - 1]) << i;
  }
}

TEST(Principal, TableValues) {
  const auto a = hi_integral_principal(-1.0);
  EXPECT_NEAR(a.value.real(), 0.22066961, 5e-9);
  EXPECT_EQ(a.value.imag(), 0.0);
  EXPECT_EQ(a.method, Method::quad_3_6);
  const auto b = hi_integral_principal(polar(10.0, 5.0 * kPi / 6.0));
  EXPECT_NEAR(b.value.real(), 2.7597145e-2, 5e-10);
  EXPECT_NEAR(b.value.imag(), 1.5859789e-2, 5e-10);
  const auto c = hi_integral_principal(polar(1.0, 2.0 * kPi / 3.0));
  EXPECT_NEAR(c.value.real(), 0.23477589, 5e-9);
  EXPECT_NEAR(c.value.imag(), 0.13605894, 5e-9);
  EXPECT_THROW(hi_integral_principal(polar(2.0, kPi / 2.0)), DomainError);
}

TEST(Principal, OracleAndHonesty) {
  for (Complex z : grid({0.5, 2.0, 6.0, 12.0, 20.0}, 2.0 * kPi / 3.0, kPi, 8)) {
    const auto r = hi_integral_principal(z);
    const Complex truth = oracle::hi(z);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(rel(r.value, truth), 1e-11) << z;
    EXPECT_LE(std::abs(r.value - truth), 10.0 * r.abs_error_estimate + 1e-16 * std::abs(truth))
        << z;
    EXPECT_GT(r.n_evaluations, 0u);
  }
}

TEST(VForm, CrossCheck) {
  const Complex z10 = polar(10.0, 5.0 * kPi / 6.0);
  const auto v = hi_integral_v_form(z10);
  EXPECT_EQ(v.method, Method::quad_3_10);
  EXPECT_LT(rel(v.value, hi_integral_principal(z10).value), 1e-9);
  const auto v100 = hi_integral_v_form(polar(100.0, 5.0 * kPi / 6.0));
  EXPECT_NEAR(v100.value.real(), 2.7566477e-3, 5e-11);
  EXPECT_NEAR(v100.value.imag(), 1.5915439e-3, 5e-11);
  const auto v1 = hi_integral_v_form(polar(1.0, 5.0 * kPi / 6.0));
  EXPECT_NEAR(v1.value.real(), 0.22331566, 5e-9);
  EXPECT_NEAR(v1.value.imag(), 6.2133021e-2, 5e-10);
  EXPECT_THROW(hi_integral_v_form(-2.0), DomainError);
}

TEST(Remark, CrossChecks) {
  const Complex z = polar(2.0, kPi / 2.0);
  const auto r = hi_integral_remark(z);
  EXPECT_EQ(r.method, Method::quad_3_12);
  EXPECT_LT(rel(r.value, hi_connection(z, ConnectionSign::upper).value), 1e-9);
  const auto s = hi_integral_remark(polar(1.0, 2.0 * kPi / 3.0));
  EXPECT_NEAR(s.value.real(), 0.23477589, 5e-9);
  EXPECT_NEAR(s.value.imag(), 0.13605894, 5e-9);
  const Complex z5 = polar(5.0, kPi / 2.0);
  const auto f = hi_integral_remark(z5);
  EXPECT_TRUE(f.converged);
  EXPECT_LT(std::abs(gi(z5).value + f.value - airy::bi(z5).value), 1e-10 * std::abs(f.value));
  for (Complex w : grid({1.0, 3.0, 8.0}, kPi / 3.0, 2.0 * kPi / 3.0, 6)) {
    EXPECT_LT(rel(hi_integral_remark(w).value, oracle::hi(w)), 1e-10) << w;
  }
}

TEST(Connection, PhaseArithmeticAndValues) {
  for (double f : {0.05, 0.5, 0.95}) {
    const double ph = kPi / 3.0 + f * kPi / 3.0;
    const Complex z = polar(3.0, ph);
    const double rotated = std::arg(airy::rotate(z, 2.0 * kPi / 3.0));
    const double airy_arg = std::arg(airy::rotate(z, -2.0 * kPi / 3.0));
    EXPECT_GT(rotated, -kPi);
    EXPECT_LT(rotated, -2.0 * kPi / 3.0);
    EXPECT_GT(airy_arg, -kPi / 3.0);
    EXPECT_LT(airy_arg, 0.0);
    EXPECT_LT(rel(hi_connection(z, ConnectionSign::upper).value, oracle::hi(z)), 1e-10);
  }
  const auto at0 = hi_connection(0.0, ConnectionSign::upper);
  EXPECT_LT(std::abs(at0.value - hi_at_zero()), 1e-14);
  EXPECT_EQ(at0.method, Method::conn_2_7);
}

TEST(GiIntegral, Examples) {
  const Complex z = polar(1.0, kPi / 3.0);
  const auto g = gi_integral(z);
  EXPECT_EQ(g.method, Method::quad_3_17);
  EXPECT_LT(std::abs(g.value + hi_connection(z, ConnectionSign::upper).value -
                     airy::bi(z).value),
            1e-10 * std::abs(airy::bi(z).value));
  // At 10 e^{i pi/6} the gap to the expansion is the neglected i Ai(z),
  // about 1.7e-6 relative to 1/(pi z).
  const Complex z10 = polar(10.0, kPi / 6.0);
  const double gap = rel(gi_asymptotic(z10, 10), gi_integral(z10).value);
  const double neglected = std::abs(airy::ai(z10).value * kPi * z10);
  EXPECT_NEAR(gap / neglected, 1.0, 0.05);
  const Complex z2 = polar(2.0, kPi / 2.0);
  const Complex rotation_route =
      -0.5 * (unit_phase(2.0 * kPi / 3.0) * hi(airy::rotate(z2, 2.0 * kPi / 3.0)).value +
              unit_phase(-2.0 * kPi / 3.0) * hi(airy::rotate(z2, -2.0 * kPi / 3.0)).value);
  EXPECT_LT(rel(gi_integral(z2).value, rotation_route), 1e-9);
  for (Complex w : grid({0.5, 2.0, 6.0, 12.0}, 0.05, 2.0 * kPi / 3.0, 8)) {
    EXPECT_LT(rel(gi_integral(w).value, oracle::gi(w)), 1e-10) << w;
  }
}

TEST(GiRealPositive, Examples) {
  const auto g0 = gi_real_positive(0.0);
  EXPECT_NEAR(g0.value.real(), oracle::gi_at_zero(), 1e-15);
  EXPECT_EQ(g0.method, Method::quad_3_18);
  const auto g1 = gi_real_positive(1.0);
  EXPECT_NEAR(g1.value.real(), gi_series(1.0).value.real(), 1e-10);
  EXPECT_EQ(g1.value.imag(), 0.0);
  const double g10 = gi_real_positive(10.0).value.real();
  const AsymptoticSum s = scorer_asymptotic_sum(10.0, 10, 1.0);
  EXPECT_LE(std::abs(g10 - s.value.real()) / g10, 10.0 * s.last_term);
  for (double x : {0.1, 0.5, 1.0, 2.0, 2.5}) {
    EXPECT_LT(std::abs(gi_real_positive(x).value.real() - gi_series(x).value.real()), 1e-9);
  }
  EXPECT_THROW(gi_real_positive(-1.0), DomainError);
}

TEST(GiFromHiRotations, Examples) {
  EXPECT_NEAR(std::abs(gi_from_hi_rotations(0.0).value - gi_at_zero()), 0.0, 1e-14);
  const auto g3 = gi_from_hi_rotations(3.0);
  EXPECT_LT(std::abs(g3.value.imag()), 1e-12 * std::abs(g3.value));
  EXPECT_EQ(g3.method, Method::conn_2_8);
  const Complex z{1.0, 0.2};
  EXPECT_LT(rel(gi_from_hi_rotations(z).value, gi_integral(z).value), 1e-9);
  EXPECT_THROW(gi_from_hi_rotations(polar(2.0, 1.5)), DomainError);
}

TEST(Dispatch, SpecExamples) {
  EXPECT_NEAR(hi(-1.0).value.real(), 0.22066961, 5e-9);
  const auto h = hi(polar(10.0, -5.0 * kPi / 6.0));
  EXPECT_NEAR(h.value.real(), 2.7597145e-2, 5e-10);
  EXPECT_NEAR(h.value.imag(), -1.5859789e-2, 5e-10);
  EXPECT_EQ(h.method, Method::conj_2_9);
  EXPECT_THROW(hi(Complex{INFINITY, 0.0}), DomainError);
}

TEST(Dispatch, MatchesOracleEverywhere) {
  for (Complex z : grid({0.3, 1.0, 2.4, 2.6, 4.0, 7.0, 10.0, 14.0, 16.0, 22.0}, -kPi, kPi, 36)) {
    const auto [g, h] = gi_hi_pair(z);
    EXPECT_TRUE(g.converged && h.converged) << z;
    EXPECT_LT(rel(g.value, oracle::gi(z)), 2e-10) << z << " " << g.trace;
    EXPECT_LT(rel(h.value, oracle::hi(z)), 2e-10) << z << " " << h.trace;
    EXPECT_GT(g.n_evaluations, 0u);
    EXPECT_GT(h.n_evaluations, 0u);
    EXPECT_EQ(g.value, gi(z).value);
    EXPECT_EQ(h.value, hi(z).value);
  }
}

TEST(Dispatch, RealAxisValuesAreReal) {
  for (double x : {-30.0, -8.0, -3.0, 3.0, 8.0, 30.0}) {
    EXPECT_EQ(hi(x).value.imag(), 0.0) << x;
    EXPECT_EQ(gi(x).value.imag(), 0.0) << x;
  }
}

TEST(Dispatch, MethodSelection) {
  EXPECT_EQ(hi(Complex{1.0, 1.0}).method, Method::series);
  EXPECT_EQ(hi(-5.0).method, Method::quad_3_6);
  EXPECT_EQ(hi(-30.0).method, Method::asymptotic);
  EXPECT_EQ(gi(5.0).method, Method::quad_3_18);
  EXPECT_EQ(gi(polar(5.0, 0.01)).method, Method::conn_2_8);
  EXPECT_EQ(gi(polar(5.0, 0.5)).method, Method::quad_3_17);
  EXPECT_EQ(gi(polar(5.0, 1.5)).method, Method::quad_3_17);
  EXPECT_EQ(hi(polar(5.0, 1.5)).method, Method::conn_2_7);
  EXPECT_EQ(hi(polar(5.0, 0.5)).method, Method::identity_1_6);
  EXPECT_EQ(gi(polar(5.0, 2.5)).method, Method::identity_1_6);
}

TEST(Invariants, IdentityGrid) {
  for (Complex z : grid({0.5, 1.0, 2.0, 5.0, 8.0}, 0.0, kPi, 6)) {
    const Complex g = gi(z).value, h = hi(z).value, b = airy::bi(z).value;
    const double scale = std::max({std::abs(g), std::abs(h), std::abs(b)});
    EXPECT_LE(std::abs(g + h - b), 1e-9 * scale) << z;
  }
}

TEST(Invariants, ConjugateSymmetry) {
  for (Complex z : grid({0.5, 1.0, 2.0, 5.0, 8.0, 20.0}, 0.0, kPi, 12)) {
    EXPECT_EQ(hi(std::conj(z)).value, std::conj(hi(z).value)) << z;
    EXPECT_EQ(gi(std::conj(z)).value, std::conj(gi(z).value)) << z;
  }
}

TEST(Invariants, ConnectionResidual) {
  for (Complex z : grid({0.5, 1.0, 3.0, 6.0, 10.0}, kPi / 3.0, 2.0 * kPi / 3.0 - 1e-3, 6)) {
    const Complex rhs = unit_phase(2.0 * kPi / 3.0) * hi(airy::rotate(z, 2.0 * kPi / 3.0)).value +
                        2.0 * unit_phase(-kPi / 6.0) *
                            airy::ai(airy::rotate(z, -2.0 * kPi / 3.0)).value;
    EXPECT_LT(rel(hi(z).value, rhs), 1e-9) << z;
  }
}

TEST(Invariants, S0Identity) {
  for (Complex z : grid({0.5, 1.0, 3.0, 6.0, 10.0}, 0.05, kPi / 3.0 - 0.01, 6)) {
    EXPECT_LT(rel(gi_from_hi_rotations(z).value, gi_integral(z).value), 1e-9) << z;
  }
  for (double x : {0.5, 1.0, 3.0, 6.0, 10.0}) {
    EXPECT_LT(rel(gi_from_hi_rotations(x).value, gi_real_positive(x).value), 1e-9) << x;
  }
}

TEST(Invariants, MethodContinuity) {
  const EngineConfig cfg;
  // Both sides of a boundary agree with the oracle, hence with each other.
  auto check = [&](Complex a, Complex b) {
    EXPECT_LT(rel(gi(a).value, oracle::gi(a)), 1e-8) << a;
    EXPECT_LT(rel(gi(b).value, oracle::gi(b)), 1e-8) << b;
    EXPECT_LT(rel(hi(a).value, oracle::hi(a)), 1e-8) << a;
    EXPECT_LT(rel(hi(b).value, oracle::hi(b)), 1e-8) << b;
  };
  const double tiny = 1e-9;
  for (double ph : {0.0, 0.7, 1.5, 2.3, 3.0}) {
    check(polar(cfg.series_radius * (1 - tiny), ph), polar(cfg.series_radius * (1 + tiny), ph));
    check(polar(cfg.asymptotic_radius * (1 - tiny), ph),
          polar(cfg.asymptotic_radius * (1 + tiny), ph));
  }
  for (double r : {3.0, 8.0, 20.0}) {
    for (double ph : {kPi / 3.0, 2.0 * kPi / 3.0, cfg.gi_real_axis_band}) {
      const Complex a = polar(r, ph - 1e-9), b = polar(r, ph + 1e-9);
      check(a, b);
      const Complex dg = (gi(a).value - gi(b).value) - (oracle::gi(a) - oracle::gi(b));
      const Complex dh = (hi(a).value - hi(b).value) - (oracle::hi(a) - oracle::hi(b));
      EXPECT_LT(std::abs(dg), 1e-8 * std::abs(oracle::gi(a))) << a;
      EXPECT_LT(std::abs(dh), 1e-8 * std::abs(oracle::hi(a))) << a;
    }
  }
}

TEST(Fault, JacobianSignCorruptsPrincipalIntegral) {
  EngineConfig cfg;
  cfg.fault = Fault::hi_jacobian_sign;
  const Complex z = polar(4.0, 0.8 * kPi);
  EXPECT_GT(rel(hi_integral_principal(z, cfg).value, oracle::hi(z)), 1e-3);
}
