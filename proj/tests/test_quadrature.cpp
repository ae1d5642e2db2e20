#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "scorer/quadrature.hpp"

using scorer::Complex;
using scorer::kPi;
namespace quad = scorer::quad;

namespace {

struct Counting {
  quad::Integrand f;
  std::size_t* calls;
  Complex operator()(double t) const {
    ++*calls;
    return f(t);
  }
};

double combined(const quad::QuadratureResult& a, const quad::QuadratureResult& b) {
  return a.abs_error_estimate + b.abs_error_estimate;
}

}  // namespace

TEST(PanelRule, ConstantIsExact) {
  const auto r = quad::panel_rule([](double) { return Complex{1.0}; }, 0.0, 1.0);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-15);
  EXPECT_EQ(r.value.imag(), 0.0);
  EXPECT_LT(r.err, 1e-13);
  EXPECT_EQ(r.n, quad::kPanelNodes);
}

TEST(PanelRule, QuadraticIsExact) {
  const auto r = quad::panel_rule([](double t) { return Complex{t * t}; }, 0.0, 1.0);
  EXPECT_NEAR(r.value.real(), 1.0 / 3.0, 2e-16);
}

TEST(PanelRule, ExponentialErrorIsHonest) {
  const auto r = quad::panel_rule([](double t) { return Complex{std::exp(-t)}; }, 0.0, 10.0);
  const double truth = 1.0 - std::exp(-10.0);
  EXPECT_LE(std::abs(r.value - truth), r.err);
  EXPECT_LT(std::abs(r.value - truth), 1e-6);
}

TEST(PanelRule, NodesAreInterior) {
  double lo = 1.0;
  double hi = 0.0;
  quad::panel_rule(
      [&](double t) {
        lo = std::min(lo, t);
        hi = std::max(hi, t);
        return Complex{1.0 / std::sqrt(t * (1.0 - t))};
      },
      0.0, 1.0);
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi, 1.0);
}

TEST(PanelRule, NonFiniteIntegrandCarriesAbscissa) {
  try {
    quad::panel_rule([](double t) { return Complex{t > 0.5 ? NAN : 1.0}; }, 0.0, 1.0);
    FAIL() << "expected NonFiniteIntegrand";
  } catch (const scorer::NonFiniteIntegrand& e) {
    EXPECT_GT(e.abscissa(), 0.5);
    EXPECT_LT(e.abscissa(), 1.0);
  }
}

TEST(IntegrateFinite, PolynomialAndScorerPiece) {
  const auto p = quad::integrate_finite([](double t) { return Complex{t * t}; }, 0.0, 1.0);
  EXPECT_TRUE(p.converged);
  EXPECT_NEAR(p.value.real(), 1.0 / 3.0, 1e-15);

  // First piece of the real Gi representation at x = 4 against a composite
  // Simpson rule with 10^6 panels.
  const double x = 4.0;
  auto f = [x](double v) { return std::exp(-x * v + v * v * v / 3.0); };
  const double b = std::sqrt(x);
  const int n = 1000000;
  const double h = b / n;
  double s = f(0.0) + f(b);
  for (int i = 1; i < n; ++i) {
    s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  }
  const double simpson = s * h / 3.0;
  const auto r = quad::integrate_finite([&](double v) { return Complex{f(v)}; }, 0.0, b);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(std::abs(r.value.real() - simpson) / simpson, 1e-12);
}

TEST(IntegrateFinite, EndpointSingularityConverges) {
  // Derivative singularity like the v-form integrand at its branch point.
  const auto r = quad::integrate_finite(
      [](double t) { return Complex{std::sqrt(1.0 - t)}; }, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), 2.0 / 3.0, 1e-11);
}

TEST(IntegrateFinite, BudgetExhaustionIsFlagged) {
  quad::QuadratureConfig cfg;
  cfg.max_subdivisions = 3;
  const auto r = quad::integrate_finite(
      [](double t) { return Complex{std::sin(200.0 * t)}; }, 0.0, 10.0, cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_TRUE(std::isfinite(r.value.real()));
  EXPECT_GT(r.n_evaluations, 0u);
}

TEST(IntegrateFinite, RejectsEmptyInterval) {
  EXPECT_ANY_THROW(quad::integrate_finite([](double) { return Complex{1.0}; }, 1.0, 1.0));
}

TEST(IntegrateSemiInfinite, ClosedForms) {
  const auto e = quad::integrate_semi_infinite([](double t) { return Complex{std::exp(-t)}; }, 0.0);
  EXPECT_NEAR(e.value.real(), 1.0, 1e-12);
  const auto g =
      quad::integrate_semi_infinite([](double t) { return Complex{std::exp(-t * t)}; }, 0.0);
  EXPECT_NEAR(g.value.real(), 0.5 * std::sqrt(kPi), 1e-12);
  const auto c = quad::integrate_semi_infinite(
      [](double t) { return Complex{std::exp(-t * t * t / 3.0)}; }, 0.0);
  EXPECT_LT(std::abs(c.value.real() - kPi * oracle::hi_at_zero()) / (kPi * oracle::hi_at_zero()),
            1e-12);
}

TEST(IntegrateSemiInfinite, BothStrategiesAgree) {
  for (auto strategy : {quad::SemiInfiniteStrategy::rational_map,
                        quad::SemiInfiniteStrategy::panel_doubling}) {
    quad::QuadratureConfig cfg;
    cfg.semi_infinite = strategy;
    const auto r = quad::integrate_semi_infinite(
        [](double t) { return Complex{std::exp(-t * t * t / 3.0 + 2.0 * t)}; }, 0.0, cfg, 0.5);
    EXPECT_TRUE(r.converged);
    // Reference: 100-digit value of int_0^inf exp(-t^3/3 + 2t) dt = pi Hi(2).
    EXPECT_LT(std::abs(r.value.real() - kPi * oracle::hi(2.0).real()) /
                  (kPi * oracle::hi(2.0).real()),
              1e-11);
  }
}

TEST(IntegrateSemiInfinite, RejectsBadScale) {
  auto f = [](double t) { return Complex{std::exp(-t)}; };
  EXPECT_THROW(quad::integrate_semi_infinite(f, 0.0, {}, 0.0), scorer::DomainError);
  EXPECT_THROW(quad::integrate_semi_infinite(f, 0.0, {}, NAN), scorer::DomainError);
}

TEST(QuadratureConfig, Validation) {
  quad::QuadratureConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.rel_tol = 1e-16;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.max_subdivisions = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.tail_cut_ratio = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(QuadratureProperties, Linearity) {
  std::mt19937 rng(20260);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> end(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double p = coef(rng), q = coef(rng), alpha = coef(rng), beta = coef(rng);
    double a = end(rng), b = end(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) continue;
    quad::Integrand f = [p](double t) { return Complex{std::cos(p * t), std::exp(0.3 * t)}; };
    quad::Integrand g = [q](double t) { return Complex{std::exp(-q * t * t), std::sin(t)}; };
    quad::Integrand h = [&](double t) { return alpha * f(t) + beta * g(t); };
    const auto rf = quad::integrate_finite(f, a, b);
    const auto rg = quad::integrate_finite(g, a, b);
    const auto rh = quad::integrate_finite(h, a, b);
    const double bound = std::abs(alpha) * rf.abs_error_estimate +
                         std::abs(beta) * rg.abs_error_estimate + rh.abs_error_estimate +
                         1e-15 * (std::abs(alpha * rf.value) + std::abs(beta * rg.value));
    EXPECT_LE(std::abs(rh.value - (alpha * rf.value + beta * rg.value)), bound)
        << "trial " << trial;
  }
}

TEST(QuadratureProperties, IntervalAdditivity) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pt(-3.0, 3.0);
  quad::Integrand f = [](double t) { return Complex{std::exp(t) * std::cos(3.0 * t), t * t}; };
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> v = {pt(rng), pt(rng), pt(rng)};
    std::sort(v.begin(), v.end());
    if (v[1] - v[0] < 1e-3 || v[2] - v[1] < 1e-3) continue;
    const auto whole = quad::integrate_finite(f, v[0], v[2]);
    const auto left = quad::integrate_finite(f, v[0], v[1]);
    const auto right = quad::integrate_finite(f, v[1], v[2]);
    const double bound = whole.abs_error_estimate + combined(left, right) +
                         1e-15 * std::abs(whole.value);
    EXPECT_LE(std::abs(whole.value - (left.value + right.value)), bound);
  }
}

TEST(QuadratureProperties, ErrorHonesty) {
  struct Case {
    quad::Integrand f;
    double a, b;  // b = inf for semi-infinite
    Complex truth;
  };
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<Case> cases = {
      {[](double t) { return Complex{std::exp(-t)}; }, 0, inf, 1.0},
      {[](double t) { return Complex{std::exp(-t * t)}; }, 0, inf, 0.5 * std::sqrt(kPi)},
      {[](double t) { return Complex{std::exp(-t * t * t / 3.0)}; }, 0, inf,
       kPi * oracle::hi_at_zero()},
      {[](double t) { return Complex{t * std::exp(-t)}; }, 0, inf, 1.0},
      {[](double t) { return Complex{1.0 / (1.0 + t * t)}; }, 0, 1, 0.25 * kPi},
      {[](double t) { return Complex{std::sqrt(t)}; }, 0, 1, 2.0 / 3.0},
      {[](double t) { return Complex{std::log(t)}; }, 0, 1, -1.0},
      {[](double t) { return Complex{std::cos(t), std::sin(t)}; }, 0, kPi, Complex{0.0, 2.0}},
      {[](double t) { return Complex{std::exp(t)}; }, -1, 2, std::exp(2.0) - std::exp(-1.0)},
      {[](double t) { return Complex{std::sin(20.0 * t)}; }, 0, kPi, 0.0},
      {[](double t) { return Complex{1.0 / std::sqrt(t)}; }, 0, 1, 2.0},
      {[](double t) { return Complex{std::exp(-2.0 * t) * std::cos(5.0 * t)}; }, 0, inf,
       2.0 / 29.0},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    const auto r = std::isinf(c.b) ? quad::integrate_semi_infinite(c.f, c.a)
                                   : quad::integrate_finite(c.f, c.a, c.b);
    if (!r.converged) continue;
    EXPECT_LE(std::abs(r.value - c.truth), 10.0 * r.abs_error_estimate + 1e-300)
        << "case " << i;
    EXPECT_LE(r.abs_error_estimate,
              std::max(quad::QuadratureConfig{}.abs_tol,
                       quad::QuadratureConfig{}.rel_tol * std::abs(r.value)))
        << "case " << i;
  }
}

TEST(QuadratureProperties, EvaluationCountIsExact) {
  for (double b : {1.0, 5.0, 30.0}) {
    std::size_t calls = 0;
    const Counting f{[](double t) { return Complex{std::exp(std::sin(3.0 * t))}; }, &calls};
    const auto r = quad::integrate_finite(f, 0.0, b);
    EXPECT_EQ(r.n_evaluations, calls);
    EXPECT_GT(r.n_evaluations, 0u);
  }
  for (auto strategy : {quad::SemiInfiniteStrategy::rational_map,
                        quad::SemiInfiniteStrategy::panel_doubling}) {
    quad::QuadratureConfig cfg;
    cfg.semi_infinite = strategy;
    std::size_t calls = 0;
    const Counting f{[](double t) { return Complex{std::exp(-t * t * t / 3.0)}; }, &calls};
    const auto r = quad::integrate_semi_infinite(f, 0.0, cfg);
    EXPECT_EQ(r.n_evaluations, calls);
  }
}
