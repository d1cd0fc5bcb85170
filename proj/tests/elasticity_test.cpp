#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ilangevin/elasticity.hpp"
#include "ilangevin/precision.hpp"

using namespace ilangevin;

namespace {

const rational_series& inv449() {
  static const rational_series s = inverse_langevin_series(449);
  return s;
}

// exact-coefficient Taylor polynomial evaluated at 50 digits
double taylor(const rational_series& s, double x) {
  extended_real acc = 0;
  const extended_real xx = x;
  for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * xx + from_rational<extended_real>(s[k]);
  return static_cast<double>(acc);
}

// one-sided three-point derivative at 1 from the left
double left_derivative_at_one(reduced_kind k) {
  const double h = 1e-4;
  return (3 * reduced_eval(k, 1.0) - 4 * reduced_eval(k, 1 - h) + reduced_eval(k, 1 - 2 * h)) / (2 * h);
}

const material_params rubber{0.3, 80.0};

}  // namespace

TEST(Langevin, RealValues) {
  EXPECT_EQ(langevin(0.0), 0.0);
  EXPECT_NEAR(langevin(1e-6) / 1e-6, 1.0 / 3.0 - 1e-12 / 45, 1e-16);
  for (double y : {0.6, 1.0, 2.5, 7.0, 30.0}) EXPECT_NEAR(langevin(y), 1 / std::tanh(y) - 1 / y, 1e-15) << y;
  EXPECT_NEAR(langevin(0.4999999999), langevin(0.5000000001), 1e-10);
  EXPECT_NEAR(langevin_prime(0.4999999999), langevin_prime(0.5000000001), 1e-10);
  EXPECT_EQ(langevin(-2.0), -langevin(2.0));
}

TEST(InverseLangevin, ZeroAndDomain) {
  EXPECT_EQ(inv_langevin(0.0), 0.0);
  EXPECT_THROW(inv_langevin(1.0), error);
  EXPECT_THROW(inv_langevin(-1.5), error);
  try {
    inv_langevin(1.0);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::domain_error);
  }
}

TEST(InverseLangevin, RoundTrip) {
  EXPECT_NEAR(inv_langevin(langevin(2.5)), 2.5, 1e-13);
  for (double y : {1e-5, 0.1, 0.7, 3.0, 20.0, 200.0}) EXPECT_NEAR(inv_langevin(langevin(y)) / y, 1.0, 1e-12) << y;
}

TEST(InverseLangevin, InversionContract) {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> u(-0.999999, 0.999999);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(gen);
    const double y = inv_langevin(x);
    EXPECT_LE(std::abs(langevin(y) - x), 1e-14 * std::max(1.0, std::abs(y))) << x;
  }
  for (double x : {0.9, 0.99, 0.999, 0.9999, 0.99999, 0.999999}) {
    const double y = inv_langevin(x);
    EXPECT_LE(std::abs(langevin(y) - x), 1e-14 * std::max(1.0, y)) << x;
  }
}

TEST(InverseLangevin, Oddness) {
  for (double x = 0.01; x < 1; x += 0.0137) EXPECT_EQ(inv_langevin(-x), -inv_langevin(x));
}

TEST(InverseLangevin, SimplePoleAtOne) {
  for (double e : {1e-3, 1e-5, 1e-7, 1e-9, 1e-12}) {
    const double x = 1 - e;
    EXPECT_NEAR((1 - x) * inv_langevin(x), 1.0, 2 * e) << e;
  }
}

TEST(InverseLangevin, AgreesWithTaylorInsideDisc) {
  for (double x = -0.5; x <= 0.5; x += 0.01) EXPECT_NEAR(inv_langevin(x), taylor(inv449(), x), 1e-10) << x;
}

TEST(Approximations, Cohen) {
  EXPECT_EQ(cohen_approx(0.0), 0.0);
  EXPECT_NEAR(cohen_approx(1e-8) / 1e-8, 3.0, 1e-12);
  EXPECT_NEAR(cohen_approx(0.5), 11.0 / 6.0, 1e-15);
  double worst = 0;
  for (double x = 1e-3; x <= 0.95; x += 1e-3)
    worst = std::max(worst, std::abs(cohen_approx(x) / inv_langevin(x) - 1));
  EXPECT_LE(worst, 0.05);
  RecordProperty("cohen_max_relative_error", std::to_string(worst));
  EXPECT_THROW(cohen_approx(1.0), error);
}

TEST(Approximations, RickabyScott) {
  EXPECT_EQ(rickaby_scott_approx(0.0), 0.0);
  for (double x : {1e-2, 3e-3}) {
    const double series = 3 * x + 1.8 * x * x * x;
    EXPECT_NEAR(rickaby_scott_approx(x), series, 10 * std::pow(x, 5)) << x;
  }
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> u(-0.99, 0.99);
  for (int i = 0; i < 100; ++i) {
    const double x = u(gen);
    EXPECT_EQ(rickaby_scott_approx(-x), -rickaby_scott_approx(x));
    EXPECT_EQ(cohen_approx(-x), -cohen_approx(x));
  }
  EXPECT_THROW(rickaby_scott_approx(-1.0), error);
}

TEST(Reduced, EndpointValues) {
  EXPECT_DOUBLE_EQ(reduced_eval(reduced_kind::f, 1.0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(reduced_eval(reduced_kind::f, -1.0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(reduced_eval(reduced_kind::g, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(reduced_eval(reduced_kind::h, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(reduced_eval(reduced_kind::h, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(reduced_eval(reduced_kind::f, 0.0), 1.0);
  EXPECT_EQ(reduced_eval(reduced_kind::g, 0.0), 0.0);
  // approach from inside
  for (auto k : {reduced_kind::f, reduced_kind::g, reduced_kind::h})
    EXPECT_NEAR(reduced_eval(k, 1 - 1e-9), reduced_eval(k, 1.0), 1e-8) << to_string(k);
}

TEST(Reduced, EndpointDerivatives) {
  EXPECT_NEAR(left_derivative_at_one(reduced_kind::f), -1.0 / 3.0, 1e-6);
  EXPECT_NEAR(left_derivative_at_one(reduced_kind::g), -0.25, 1e-6);
  EXPECT_NEAR(left_derivative_at_one(reduced_kind::h), -0.75, 1e-6);
  const double h = 1e-4;
  EXPECT_NEAR((reduced_eval(reduced_kind::h, h) - reduced_eval(reduced_kind::h, -h)) / (2 * h), 0.0, 1e-12);
}

TEST(Reduced, Parity) {
  for (double x = 0.003; x < 1; x += 0.0191) {
    EXPECT_EQ(reduced_eval(reduced_kind::f, -x), reduced_eval(reduced_kind::f, x));
    EXPECT_EQ(reduced_eval(reduced_kind::g, -x), -reduced_eval(reduced_kind::g, x));
    EXPECT_EQ(reduced_eval(reduced_kind::h, -x), reduced_eval(reduced_kind::h, x));
  }
}

TEST(Reduced, AgreeWithExactSeries) {
  const auto f = reduce_multiplicative(inv449(), 446);
  const auto g = reduce_additive(inv449(), 449);
  const auto h = h_series(g, 448);
  for (double x = 0.0; x <= 0.5; x += 0.0125) {
    EXPECT_NEAR(reduced_eval(reduced_kind::f, x), taylor(f, x), 1e-13) << x;
    EXPECT_NEAR(reduced_eval(reduced_kind::g, x), taylor(g, x), 1e-13) << x;
    EXPECT_NEAR(reduced_eval(reduced_kind::h, x), taylor(h, x), 1e-13) << x;
  }
}

TEST(Reduced, ContinuousAcrossMethodSwitches) {
  for (double s : {0.05, 0.5}) {
    for (auto k : {reduced_kind::f, reduced_kind::g, reduced_kind::h}) {
      const double a = reduced_eval(k, std::nextafter(s, 0.0)), b = reduced_eval(k, s);
      EXPECT_NEAR(a, b, 1e-14) << to_string(k) << " at " << s;
    }
  }
}

TEST(Reduced, GNearOneIsStable) {
  // g = L^-1(x) - 2x/(1-x^2) suffers cancellation; the stable route tends smoothly to 1/2
  double prev = reduced_eval(reduced_kind::g, 0.99);
  for (double e : {1e-3, 1e-4, 1e-5, 1e-6, 1e-8, 1e-10}) {
    const double v = reduced_eval(reduced_kind::g, 1 - e);
    EXPECT_NEAR(v, 0.5 + 0.25 * e, 2 * e * e + 1e-15) << e;
    EXPECT_GT(v, 0.5);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Stress, Limits) {
  EXPECT_EQ(stress_response(0.0, rubber), rubber.mu);
  EXPECT_NEAR(stress_response(1e-7, rubber), rubber.mu, 1e-12);
  EXPECT_THROW(stress_response(1.0, rubber), error);
  for (double e : {1e-4, 1e-6, 1e-8}) {
    const double x = 1 - e;
    EXPECT_NEAR(stress_response(x, rubber) * (1 - x * x), 2 * rubber.mu / 3, 1e-3 * e / 1e-4 + 1e-9);
  }
}

TEST(Stress, Monotone) {
  double prev = stress_response(0.0, rubber);
  for (double x = 1e-3; x < 1; x += 1e-3) {
    const double b = stress_response(x, rubber);
    EXPECT_GT(b, prev) << x;
    prev = b;
  }
}

TEST(StrainEnergy, NormalizationAndGrowth) {
  EXPECT_EQ(strain_energy(3.0, rubber), 0.0);
  EXPECT_NEAR(strain_energy(3.0 + 1e-12, rubber), 0.0, 1e-12);
  double prev = 0;
  for (double I = 3.1; I < rubber.I_m; I += 0.5) {
    const double w = strain_energy(I, rubber);
    EXPECT_GT(w, prev) << I;
    prev = w;
  }
  // logarithmic divergence: W(1-e1) - W(1-e2) -> (mu I_m/3) log(e2/e1) in x
  auto Wx = [&](double x) { return strain_energy(x * x * rubber.I_m, rubber); };
  double last = 0;
  for (double e : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
    const double w = Wx(1 - e);
    EXPECT_GT(w, last);
    last = w;
  }
  EXPECT_NEAR((Wx(1 - 1e-12) - Wx(1 - 1e-6)) / (rubber.mu * rubber.I_m / 3), std::log(1e6), 1e-4);
  EXPECT_THROW(strain_energy(2.9, rubber), error);
  EXPECT_THROW(strain_energy(rubber.I_m, rubber), error);
  EXPECT_THROW(strain_energy(5, material_params{1.0, 2.5}), error);
  EXPECT_THROW(strain_energy(5, material_params{-1.0, 50}), error);
}

TEST(StrainEnergy, DerivativeIdentity) {
  // dW/dx = (mu I_m / 3) L^-1(x), central differences in x
  const double x0 = std::sqrt(3 / rubber.I_m);
  for (double x : {0.25, 0.4, 0.6, 0.8, 0.95, 0.99}) {
    ASSERT_GT(x, x0);
    const double h = std::min(1e-5 * x, 1e-4 * (1 - x));
    auto W = [&](double xx) { return strain_energy(xx * xx * rubber.I_m, rubber); };
    const double d = (W(x + h) - W(x - h)) / (2 * h);
    const double want = rubber.mu * rubber.I_m / 3 * inv_langevin(x);
    EXPECT_NEAR(d / want, 1.0, 1e-7) << x;
  }
}

TEST(StrainEnergy, LogRatioStable) {
  EXPECT_NEAR(log_y_over_sinh(0.4999999999), log_y_over_sinh(0.5000000001), 1e-10);
  for (double y : {0.01, 0.3, 1.0, 5.0, 50.0}) EXPECT_NEAR(log_y_over_sinh(y), std::log(y / std::sinh(y)), 1e-13 * std::max(1.0, y));
  EXPECT_NEAR(log_y_over_sinh(1e6), std::log(1e6) - 1e6 + std::log(2.0), 1e-9);
  EXPECT_TRUE(std::isfinite(log_y_over_sinh(1e12)));
  EXPECT_NEAR(log_y_over_sinh(1e-4), -1e-8 / 6 + 1e-16 / 180, 1e-24);
}

TEST(Stretch, State) {
  const auto s = make_stretch(20, rubber);
  EXPECT_DOUBLE_EQ(s.x, std::sqrt(20 / rubber.I_m));
  EXPECT_DOUBLE_EQ(s.x0, std::sqrt(3 / rubber.I_m));
  EXPECT_THROW(make_stretch(2, rubber), error);
}
