#include <gtest/gtest.h>

#include <chrono>
#include <algorithm>
#include <cmath>
#include <random>

#include "ilangevin/rational_approx.hpp"

using namespace ilangevin;

namespace {

const rational_series& inv_series() {
  static const rational_series s = inverse_langevin_series(320);
  return s;
}

const rational_series& f_series() {
  static const rational_series s = reduce_multiplicative(inv_series(), 318);
  return s;
}

big_rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST(ContinuedFraction, GeometricSeriesHasTwoTerms) {
  // 1/(1-x) = 1/(1 - x/(1 + 0 ...)): a_0 = 1, a_1 = -1, then a zero numerator
  std::vector<big_rational> c(11, q(1));
  const rational_series s(c, series_parity::none);
  const auto cf = series_to_cf(s, 10);
  ASSERT_GE(cf.depth(), 2u);
  EXPECT_EQ(cf.partial_coefficients[0], q(1));
  EXPECT_EQ(cf.partial_coefficients[1], q(-1));
  EXPECT_TRUE(cf.terminated);
  EXPECT_EQ(cf.depth(), 2u);
}

TEST(ContinuedFraction, InverseLangevinLeadingCoefficients) {
  const auto cf = series_to_cf(inv_series(), 6);
  EXPECT_EQ(cf.prefactor_power, 1u);
  EXPECT_EQ(cf.variable_power, 2u);
  EXPECT_EQ(cf.partial_coefficients[0], q(3));
  // 3x(1 + 3/5 t + ...) = 3x / (1 - 3/5 t ...)
  EXPECT_EQ(cf.partial_coefficients[1], q(-3, 5));
  const auto c1 = cf_convergent(cf, 1);
  EXPECT_EQ(c1.numerator.size(), 2u);
  EXPECT_EQ(c1.numerator[1], q(3));
  EXPECT_EQ(c1.denominator_degree(), 0u);
}

TEST(ContinuedFraction, FSeriesLeadingCoefficients) {
  const auto cf = series_to_cf(f_series(), 4);
  EXPECT_EQ(cf.prefactor_power, 0u);
  EXPECT_EQ(cf.partial_coefficients[0], q(1));
  EXPECT_EQ(cf.partial_coefficients[1], q(2, 5));
}

TEST(ContinuedFraction, ConvergentsReproduceSeries) {
  const auto& f = f_series();
  const auto cf = series_to_cf(f, 40);
  for (std::size_t k = 1; k <= 40; ++k) {
    const auto c = cf_convergent(cf, k);
    EXPECT_EQ(c.denominator[0], q(1));
    const std::size_t through = 2 * (k - 1);
    const auto e = expand(c, through + 2);
    for (std::size_t j = 0; j <= through; ++j) ASSERT_EQ(e[j], f[j]) << "k=" << k << " j=" << j;
    EXPECT_NE(e[through + 2], f[through + 2]) << "k=" << k;
  }
}

TEST(ContinuedFraction, ConvergentsMatchForwardRecurrence) {
  // Independent check: A_k = A_{k-1} + a_{k-1} u A_{k-2} in exact rationals.
  const auto cf = series_to_cf(f_series(), 24);
  rational_poly Am2{q(0)}, Bm2{q(1)}, Am1{cf.partial_coefficients[0]}, Bm1{q(1)};
  for (std::size_t k = 2; k <= 24; ++k) {
    auto step = [&](const rational_poly& a1, const rational_poly& a2) {
      rational_poly r(std::max(a1.size(), a2.size() + 1), q(0));
      for (std::size_t i = 0; i < a1.size(); ++i) r[i] += a1[i];
      for (std::size_t i = 0; i < a2.size(); ++i) r[i + 1] += cf.partial_coefficients[k - 1] * a2[i];
      return r;
    };
    rational_poly A = step(Am1, Am2);
    rational_poly B = step(Bm1, Bm2);
    Am2 = Am1;
    Bm2 = Bm1;
    Am1 = A;
    Bm1 = B;
    const auto c = cf_convergent(cf, k);
    const big_rational b0 = B[0];
    for (std::size_t i = 0; i < B.size(); ++i) ASSERT_EQ(c.denominator.at(2 * i), B[i] / b0) << k;
    for (std::size_t i = 0; i < A.size(); ++i) {
      const big_rational ci = 2 * i < c.numerator.size() ? c.numerator[2 * i] : q(0);
      ASSERT_EQ(ci, A[i] / b0) << k;
    }
  }
}

TEST(ContinuedFraction, ZeroLeadingCoefficientThrows) {
  std::vector<big_rational> c{q(0), q(0), q(1), q(0), q(2)};
  const rational_series s(c, series_parity::none);
  try {
    series_to_cf(s, 4);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::zero_coefficient);
  }
}

TEST(ContinuedFraction, NoCommonFactorInConvergents) {
  const auto cf = series_to_cf(f_series(), 30);
  for (std::size_t k : {5u, 12u, 21u, 30u}) EXPECT_EQ(common_factor_degree(cf_convergent(cf, k)), 0u) << k;
}

TEST(ContinuedFraction, ConvergentsAtHalf) {
  // Reference from the exact series to x^318, accurate to about 1e-80 at x = 0.5.
  detail::precision_guard g(1000);
  const variable_real x = 0.5;
  variable_real ref = 0, p = 1;
  const auto& f = f_series();
  for (std::size_t k = 0; k <= f.order(); k += 2) {
    ref += from_rational<variable_real>(f[k]) * p;
    p *= x * x;
  }
  const auto cf = series_to_cf(f, 85);
  int flips = 0, prev_sign = 0;
  double best = INFINITY;
  for (std::size_t k = 1; k <= 85; ++k) {
    const variable_real e = evaluate(cf_convergent(cf, k), x) - ref;
    const double le = static_cast<double>(log10(abs(e)));
    best = std::min(best, le);
    EXPECT_LT(best, 2.0 - 0.85 * static_cast<double>(k)) << k;
    const int sg = e > 0 ? 1 : -1;
    if (prev_sign != 0 && sg != prev_sign) ++flips;
    prev_sign = sg;
  }
  // The error changes sign in runs of several convergents, not at every step.
  EXPECT_GT(flips, 5);
  EXPECT_LT(flips, 84 / 3);
}

TEST(Pade, ZeroDenominatorOrderIsTaylorPolynomial) {
  const auto& s = inv_series();
  const auto p = pade(s, 9, 0);
  ASSERT_EQ(p.denominator.size(), 1u);
  for (int j = 0; j <= 9; ++j) EXPECT_EQ(p.numerator[j], s[j]);
}

TEST(Pade, ReproducesGeometric) {
  std::vector<big_rational> c(5, q(1));
  const auto p = pade(rational_series(c, series_parity::none), 1, 1);
  EXPECT_FALSE(p.deflated);
  EXPECT_EQ(p.numerator[0], q(1));
  EXPECT_EQ(p.numerator[1], q(0));
  EXPECT_EQ(p.denominator[1], q(-1));
}

TEST(Pade, DegreeBookkeeping) {
  const auto& f = f_series();
  for (auto [L, M] : {std::pair{4, 6}, std::pair{10, 10}, std::pair{12, 2}}) {
    const auto p = pade(f, L, M);
    EXPECT_LE(p.numerator_degree(), static_cast<std::size_t>(L));
    EXPECT_LE(p.denominator_degree(), static_cast<std::size_t>(M));
    EXPECT_EQ(p.denominator_degree(), static_cast<std::size_t>(M));
  }
}

TEST(Pade, InverseLangevin32) {
  const auto p = pade(inv_series(), 3, 2);
  EXPECT_FALSE(p.deflated);
  ASSERT_EQ(p.numerator.size(), 4u);
  EXPECT_EQ(p.numerator[0], q(0));
  EXPECT_EQ(p.numerator[1], q(3));
  EXPECT_EQ(p.numerator[2], q(0));
  EXPECT_EQ(p.numerator[3], q(-36, 35));
  ASSERT_EQ(p.denominator.size(), 3u);
  EXPECT_EQ(p.denominator[0], q(1));
  EXPECT_EQ(p.denominator[1], q(0));
  EXPECT_EQ(p.denominator[2], q(-33, 35));
}

TEST(Pade, MatchesSeriesThroughOrder) {
  const auto& s = inv_series();
  for (auto [L, M] : {std::pair{5, 4}, std::pair{9, 8}, std::pair{11, 6}}) {
    const auto p = pade(s, L, M);
    const auto e = expand(p, L + M);
    for (int j = 0; j <= L + M; ++j) EXPECT_EQ(e[j], s[j]) << L << "/" << M << " j=" << j;
  }
}

TEST(Pade, SingularSystemDeflates) {
  // 1/(1-x) has no genuine [1/2] denominator
  std::vector<big_rational> c(8, q(1));
  const rational_series s(c, series_parity::none);
  const auto p = pade(s, 1, 2);
  EXPECT_TRUE(p.deflated);
  const auto e = expand(p, 5);
  for (int j = 0; j <= 5; ++j) EXPECT_EQ(e[j], q(1));
}

TEST(Pade, DiagonalAgreesWithConvergent) {
  // Even-depth convergent of f equals the [n/n] Padé approximant in x^2.
  const auto& f = f_series();
  const auto cf = series_to_cf(f, 9);
  const auto c = cf_convergent(cf, 9);
  const auto p = pade(f, 8, 8);
  ASSERT_EQ(c.denominator_degree(), 8u);
  for (std::size_t i = 0; i < c.denominator.size(); ++i) EXPECT_EQ(c.denominator[i], p.denominator.at(i)) << i;
}

TEST(PoleZero, SimpleRationalFunction) {
  // (x - 2) / ((1 - x/3)(1 + x^2/4)): poles 3, ±2i, zero 2
  rational_function r;
  r.numerator = {q(-2), q(1)};
  r.denominator = {q(1), q(-1, 3), q(1, 4), q(-1, 12)};
  const auto pz = poles_and_zeros(r);
  ASSERT_EQ(pz.poles.size(), 3u);
  ASSERT_EQ(pz.zeros.size(), 1u);
  EXPECT_NEAR(pz.zeros[0].z.re, 2.0, 1e-14);
  int found = 0;
  for (const auto& p : pz.poles) {
    if (std::abs(p.z.re - 3) < 1e-12 && std::abs(p.z.im) < 1e-12) {
      // residue of (x-2)/((1-x/3)(1+x²/4)) at 3: (1) / ((-1/3)(13/4)) → |·| = 12/13
      EXPECT_NEAR(p.residue, 12.0 / 13.0, 1e-12);
      ++found;
    }
    if (std::abs(p.z.re) < 1e-12 && std::abs(std::abs(p.z.im) - 2) < 1e-12) ++found;
  }
  EXPECT_EQ(found, 3);
  EXPECT_LT(conjugate_defect(pz.poles), 1e-14);
}

TEST(PoleZero, FroissartRemovesDoublet) {
  // 1/(1 - x/2) times (x - 0.7)/(x - 0.7 - 1e-9): a near-cancelling pair
  rational_function r;
  const big_rational a = q(7, 10), b = q(7, 10) + make_rational(1, 1000000000);
  // numerator (x - a), denominator (1 - x/2)(x - b) / (-b)
  r.numerator = {-a / -b, q(1) / -b};
  r.denominator = {q(1), (q(1) + b / 2) / -b, q(-1, 2) / -b};
  const auto pz = poles_and_zeros(r);
  ASSERT_EQ(pz.poles.size(), 2u);
  const auto fl = filter_froissart(pz);
  ASSERT_EQ(fl.poles.size(), 1u);
  EXPECT_TRUE(fl.zeros.empty());
  EXPECT_NEAR(fl.poles[0].z.re, 2.0, 1e-12);
  EXPECT_EQ(fl.removed_poles, 1u);
  EXPECT_TRUE(fl.filtered);
}

TEST(PoleZero, SimplePoleRetained) {
  rational_function r;
  r.denominator = {q(1), q(-1)};
  const auto fl = filter_froissart(poles_and_zeros(r));
  ASSERT_EQ(fl.poles.size(), 1u);
  EXPECT_NEAR(fl.poles[0].z.re, 1.0, 1e-15);
  EXPECT_EQ(fl.removed_poles, 0u);
}

TEST(PoleZero, MaxPoleScaleIsCoarser) {
  // pole 0.7 and zero 0.7 + 1e-5 survive the local scale, not the max-pole scale with a pole at 100
  rational_function r;
  const big_rational a = q(7, 10) + make_rational(1, 100000), b = q(7, 10);
  // (x - a) / ((1 - x/100)(1 - x/b))
  r.numerator = {-a, q(1)};
  r.denominator = {q(1), -(q(1, 100) + 1 / b), 1 / (100 * b)};
  const auto pz = poles_and_zeros(r);
  EXPECT_EQ(filter_froissart(pz).poles.size(), 2u);
  froissart_options o;
  o.pair_tol = 1e-6;
  o.scale_by_max_pole = true;
  EXPECT_EQ(filter_froissart(pz, o).poles.size(), 1u);
}

TEST(Roots, CohenDenominator) {
  const auto r = roots(std::vector<big_rational>{q(1), q(0), q(-33, 35)});
  ASSERT_EQ(r.roots.size(), 2u);
  for (const auto& z : r.roots) {
    EXPECT_NEAR(std::abs(z.re), std::sqrt(35.0 / 33.0), 1e-15);
    EXPECT_EQ(z.im, 0.0);
  }
  for (double b : r.backward_error) EXPECT_LE(b, 1e-10);
}

TEST(Roots, UnitCircleQuadratic) {
  const auto r = roots(std::vector<big_rational>{q(1), q(0), q(1)});
  ASSERT_EQ(r.roots.size(), 2u);
  for (const auto& z : r.roots) {
    EXPECT_NEAR(z.re, 0, 1e-15);
    EXPECT_NEAR(std::abs(z.im), 1, 1e-15);
  }
  EXPECT_NE(r.roots[0].im > 0, r.roots[1].im > 0);
  const auto d = roots(std::vector<double>{1, 0, 1});
  ASSERT_EQ(d.roots.size(), 2u);
  EXPECT_NEAR(std::abs(d.roots[0].im), 1, 1e-14);
}

TEST(Roots, RandomRealPolynomialConjugateClosed) {
  std::mt19937 gen(12345);
  std::uniform_int_distribution<long> u(-50, 50);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<big_rational> c(21);
    std::vector<double> cd(21);
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] = make_rational(u(gen), 7);
      cd[k] = to_double(c[k]);
    }
    if (c.back() == 0) c.back() = cd.back() = 1;
    if (c.back() == 0 || c[0] == 0) continue;
    const auto ex = roots(c);
    const auto db = roots(cd);
    ASSERT_EQ(ex.roots.size(), 20u);
    ASSERT_EQ(db.roots.size(), 20u);
    std::vector<pz_point> pe, pd;
    for (const auto& z : ex.roots) pe.push_back({z, 1, 0});
    for (const auto& z : db.roots) pd.push_back({z, 1, 0});
    EXPECT_LT(conjugate_defect(pe), 1e-14);
    EXPECT_LT(conjugate_defect(pd), 1e-10);
    for (const auto& z : ex.roots) {
      double best = INFINITY;
      for (const auto& w : db.roots) best = std::min(best, abs(z - w));
      EXPECT_LT(best, 1e-8 * std::max(1.0, abs(z)));
    }
  }
}

TEST(Roots, ProductOfLinearFactors) {
  // (x-1)(x-2)...(x-12), exact path recovers the integers
  std::vector<big_rational> c{q(1)};
  for (int k = 1; k <= 12; ++k) {
    std::vector<big_rational> n(c.size() + 1, q(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= c[i] * k;
    }
    c = n;
  }
  auto r = roots(c);
  std::vector<double> re;
  for (const auto& z : r.roots) {
    EXPECT_LT(std::abs(z.im), 1e-14);
    re.push_back(z.re);
  }
  std::sort(re.begin(), re.end());
  for (int k = 1; k <= 12; ++k) EXPECT_NEAR(re[k - 1], k, 1e-13 * k);
}

TEST(PoleZero, NearestPoleApproachesCircleWithDepth) {
  const auto cf = series_to_cf(f_series(), 120);
  auto gap = [&](std::size_t k) {
    const auto pz = filter_froissart(poles_and_zeros(cf_convergent(cf, k), k));
    double g = INFINITY;
    for (const auto& p : pz.poles) g = std::min(g, std::abs(abs(p.z) - 0.904854));
    return g;
  };
  const double g10 = gap(10), g40 = gap(40), g120 = gap(120);
  EXPECT_LT(g40, g10);
  EXPECT_LT(g120, g40);
  EXPECT_LT(g120, 1e-3);
}

TEST(PoleZero, FSeriesDepth150) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cf = series_to_cf(f_series(), 150);
  const auto c = cf_convergent(cf, 150);
  EXPECT_EQ(c.denominator_degree(), 150u);  // 75 in x^2
  const auto pz = poles_and_zeros(c, 150);
  const auto t2 = std::chrono::steady_clock::now();
  const auto fl = filter_froissart(pz);
  EXPECT_LT(std::chrono::duration<double>(t2 - t0).count(), 60.0);
  const double zr = 0.889240, zi = 0.166228;
  int near = 0;
  for (const auto& p : fl.poles)
    if (abs(complex_point<double>(std::abs(p.z.re), std::abs(p.z.im)) - complex_point<double>(zr, zi)) < 2e-3) ++near;
  EXPECT_GE(near, 4);
  int real_beyond = 0;
  for (const auto& p : fl.poles)
    if (std::abs(p.z.im) < 1e-8 && std::abs(p.z.re) > 1) ++real_beyond;
  EXPECT_GE(real_beyond, 10);
  EXPECT_LT(conjugate_defect(fl.poles), 1e-10);
  // no retained pole inside the disc of convergence
  for (const auto& p : fl.poles) EXPECT_GT(abs(p.z), 0.9) << p.z;
}
