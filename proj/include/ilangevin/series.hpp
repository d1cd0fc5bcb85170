#pragma once

// Exact truncated power series of the Langevin function, its inverse and the
// pole-reduced variants f, g, h.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace ilangevin {

enum class series_parity { even, odd, none };

inline const char* to_string(series_parity p) {
  switch (p) {
    case series_parity::even: return "even";
    case series_parity::odd: return "odd";
    case series_parity::none: return "none";
  }
  return "none";
}

/// Coefficients a_0..a_N of a truncated power series in exact rationals.
class rational_series {
 public:
  rational_series() = default;

  rational_series(std::vector<big_rational> coeffs, series_parity parity, std::string name = "x")
      : c_(std::move(coeffs)), parity_(parity), name_(std::move(name)) {
    if (c_.empty()) throw error(errc::invalid_argument, "series needs at least one coefficient");
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const bool must_vanish = (parity_ == series_parity::odd && k % 2 == 0) ||
                               (parity_ == series_parity::even && k % 2 == 1);
      if (must_vanish && c_[k] != 0)
        throw error(errc::invalid_argument, "coefficient " + std::to_string(k) + " breaks parity");
    }
  }

  /// Zero-initialised series of the given truncation order.
  static rational_series zero(std::size_t order, series_parity parity = series_parity::none,
                              std::string name = "x") {
    return rational_series(std::vector<big_rational>(order + 1), parity, std::move(name));
  }

  static rational_series identity(std::size_t order) {
    std::vector<big_rational> c(order + 1);
    if (order >= 1) c[1] = 1;
    return rational_series(std::move(c), series_parity::odd);
  }

  [[nodiscard]] std::size_t order() const noexcept { return c_.size() - 1; }
  [[nodiscard]] series_parity parity() const noexcept { return parity_; }
  [[nodiscard]] const std::string& variable_name() const noexcept { return name_; }
  [[nodiscard]] const std::vector<big_rational>& coefficients() const noexcept { return c_; }

  /// Coefficient of x^k; zero past the truncation order.
  [[nodiscard]] big_rational operator[](std::size_t k) const {
    return k < c_.size() ? c_[k] : big_rational(0);
  }
  [[nodiscard]] const big_rational& at(std::size_t k) const {
    if (k >= c_.size()) throw error(errc::insufficient_order, "power " + std::to_string(k));
    return c_[k];
  }

  [[nodiscard]] rational_series truncated(std::size_t order) const {
    std::vector<big_rational> c(order + 1);
    for (std::size_t k = 0; k <= order && k < c_.size(); ++k) c[k] = c_[k];
    return rational_series(std::move(c), parity_, name_);
  }

  /// Stride between potentially nonzero coefficients (2 for definite parity).
  [[nodiscard]] std::size_t stride() const noexcept { return parity_ == series_parity::none ? 1 : 2; }
  [[nodiscard]] std::size_t first_power() const noexcept { return parity_ == series_parity::odd ? 1 : 0; }

  friend bool operator==(const rational_series& a, const rational_series& b) {
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] != b[k]) return false;
    return true;
  }

 private:
  std::vector<big_rational> c_{big_rational(0)};
  series_parity parity_ = series_parity::none;
  std::string name_ = "x";
};

namespace detail {

inline series_parity product_parity(series_parity a, series_parity b) {
  if (a == series_parity::none || b == series_parity::none) return series_parity::none;
  return a == b ? series_parity::even : series_parity::odd;
}

// Truncated Cauchy product of raw coefficient vectors.
inline std::vector<big_rational> mul(const std::vector<big_rational>& a,
                                     const std::vector<big_rational>& b, std::size_t order) {
  std::vector<big_rational> r(order + 1);
  big_rational t;
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
      if (b[j] == 0) continue;
      t = a[i] * b[j];
      r[i + j] += t;
    }
  }
  return r;
}

// 1/a truncated to `order`; requires a[0] != 0.
inline std::vector<big_rational> reciprocal(const std::vector<big_rational>& a, std::size_t order) {
  if (a.empty() || a[0] == 0) throw error(errc::zero_coefficient, "reciprocal of series with a_0 = 0");
  std::vector<big_rational> r(order + 1);
  const big_rational inv0 = 1 / a[0];
  r[0] = inv0;
  big_rational acc, t;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) {
      if (a[k] == 0 || r[n - k] == 0) continue;
      t = a[k] * r[n - k];
      acc += t;
    }
    r[n] = -acc * inv0;
  }
  return r;
}

inline std::vector<big_rational> padded(const std::vector<big_rational>& a, std::size_t order) {
  std::vector<big_rational> r(order + 1);
  for (std::size_t k = 0; k <= order && k < a.size(); ++k) r[k] = a[k];
  return r;
}

}  // namespace detail

inline rational_series multiply(const rational_series& a, const rational_series& b, std::size_t order) {
  return rational_series(detail::mul(a.coefficients(), b.coefficients(), order),
                         detail::product_parity(a.parity(), b.parity()));
}

inline rational_series derivative(const rational_series& s) {
  const std::size_t n = s.order();
  std::vector<big_rational> c(n == 0 ? 1 : n);
  for (std::size_t k = 1; k <= n; ++k) c[k - 1] = s.at(k) * static_cast<unsigned long>(k);
  series_parity p = series_parity::none;
  if (s.parity() == series_parity::odd) p = series_parity::even;
  if (s.parity() == series_parity::even) p = series_parity::odd;
  return rational_series(std::move(c), p, s.variable_name());
}

/// s(t(x)) truncated to `order`; t must have zero constant term.
inline rational_series compose(const rational_series& s, const rational_series& t, std::size_t order) {
  if (t[0] != 0) throw error(errc::invalid_argument, "inner series must vanish at 0");
  const auto tc = detail::padded(t.coefficients(), order);
  std::vector<big_rational> r(order + 1);
  const std::size_t top = std::min(order, s.order());
  r[0] = s[top];
  for (std::size_t i = top; i-- > 0;) {
    r = detail::mul(r, tc, order);
    r[0] += s[i];
  }
  series_parity p = series_parity::none;
  if (t.parity() == series_parity::odd) p = s.parity();
  if (t.parity() == series_parity::even) p = series_parity::even;
  return rational_series(std::move(r), p, t.variable_name());
}

/// Bernoulli numbers B_0..B_n (B_1 = -1/2) from sum_{k<=m} C(m+1,k) B_k = 0.
inline std::vector<big_rational> bernoulli_numbers(std::size_t n) {
  std::vector<big_rational> b(n + 1);
  b[0] = 1;
  big_integer binom;
  for (std::size_t m = 1; m <= n; ++m) {
    if (m > 1 && m % 2 == 1) continue;  // odd Bernoulli numbers beyond B_1 vanish
    big_rational acc = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (b[k] == 0) continue;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      acc += big_rational(binom) * b[k];
    }
    b[m] = -acc / static_cast<unsigned long>(m + 1);
  }
  return b;
}

/// Taylor series of coth y - 1/y through y^order.
inline rational_series langevin_series(std::size_t order) {
  if (order < 1) throw error(errc::invalid_argument, "order must be >= 1");
  const auto b = bernoulli_numbers(order + 1);
  std::vector<big_rational> c(order + 1);
  big_integer fact = 1;
  big_integer pow2 = 1;
  for (std::size_t n = 1; 2 * n - 1 <= order; ++n) {
    fact *= static_cast<unsigned long>(2 * n - 1);
    fact *= static_cast<unsigned long>(2 * n);
    pow2 *= 4;
    c[2 * n - 1] = big_rational(pow2) * b[2 * n] / big_rational(fact);
  }
  return rational_series(std::move(c), series_parity::odd, "y");
}

/// Compositional inverse by Newton iteration t <- t - (s(t) - x)/s'(t),
/// doubling the correct order each step.
inline rational_series revert_series(const rational_series& s, std::size_t order) {
  if (s.parity() != series_parity::odd) throw error(errc::invalid_argument, "reversion needs an odd series");
  if (s[1] == 0) throw error(errc::zero_linear_coefficient, "x^1 coefficient is zero");
  if (s.order() < order) throw error(errc::insufficient_order, "series shorter than requested order");
  const rational_series ds = derivative(s);
  std::vector<big_rational> t(2);
  t[1] = 1 / s[1];
  std::size_t prec = 1;
  while (prec < order) {
    prec = std::min(order, 2 * prec + 1);
    const rational_series tt(detail::padded(t, prec), series_parity::odd);
    auto num = compose(s.truncated(prec), tt, prec).coefficients();
    num[1] -= 1;
    const auto den = compose(ds.truncated(prec), tt, prec).coefficients();
    const auto step = detail::mul(num, detail::reciprocal(den, prec), prec);
    t = tt.coefficients();
    for (std::size_t k = 0; k <= prec; ++k) t[k] -= step[k];
  }
  return rational_series(detail::padded(t, order), series_parity::odd, "x");
}

/// Lagrange inversion: [x^n] t = (1/n) [w^{n-1}] (w/s(w))^n. Independent
/// cross-check for revert_series.
inline rational_series revert_series_lagrange(const rational_series& s, std::size_t order) {
  if (s.parity() != series_parity::odd) throw error(errc::invalid_argument, "reversion needs an odd series");
  if (s[1] == 0) throw error(errc::zero_linear_coefficient, "x^1 coefficient is zero");
  if (s.order() < order) throw error(errc::insufficient_order, "series shorter than requested order");
  // s(w)/w
  std::vector<big_rational> q(order);
  for (std::size_t k = 0; k + 1 <= s.order() && k < order; ++k) q[k] = s[k + 1];
  const std::size_t top = order == 0 ? 0 : order - 1;
  const auto phi = detail::reciprocal(q, top);
  std::vector<big_rational> out(order + 1);
  std::vector<big_rational> pw{big_rational(1)};
  for (std::size_t n = 1; n <= order; ++n) {
    pw = detail::mul(pw, phi, top);
    if (n % 2 == 1) out[n] = pw[n - 1] / static_cast<unsigned long>(n);
  }
  return rational_series(std::move(out), series_parity::odd, "x");
}

/// Taylor series of the inverse Langevin function through x^order.
///
/// With y = L^{-1}(x), differentiating x = coth y - 1/y gives
/// y' (y(1 - x^2) - 2x) = y, which yields a quadratic-cost recurrence for
/// the coefficients. It agrees with revert_series(langevin_series(N), N).
inline rational_series inverse_langevin_series(std::size_t order) {
  if (order < 1) throw error(errc::invalid_argument, "order must be >= 1");
  std::vector<big_rational> a(order + 1);
  std::vector<big_rational> p(order + 1);  // coefficients of y(1-x^2) - 2x
  a[1] = 3;
  p[1] = 1;
  big_rational acc, t;
  for (std::size_t n = 3; n <= order; n += 2) {
    acc = a[n - 2] * 3;
    for (std::size_t j = 2; j + 2 <= n; j += 2) {
      t = a[j + 1] * p[n - j];
      t *= static_cast<unsigned long>(j + 1);
      acc -= t;
    }
    a[n] = acc / static_cast<unsigned long>(n + 2);
    p[n] = a[n] - a[n - 2];
  }
  return rational_series(std::move(a), series_parity::odd, "x");
}

/// f(x) = (1 - x^2) L^{-1}(x) / (3x), even, through x^order.
inline rational_series reduce_multiplicative(const rational_series& inv, std::size_t order) {
  if (inv.order() < order + 1) throw error(errc::insufficient_order, "need inverse series to order + 1");
  std::vector<big_rational> c(order + 1);
  for (std::size_t k = 0; k <= order; k += 2) {
    c[k] = inv[k + 1];
    if (k >= 2) c[k] -= inv[k - 1];
    c[k] /= 3;
  }
  return rational_series(std::move(c), series_parity::even, "x");
}

/// g(x) = L^{-1}(x) - 2x/(1 - x^2), odd, through x^order.
inline rational_series reduce_additive(const rational_series& inv, std::size_t order) {
  if (inv.order() < order) throw error(errc::insufficient_order, "need inverse series to order");
  std::vector<big_rational> c(order + 1);
  for (std::size_t k = 1; k <= order; k += 2) c[k] = inv[k] - 2;
  return rational_series(std::move(c), series_parity::odd, "x");
}

/// h(x) = g(x)/x, even, through x^order.
inline rational_series h_series(const rational_series& g, std::size_t order) {
  if (g[0] != 0) throw error(errc::invalid_argument, "g must vanish at 0");
  if (g.order() < order + 1) throw error(errc::insufficient_order, "need g to order + 1");
  std::vector<big_rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = g[k + 1];
  return rational_series(std::move(c), series_parity::even, "x");
}

// Default truncation orders.
inline constexpr std::size_t default_inverse_order = 500;
inline constexpr std::size_t default_h_order = 448;

}  // namespace ilangevin
