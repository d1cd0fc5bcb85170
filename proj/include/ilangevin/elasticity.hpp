#pragma once

// Real-line Langevin / inverse Langevin, the reduced functions f, g, h and
// the Arruda-Boyce stress response and strain energy.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace ilangevin {

struct material_params {
  double mu = 1.0;   // shear modulus
  double I_m = 0.0;  // maximum first invariant

  void validate() const {
    if (!(mu > 0)) throw error(errc::invalid_argument, "mu must be positive");
    if (!(I_m > 3)) throw error(errc::invalid_argument, "I_m must exceed 3");
  }
};

struct stretch_state {
  double I_1 = 3, x = 0, x0 = 0;
};

inline stretch_state make_stretch(double I_1, const material_params& p) {
  p.validate();
  if (!(I_1 >= 3 && I_1 <= p.I_m)) throw error(errc::domain_error, "I_1 outside [3, I_m]");
  return {I_1, std::sqrt(I_1 / p.I_m), std::sqrt(3 / p.I_m)};
}

namespace detail {

inline std::vector<double> odd_coefficients(const rational_series& s) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= s.order(); k += 2) out.push_back(to_double(s[k]));
  return out;
}

inline const std::vector<double>& langevin_taylor_d() {
  static const std::vector<double> c = odd_coefficients(langevin_series(41));
  return c;
}

inline const std::vector<double>& inverse_taylor_d() {
  static const std::vector<double> c = odd_coefficients(inverse_langevin_series(41));
  return c;
}

inline double odd_poly(const std::vector<double>& c, double x, std::size_t terms) {
  const double x2 = x * x;
  double s = 0;
  for (std::size_t j = std::min(terms, c.size()); j-- > 0;) s = s * x2 + c[j];
  return s * x;
}

// coth y - 1 = 2/(e^{2y} - 1), y > 0
inline double coth_minus_one(double y) { return 2 / std::expm1(2 * y); }

}  // namespace detail

/// coth y - 1/y.
inline double langevin(double y) {
  const double a = std::abs(y);
  if (a < 0.5) return detail::odd_poly(detail::langevin_taylor_d(), y, 20);
  const double v = 1 + detail::coth_minus_one(a) - 1 / a;
  return y < 0 ? -v : v;
}

/// 1/y^2 - 1/sinh^2 y.
inline double langevin_prime(double y) {
  const double a = std::abs(y);
  if (a < 0.5) {
    const auto& c = detail::langevin_taylor_d();
    const double y2 = a * a;
    double s = 0;
    for (std::size_t j = 20; j-- > 0;) s = s * y2 + c[j] * static_cast<double>(2 * j + 1);
    return s;
  }
  if (a > 350) return 1 / (a * a);
  const double sh = std::sinh(a);
  return 1 / (a * a) - 1 / (sh * sh);
}

inline double cohen_approx(double x) {
  if (!(std::abs(x) < 1)) throw error(errc::domain_error, "|x| must be < 1");
  return 2 * x / ((1 - x) * (1 + x)) + x;
}

inline double rickaby_scott_approx(double x) {
  if (!(std::abs(x) < 1)) throw error(errc::domain_error, "|x| must be < 1");
  return 3 * x / ((1 - x) * (1 + x)) * (1 - 0.4 * x * x);
}

/// Newton on coth y - 1/y = x from the Cohen seed, bracketed by [0, 2 seed].
inline double inv_langevin(double x) {
  if (!(std::abs(x) < 1)) throw error(errc::domain_error, "|x| must be < 1");
  if (x == 0) return 0;
  const double a = std::abs(x);
  double y;
  if (a > 1 - 1e-6) {
    // coth y = 1 to double precision here, so 1/y = 1 - x
    y = 1 / (1 - a);
  } else {
    y = cohen_approx(a);
    double lo = 0, hi = 2 * y;
    for (int it = 0; it < 100; ++it) {
      const double r = langevin(y) - a;
      if (std::abs(r) <= std::numeric_limits<double>::epsilon() * a / 2) break;
      if (r > 0) hi = y;
      else lo = y;
      double next = y - r / langevin_prime(y);
      if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
      const double step = std::abs(next - y);
      y = next;
      if (step <= 2 * std::numeric_limits<double>::epsilon() * y || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * y) break;
    }
  }
  return x < 0 ? -y : y;
}

enum class reduced_kind { f, g, h };

inline std::string to_string(reduced_kind k) { return k == reduced_kind::f ? "f" : k == reduced_kind::g ? "g" : "h"; }

namespace detail {

// g for x in (0.5, 1): with c = coth y - 1, 1 - x = 1/y - c and
// y - 2x/(1-x^2) = -c y^2/(1 - c y) + 1/(1 + x), free of the pole cancellation.
inline double g_near_one(double x) {
  const double y = inv_langevin(x);
  const double c = coth_minus_one(y);
  return -c * y * y / (1 - c * y) + 1 / (1 + x);
}

inline const std::vector<double>& h_taylor_d() {
  static const std::vector<double> c = [] {
    const auto inv = inverse_langevin_series(41);
    std::vector<double> out;
    out.push_back(to_double(inv[1] - 2));
    for (std::size_t k = 3; k <= inv.order(); k += 2) out.push_back(to_double(inv[k] - 2));
    return out;
  }();
  return c;
}

}  // namespace detail

/// f = (1-x^2) L^-1(x)/(3x), g = L^-1(x) - 2x/(1-x^2), h = g/x on [-1, 1].
inline double reduced_eval(reduced_kind which, double x) {
  if (!(std::abs(x) <= 1)) throw error(errc::domain_error, "|x| must be <= 1");
  const double a = std::abs(x);
  const double sg = x < 0 ? -1.0 : 1.0;
  switch (which) {
    case reduced_kind::f: {
      if (a == 1) return 2.0 / 3.0;
      if (a == 0) return 1;
      if (a < 0.05) return detail::odd_poly(detail::inverse_taylor_d(), a, 12) / (3 * a) * (1 - a) * (1 + a);
      return (1 - a) * (1 + a) * inv_langevin(a) / (3 * a);
    }
    case reduced_kind::g:
    case reduced_kind::h: {
      double g;
      if (a == 1) g = 0.5;
      else if (a < 0.05) g = detail::odd_poly(detail::h_taylor_d(), a, 12);
      else if (a > 0.5) g = detail::g_near_one(a);
      else g = inv_langevin(a) - 2 * a / ((1 - a) * (1 + a));
      if (which == reduced_kind::g) return sg * g;
      if (a < 0.05) {
        const auto& c = detail::h_taylor_d();
        double s = 0;
        for (std::size_t j = 12; j-- > 0;) s = s * a * a + c[j];
        return s;
      }
      return g / a;
    }
  }
  return 0;
}

/// beta = mu L^-1(x) / (3x), with the limit mu at x = 0.
inline double stress_response(double x, const material_params& p) {
  p.validate();
  if (!(x >= 0 && x < 1)) throw error(errc::domain_error, "x must lie in [0, 1)");
  if (x == 0) return p.mu;
  return p.mu * reduced_eval(reduced_kind::f, x) / ((1 - x) * (1 + x));
}

/// log(y / sinh y) for y >= 0 without overflow or cancellation.
inline double log_y_over_sinh(double y) {
  y = std::abs(y);
  if (y < 0.5) {
    // sinh y / y - 1 = sum y^{2k}/(2k+1)!
    const double y2 = y * y;
    double term = 1, s = 0;
    for (int k = 1; k <= 12; ++k) {
      term *= y2 / ((2.0 * k) * (2.0 * k + 1));
      s += term;
    }
    return -std::log1p(s);
  }
  return std::log(y) - y + std::log(2.0) - std::log1p(-std::exp(-2 * y));
}

/// x L^-1(x) + log(L^-1(x) / sinh L^-1(x)).
inline double strain_bracket(double x) {
  const double y = inv_langevin(x);
  return x * y + log_y_over_sinh(y);
}

/// W = (mu I_m / 3)[B(x) - B(x0)], x = sqrt(I_1/I_m), x0 = sqrt(3/I_m).
inline double strain_energy(double I_1, const material_params& p) {
  p.validate();
  if (!(I_1 >= 3 && I_1 < p.I_m)) throw error(errc::domain_error, "I_1 outside [3, I_m)");
  const auto s = make_stretch(I_1, p);
  if (I_1 == 3) return 0;
  return p.mu * p.I_m / 3 * (strain_bracket(s.x) - strain_bracket(s.x0));
}

}  // namespace ilangevin
