#pragma once

// Complex Langevin function, its critical points sinh w = ±w and the
// branch points z_n = L(w_n) of the inverse.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "complex.hpp"
#include "error.hpp"
#include "precision.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace ilangevin {

template <class T>
using cpx = complex_point<T>;

template <class T>
struct branch_point {
  int n = 0;
  cpx<T> w, z;
  T modulus = 0;
  T root_residual = 0;  // |sinh w - (-1)^n w|
  T consistency_residual = 0;  // |w - 2z/(1 - z^2)|
  T seed_error = 0;     // |seed(n) - w|
  int iterations = 0;
  bool retreated = false;
};

inline constexpr double pole_exclusion = 1e-8;

namespace detail {

template <class T>
T pi() {
  if constexpr (std::is_floating_point_v<T>) return std::numbers::pi_v<T>;
  else return boost::math::constants::pi<T>();
}

template <class T>
const std::vector<T>& langevin_taylor() {
  static const std::vector<T> c = [] {
    const rational_series s = langevin_series(121);
    std::vector<T> out;
    for (std::size_t k = 1; k <= s.order(); k += 2) out.push_back(from_rational<T>(s[k]));
    return out;
  }();
  return c;
}

template <class T>
void check_pole(const cpx<T>& w) {
  using std::abs;
  using std::round;
  const T k = round(w.im / pi<T>());
  if (k == 0) return;
  const T d = abs(cpx<T>(w.re, w.im - k * pi<T>()));
  if (d < T(pole_exclusion))
    throw error(errc::near_pole, "w within " + std::to_string(pole_exclusion) + " of a pole i k pi");
}

// L, L', L'' from the Taylor series (|w| < 0.5). Terms shrink like (|w|/pi)^2.
template <class T>
void langevin_series_eval(const cpx<T>& w, cpx<T>* v, cpx<T>* d1, cpx<T>* d2) {
  const auto& c = langevin_taylor<T>();
  const cpx<T> w2 = w * w;
  cpx<T> s0(T(0)), s1(T(0)), s2(T(0));
  for (std::size_t j = c.size(); j-- > 0;) {
    const T k = T(static_cast<double>(2 * j + 1));  // power of w
    s0 = s0 * w2 + cpx<T>(c[j]);
    s1 = s1 * w2 + cpx<T>(c[j] * k);
    if (j > 0) s2 = s2 * w2 + cpx<T>(c[j] * k * (k - 1));
  }
  if (v) *v = s0 * w;
  if (d1) *d1 = s1;
  if (d2) *d2 = s2 * w;
}

// E = exp(-2w) for re w >= 0 keeps coth and 1/sinh^2 free of overflow.
template <class T>
void coth_and_csch2(const cpx<T>& w, cpx<T>& coth, cpx<T>& csch2) {
  const bool flip = w.re < 0;
  const cpx<T> ww = flip ? -w : w;
  const cpx<T> e = exp(cpx<T>(-2 * ww.re, -2 * ww.im));
  const cpx<T> one(T(1));
  const cpx<T> den = one - e;
  coth = (one + e) / den;
  csch2 = (e * T(4)) / (den * den);
  if (flip) coth = -coth;
}

}  // namespace detail

/// coth w - 1/w.
template <class T>
cpx<T> langevin_complex(const cpx<T>& w) {
  detail::check_pole(w);
  if (abs(w) < T(0.5)) {
    cpx<T> v;
    detail::langevin_series_eval<T>(w, &v, nullptr, nullptr);
    return v;
  }
  cpx<T> c, s;
  detail::coth_and_csch2(w, c, s);
  return c - cpx<T>(T(1)) / w;
}

/// dL/dw = 1/w^2 - 1/sinh^2 w.
template <class T>
cpx<T> langevin_derivative(const cpx<T>& w) {
  detail::check_pole(w);
  if (abs(w) < T(0.5)) {
    cpx<T> d;
    detail::langevin_series_eval<T>(w, nullptr, &d, nullptr);
    return d;
  }
  cpx<T> c, s;
  detail::coth_and_csch2(w, c, s);
  return cpx<T>(T(1)) / (w * w) - s;
}

/// d2L/dw2 = -2/w^3 + 2 coth w / sinh^2 w.
template <class T>
cpx<T> langevin_second_derivative(const cpx<T>& w) {
  detail::check_pole(w);
  if (abs(w) < T(0.5)) {
    cpx<T> d;
    detail::langevin_series_eval<T>(w, nullptr, nullptr, &d);
    return d;
  }
  cpx<T> c, s;
  detail::coth_and_csch2(w, c, s);
  return cpx<T>(T(-2)) / (w * w * w) + c * s * T(2);
}

/// (asinh((n+1/2) pi), (n+1/2) pi).
template <class T>
cpx<T> seed(int n) {
  using std::asinh;
  if (n < 1) throw error(errc::invalid_argument, "n must be >= 1");
  const T v = (T(n) + T(0.5)) * detail::pi<T>();
  return {asinh(v), v};
}

template <class T>
T verify_consistency(const branch_point<T>& bp) {
  const cpx<T> one(T(1));
  return abs(bp.w - bp.z * T(2) / (one - bp.z * bp.z));
}

/// Newton on sinh w - (-1)^n w from seed(n), steps clamped to length 1.
template <class T>
branch_point<T> solve_branch_point(int n, const precision_context& ctx) {
  ctx.validate();
  const cpx<T> s0 = seed<T>(n);
  const T sign = (n % 2 == 0) ? T(1) : T(-1);
  const T tol = T(ctx.newton_tol);
  const T floor = T(1000) * unit_roundoff<T>();
  branch_point<T> bp;
  bp.n = n;
  cpx<T> w = s0;
  T last = T(-1);
  bool done = false;
  for (int it = 0; it < ctx.max_iter; ++it) {
    bp.iterations = it + 1;
    const cpx<T> F = sinh(w) - w * sign;
    const cpx<T> J = cosh(w) - cpx<T>(sign);
    if (J.re == 0 && J.im == 0) throw error(errc::singular_jacobian, "cosh w = ±1 at n=" + std::to_string(n));
    cpx<T> step = F / J;
    T len = abs(step);
    if (len > T(1)) {
      step = step / len;
      len = T(1);
    }
    cpx<T> next = w - step;
    if (next.re <= 0 || next.im <= 0) {
      if (bp.retreated) throw error(errc::quadrant_escape, "root left the first quadrant at n=" + std::to_string(n));
      bp.retreated = true;
      next = w - step * T(0.5);
      if (next.re <= 0 || next.im <= 0)
        throw error(errc::quadrant_escape, "root left the first quadrant at n=" + std::to_string(n));
    }
    w = next;
    const T rel = len / abs(w);
    if (rel <= tol || (rel <= floor && last >= 0 && len >= last)) {
      done = true;
      break;
    }
    last = len;
  }
  if (!done) throw error(errc::no_convergence, "branch point n=" + std::to_string(n));
  bp.w = w;
  bp.z = langevin_complex(w);
  bp.modulus = abs(bp.z);
  bp.root_residual = abs(sinh(w) - w * sign);
  bp.consistency_residual = verify_consistency(bp);
  bp.seed_error = abs(s0 - w);
  return bp;
}

template <class T>
struct sqrt_expansion {
  cpx<T> coefficient;         // w_n / sqrt(z_n), principal root
  cpx<T> second_derivative;   // d2L/dw2 at w_n
  T identity_residual = 0;    // |d2L/dw2 - 2 z_n / w_n^2|
};

template <class T>
sqrt_expansion<T> sqrt_expansion_coefficient(const branch_point<T>& bp) {
  sqrt_expansion<T> out;
  out.coefficient = bp.w / sqrt(bp.z);
  out.second_derivative = langevin_second_derivative(bp.w);
  out.identity_residual = abs(out.second_derivative - bp.z * T(2) / (bp.w * bp.w));
  return out;
}

/// Newton for L(w) = z started at w0. Near a branch point the attainable
/// step floor is set by 1/|L'(w)|, so a stalled small step also ends the run.
template <class T>
cpx<T> local_inverse(const cpx<T>& z, cpx<T> w, const precision_context& ctx) {
  using std::sqrt;
  T prev = T(-1);
  for (int it = 0; it < ctx.max_iter; ++it) {
    const cpx<T> step = (langevin_complex(w) - z) / langevin_derivative(w);
    w -= step;
    const T len = abs(step), aw = abs(w);
    if (len <= (T(ctx.newton_tol) + T(64) * unit_roundoff<T>()) * aw) return w;
    if (prev >= 0 && len <= sqrt(unit_roundoff<T>()) * aw && len > prev / 2) return w;
    prev = len;
  }
  throw error(errc::no_convergence, "local inverse");
}

struct exponent_fit {
  double exponent = 0;
  double intercept = 0;  // log of the separation prefactor
  std::vector<double> log_distance, log_separation;
};

/// Separation of the two preimages of z_n + eps e^{i phi} near w_n, fitted
/// as |sep| = C eps^p on a log-log scale.
template <class T>
exponent_fit branch_separation_exponent(const branch_point<T>& bp, const precision_context& ctx,
                                        const std::vector<double>& eps = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8},
                                        double phi = 0.3) {
  using std::cos;
  using std::sin;
  const cpx<T> c = bp.w / sqrt(bp.z);
  exponent_fit fit;
  for (double e : eps) {
    const cpx<T> dz(T(e) * T(cos(phi)), T(e) * T(sin(phi)));
    const cpx<T> r = c * sqrt(dz);
    const cpx<T> a = local_inverse(bp.z + dz, bp.w + r, ctx);
    const cpx<T> b = local_inverse(bp.z + dz, bp.w - r, ctx);
    fit.log_distance.push_back(std::log(e));
    fit.log_separation.push_back(std::log(static_cast<double>(abs(a - b))));
  }
  const std::size_t m = eps.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += fit.log_distance[i];
    sy += fit.log_separation[i];
    sxx += fit.log_distance[i] * fit.log_distance[i];
    sxy += fit.log_distance[i] * fit.log_separation[i];
  }
  const double d = static_cast<double>(m) * sxx - sx * sx;
  if (m < 2 || d == 0) throw error(errc::too_few_points, "need two distinct distances");
  fit.exponent = (static_cast<double>(m) * sxy - sx * sy) / d;
  fit.intercept = (sy - fit.exponent * sx) / static_cast<double>(m);
  return fit;
}

struct ellipse_report {
  std::vector<double> deviation;  // |x^2 + y^2/b^2 - 1| with the given b
  double max_deviation = 0;
  double best_fit_b = 0;          // least squares b over the set
  double max_deviation_best_fit = 0;
};

template <class T>
ellipse_report ellipse_deviation(const std::vector<branch_point<T>>& bps, double b = 0.36) {
  if (bps.empty()) throw error(errc::too_few_points, "no branch points");
  ellipse_report out;
  double num = 0, den = 0;
  for (const auto& p : bps) {
    const double x = static_cast<double>(p.z.re), y = static_cast<double>(p.z.im);
    const double dv = std::abs(x * x + y * y / (b * b) - 1);
    out.deviation.push_back(dv);
    out.max_deviation = std::max(out.max_deviation, dv);
    num += (1 - x * x) * y * y;
    den += y * y * y * y;
  }
  if (num > 0 && den > 0) {
    out.best_fit_b = std::sqrt(den / num);
    for (const auto& p : bps) {
      const double x = static_cast<double>(p.z.re), y = static_cast<double>(p.z.im);
      out.max_deviation_best_fit =
          std::max(out.max_deviation_best_fit, std::abs(x * x + y * y / (out.best_fit_b * out.best_fit_b) - 1));
    }
  }
  return out;
}

/// z / (z^4 - 2 z^2 r1^2 cos 2theta1 + r1^4)^(1/4), principal fourth root.
template <class T>
cpx<T> euler_transform(const cpx<T>& z, const T& r1, const T& theta1) {
  using std::cos;
  const T r2 = r1 * r1;
  const cpx<T> z2 = z * z;
  const cpx<T> q = z2 * z2 - z2 * (T(2) * r2 * cos(T(2) * theta1)) + cpx<T>(r2 * r2);
  if (abs(q) <= T(64) * unit_roundoff<T>() * r2 * r2)
    throw error(errc::at_singularity, "z is one of the four removed singularities");
  return z / fourth_root(q);
}

/// Branch points n = 1..n_max with strictly increasing Im w and |z|.
template <class T>
std::vector<branch_point<T>> first_quadrant_root_census(int n_max, const precision_context& ctx) {
  if (n_max < 1) throw error(errc::invalid_argument, "n_max must be >= 1");
  std::vector<branch_point<T>> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    try {
      out.push_back(solve_branch_point<T>(n, ctx));
    } catch (const error& e) {
      throw error(e.code(), "n=" + std::to_string(n) + ": " + e.what());
    }
    if (out.size() > 1) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      if (!(a.w.im < b.w.im) || !(a.modulus < b.modulus))
        throw error(errc::no_convergence, "census ordering broken at n=" + std::to_string(n));
    }
  }
  return out;
}

}  // namespace ilangevin
