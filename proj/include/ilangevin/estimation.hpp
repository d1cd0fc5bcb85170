#pragma once

// Singularity estimates from even-power coefficients a_{2m}: the synthetic
// four-singularity model, three-term recurrence solvers and Domb-Sykes
// quantities.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "series.hpp"

namespace ilangevin {

/// Contiguous even-index coefficients a_{first}, a_{first+2}, ...
template <class T = double>
class coefficient_window {
 public:
  coefficient_window() = default;
  coefficient_window(std::vector<T> values, std::size_t first_index)
      : values_(std::move(values)), first_(first_index) {
    if (first_ % 2 != 0) throw error(errc::invalid_argument, "first index must be even");
  }

  [[nodiscard]] std::size_t first_index() const noexcept { return first_; }
  [[nodiscard]] std::size_t last_index() const noexcept { return first_ + 2 * (values_.size() - 1); }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] bool covers(long lo, long hi) const noexcept {
    return !values_.empty() && lo >= static_cast<long>(first_) && hi <= static_cast<long>(last_index());
  }
  [[nodiscard]] const std::vector<T>& values() const noexcept { return values_; }

  /// a_{two_m}
  [[nodiscard]] const T& operator()(long two_m) const {
    if (two_m % 2 != 0 || !covers(two_m, two_m))
      throw error(errc::insufficient_order, "coefficient a_" + std::to_string(two_m) + " not in window");
    return values_[static_cast<std::size_t>(two_m - static_cast<long>(first_)) / 2];
  }

  /// Every coefficient multiplied by `factor` (scale invariance checks).
  [[nodiscard]] coefficient_window scaled(const T& factor) const {
    auto v = values_;
    for (auto& x : v) x *= factor;
    return {std::move(v), first_};
  }

 private:
  std::vector<T> values_;
  std::size_t first_ = 0;
};

/// Correctly rounded even coefficients of `s` from power `first` to `last`.
template <class T = double>
coefficient_window<T> window_from_series(const rational_series& s, std::size_t first = 0,
                                         std::optional<std::size_t> last = std::nullopt) {
  const std::size_t hi = last.value_or(s.order() - s.order() % 2);
  if (first % 2 || hi % 2) throw error(errc::invalid_argument, "window bounds must be even");
  if (hi > s.order()) throw error(errc::insufficient_order, "window beyond series order");
  std::vector<T> v;
  for (std::size_t k = first; k <= hi; k += 2) v.push_back(from_rational<T>(s[k]));
  return {std::move(v), first};
}

struct singularity_estimate {
  long m_index = 0;  // the 2m at which the estimate is anchored
  double radius = 0;
  double cos_two_theta = 0;
  double alpha = 0;
  double residual = 0;           // max |equation| over the three anchors, unscaled
  double relative_residual = 0;  // same, each equation divided by |a_{2m}|
  bool cos_out_of_range = false;  // |cos 2theta| > 1 + 1e-9
  bool outlier = false;
  int iterations = 0;
  std::size_t candidates = 0;  // admissible roots of the elimination polynomial
  std::string note;
};

/// a_{2m} = prod_{k<2m}(k - alpha) / (2m)! * r^{-2m} cos(2m theta), m = 0..m_max.
template <class T = double>
coefficient_window<T> model_coefficients(T r, T theta, T alpha, std::size_t m_max) {
  using std::cos;
  if (!(r > 0)) throw error(errc::invalid_argument, "radius must be positive");
  std::vector<T> v(m_max + 1);
  T g = 1;  // Gamma(n - alpha) / (n! Gamma(-alpha))
  T rp = 1;
  for (std::size_t n = 0; n <= 2 * m_max; ++n) {
    if (n > 0) {
      g *= (T(n - 1) - alpha) / T(n);
      rp /= r;
    }
    if (n % 2 == 0) v[n / 2] = g * rp * cos(T(n) * theta);
  }
  return {std::move(v), 0};
}

/// Large-2m form a_{2m} ~ (2m)^{-(1+alpha)} r^{-2m} cos(2m theta) / Gamma(-alpha).
inline double asymptotic_coefficient(double r, double theta, double alpha, long two_m) {
  if (two_m < 2) throw error(errc::invalid_argument, "2m must be >= 2");
  const double n = static_cast<double>(two_m);
  const double c = std::cos(n * theta);
  if (c == 0) return 0;
  return std::exp(-(1 + alpha) * std::log(n) - n * std::log(r)) * c / std::tgamma(-alpha);
}

enum class recurrence_form { exact, approximate };

struct three_term_options {
  double seed_radius = 0.9;
  double seed_cos = 0.93;
  double seed_alpha = 0.5;
  double radius_band = 0.05;  // admissible roots keep r within this relative band of the seed
  int max_iter = 100;
  double step_tol = 1e-12;
  double cos_slack = 1e-9;
  double floor_tol = 1e-10;  // scaled residual accepted when Newton can no longer descend
};

namespace detail {

using poly = std::vector<double>;  // ascending powers of alpha

inline poly pmul(const poly& a, const poly& b) {
  poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}
inline poly padd(poly a, const poly& b, double s = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
  return a;
}
inline double peval(const poly& p, double x) {
  double s = 0;
  for (std::size_t k = p.size(); k-- > 0;) s = s * x + p[k];
  return s;
}
inline double pderiv_eval(const poly& p, double x) {
  double s = 0;
  for (std::size_t k = p.size(); k-- > 1;) s = s * x + static_cast<double>(k) * p[k];
  return s;
}

// The two alpha-dependent factors multiplying a_{M-2} and a_{M-4}.
inline std::pair<poly, poly> recurrence_factors(long M, recurrence_form form) {
  const double m = static_cast<double>(M);
  if (form == recurrence_form::approximate) return {{1 - 2 / m, -2 / m}, {1 - 4 / m, -4 / m}};
  const poly f1{m - 1, -1}, f2{m - 2, -1}, f3{m - 3, -1}, f4{m - 4, -1};
  poly p1 = pmul(f1, f2);
  for (auto& x : p1) x /= m * (m - 1);
  poly p2 = pmul(pmul(f1, f2), pmul(f3, f4));
  for (auto& x : p2) x /= m * (m - 1) * (m - 2) * (m - 3);
  return {p1, p2};
}

struct recurrence_row {
  double a0, a2, a4;  // a_M, a_{M-2}, a_{M-4}
  poly p1, p2;
};

inline double row_value(const recurrence_row& w, double r, double c, double al) {
  const double r2 = r * r;
  return r2 * r2 * w.a0 - 2 * c * peval(w.p1, al) * r2 * w.a2 + peval(w.p2, al) * w.a4;
}

}  // namespace detail

/// Value of the recurrence equation at anchor 2m for given (r, cos 2theta, alpha).
template <class T>
double recurrence_residual(const coefficient_window<T>& w, long two_m, double r, double c, double alpha,
                           recurrence_form form) {
  auto [p1, p2] = detail::recurrence_factors(two_m, form);
  detail::recurrence_row row{static_cast<double>(w(two_m)), static_cast<double>(w(two_m - 2)),
                             static_cast<double>(w(two_m - 4)), p1, p2};
  return detail::row_value(row, r, c, alpha);
}

/// Solve the recurrence at anchors 2m-4, 2m-2, 2m for (r, cos 2theta, alpha).
///
/// With X = r^4 and Y = 2 cos2theta r^2 each equation is linear in (X, Y, 1),
/// so alpha must be a real root of the 3x3 determinant, a polynomial of
/// degree <= 6 (exact) or <= 2 (approximate). Candidates with X > 0,
/// |cos 2theta| <= 1 and r inside the radius band around the seed are kept;
/// the smallest alpha among them is polished by damped Newton on the original
/// system. Without admissible candidates, damped Newton runs from the seed.
template <class T>
singularity_estimate three_term(const coefficient_window<T>& w, long two_m, recurrence_form form,
                                const three_term_options& opt = {}) {
  if (!w.covers(two_m - 8, two_m)) throw error(errc::insufficient_order, "window must cover 2m-8..2m");
  std::array<detail::recurrence_row, 3> rows;
  for (int i = 0; i < 3; ++i) {
    const long M = two_m - 4 + 2 * i;
    auto [p1, p2] = detail::recurrence_factors(M, form);
    const double s = 1 / std::abs(static_cast<double>(w(M)));
    if (!std::isfinite(s)) throw error(errc::zero_coefficient, "a_" + std::to_string(M) + " is zero");
    rows[i] = {static_cast<double>(w(M)) * s, static_cast<double>(w(M - 2)) * s, static_cast<double>(w(M - 4)) * s,
               p1, p2};
  }

  singularity_estimate est;
  est.m_index = two_m;

  // Columns as polynomials in alpha: X * a0 + Y * (-p1 a2) + (p2 a4) = 0.
  std::array<std::array<detail::poly, 3>, 3> m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = {rows[i].a0};
    m[i][1] = rows[i].p1;
    for (auto& x : m[i][1]) x *= -rows[i].a2;
    m[i][2] = rows[i].p2;
    for (auto& x : m[i][2]) x *= rows[i].a4;
  }
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return detail::padd(detail::pmul(m[r0][c0], m[r1][c1]), detail::pmul(m[r0][c1], m[r1][c0]), -1);
  };
  detail::poly det = detail::pmul(m[0][0], minor(1, 2, 1, 2));
  det = detail::padd(det, detail::pmul(m[0][1], minor(1, 2, 0, 2)), -1);
  det = detail::padd(det, detail::pmul(m[0][2], minor(1, 2, 0, 1)));
  while (det.size() > 1 && std::abs(det.back()) <= 1e-300) det.pop_back();

  struct cand {
    double alpha, r, c;
  };
  std::vector<cand> cands;
  if (det.size() >= 2) {
    const auto rep = roots(det);
    const double lo = opt.seed_radius * (1 - opt.radius_band), hi = opt.seed_radius * (1 + opt.radius_band);
    for (const auto& z : rep.roots) {
      if (std::abs(z.im) > 1e-7 * (1 + std::abs(z.re))) continue;
      const double al = z.re;
      // Least squares for (X, Y) over the three rows.
      double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0;
      for (const auto& row : rows) {
        const double u = row.a0, v = -detail::peval(row.p1, al) * row.a2, k = detail::peval(row.p2, al) * row.a4;
        sxx += u * u; sxy += u * v; syy += v * v; sx += u * k; sy += v * k;
      }
      const double d = sxx * syy - sxy * sxy;
      if (d == 0) continue;
      const double X = (-sx * syy + sy * sxy) / d;
      const double Y = (-sy * sxx + sx * sxy) / d;
      if (!(X > 0)) continue;
      const double r = std::sqrt(std::sqrt(X));
      const double c = Y / (2 * std::sqrt(X));
      if (std::abs(c) > 1 + opt.cos_slack || r < lo || r > hi) continue;
      cands.push_back({al, r, c});
    }
  }
  est.candidates = cands.size();

  std::array<double, 3> x{opt.seed_radius, opt.seed_cos, opt.seed_alpha};
  if (!cands.empty()) {
    const auto best = std::min_element(cands.begin(), cands.end(), [](const cand& a, const cand& b) { return a.alpha < b.alpha; });
    x = {best->r, best->c, best->alpha};
  } else {
    est.note = "no admissible elimination root; Newton from seed";
  }

  auto residuals = [&](const std::array<double, 3>& v) {
    std::array<double, 3> f{};
    for (int i = 0; i < 3; ++i) f[i] = detail::row_value(rows[i], v[0], v[1], v[2]);
    return f;
  };
  auto nrm = [](const std::array<double, 3>& f) { return std::sqrt(f[0] * f[0] + f[1] * f[1] + f[2] * f[2]); };

  std::array<double, 3> f = residuals(x);
  bool converged = false;
  for (int it = 0; it < opt.max_iter; ++it) {
    est.iterations = it + 1;
    double J[3][3];
    for (int i = 0; i < 3; ++i) {
      const auto& row = rows[i];
      const double r = x[0], c = x[1], al = x[2];
      const double p1 = detail::peval(row.p1, al);
      J[i][0] = 4 * r * r * r * row.a0 - 4 * c * p1 * r * row.a2;
      J[i][1] = -2 * p1 * r * r * row.a2;
      J[i][2] = -2 * c * r * r * row.a2 * detail::pderiv_eval(row.p1, al) + detail::pderiv_eval(row.p2, al) * row.a4;
    }
    const double det3 = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                        J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                        J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    double jscale = 0;
    for (auto& rr : J)
      for (double v : rr) jscale = std::max(jscale, std::abs(v));
    if (std::abs(det3) <= 1e-14 * jscale * jscale * jscale) {
      if (nrm(f) <= 1e-14) {
        converged = true;
        break;
      }
      throw error(errc::singular_jacobian, "at 2m=" + std::to_string(two_m));
    }
    // Cramer's rule for J d = -f
    std::array<double, 3> d{};
    for (int k = 0; k < 3; ++k) {
      double A[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A[i][j] = j == k ? -f[i] : J[i][j];
      d[k] = (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
              A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])) /
             det3;
    }
    double lam = 1;
    std::array<double, 3> xn{}, fn{};
    const double f0 = nrm(f);
    bool decreased = false;
    for (;;) {
      for (int k = 0; k < 3; ++k) xn[k] = x[k] + lam * d[k];
      fn = residuals(xn);
      if (nrm(fn) <= f0) {
        decreased = true;
        break;
      }
      if (lam < 1e-6) break;
      lam /= 2;
    }
    if (!decreased) {
      // No descent left: x sits at the rounding floor of the residual.
      if (f0 <= opt.floor_tol) {
        converged = true;
        break;
      }
      throw error(errc::no_convergence, "stalled at 2m=" + std::to_string(two_m));
    }
    x = xn;
    f = fn;
    double step = 0;
    for (int k = 0; k < 3; ++k) step = std::max(step, std::abs(lam * d[k]) / std::max(1.0, std::abs(x[k])));
    if (step < opt.step_tol || nrm(f) <= 64 * std::numeric_limits<double>::epsilon()) {
      converged = true;
      break;
    }
  }
  if (!converged) throw error(errc::no_convergence, "three-term solve at 2m=" + std::to_string(two_m));
  if (!(x[0] > 0)) throw error(errc::no_convergence, "non-positive radius at 2m=" + std::to_string(two_m));

  est.radius = x[0];
  est.cos_two_theta = x[1];
  est.alpha = x[2];
  est.cos_out_of_range = std::abs(x[1]) > 1 + opt.cos_slack;
  for (int i = 0; i < 3; ++i) {
    const long M = two_m - 4 + 2 * i;
    est.relative_residual = std::max(est.relative_residual, std::abs(f[i]));
    est.residual = std::max(est.residual, std::abs(recurrence_residual(w, M, x[0], x[1], x[2], form)));
  }
  return est;
}

template <class T>
singularity_estimate three_term_exact(const coefficient_window<T>& w, long two_m, const three_term_options& opt = {}) {
  return three_term(w, two_m, recurrence_form::exact, opt);
}

template <class T>
singularity_estimate three_term_approx(const coefficient_window<T>& w, long two_m, const three_term_options& opt = {}) {
  return three_term(w, two_m, recurrence_form::approximate, opt);
}

/// Estimates at every even anchor in [lo, hi]. Failed rows carry the error in
/// `note` and NaN values. Rows whose alpha is more than `outlier_alpha_tol`
/// from the median alpha of the run are flagged as outliers.
template <class T>
std::vector<singularity_estimate> three_term_table(const coefficient_window<T>& w, long lo, long hi,
                                                   recurrence_form form, const three_term_options& opt = {},
                                                   double outlier_alpha_tol = 0.25) {
  std::vector<singularity_estimate> out;
  for (long m = lo; m <= hi; m += 2) {
    try {
      out.push_back(three_term(w, m, form, opt));
    } catch (const error& e) {
      singularity_estimate s;
      s.m_index = m;
      s.radius = s.cos_two_theta = s.alpha = s.residual = std::numeric_limits<double>::quiet_NaN();
      s.note = e.what();
      s.outlier = true;
      out.push_back(s);
    }
  }
  std::vector<double> al;
  for (const auto& s : out)
    if (std::isfinite(s.alpha)) al.push_back(s.alpha);
  if (!al.empty()) {
    std::nth_element(al.begin(), al.begin() + static_cast<std::ptrdiff_t>(al.size() / 2), al.end());
    const double med = al[al.size() / 2];
    for (auto& s : out)
      if (std::isfinite(s.alpha) && std::abs(s.alpha - med) > outlier_alpha_tol) s.outlier = true;
  }
  return out;
}

struct estimate_summary {
  double mean_radius = 0, mean_cos_two_theta = 0, mean_alpha = 0;
  std::size_t used = 0;
};

inline estimate_summary summarize(const std::vector<singularity_estimate>& rows, bool exclude_outliers) {
  estimate_summary s;
  for (const auto& r : rows) {
    if (!std::isfinite(r.radius) || (exclude_outliers && r.outlier)) continue;
    s.mean_radius += r.radius;
    s.mean_cos_two_theta += r.cos_two_theta;
    s.mean_alpha += r.alpha;
    ++s.used;
  }
  if (s.used) {
    s.mean_radius /= static_cast<double>(s.used);
    s.mean_cos_two_theta /= static_cast<double>(s.used);
    s.mean_alpha /= static_cast<double>(s.used);
  }
  return s;
}

/// B_{2m} = ((a_{2m}^2 - a_{2m+2} a_{2m-2}) / (a_{2m-2}^2 - a_{2m} a_{2m-4}))^{1/4}
template <class T>
T domb_sykes_B(const coefficient_window<T>& w, long two_m) {
  using std::pow;
  using std::sqrt;
  if (!w.covers(two_m - 4, two_m + 2)) throw error(errc::insufficient_order, "B needs a_{2m-4}..a_{2m+2}");
  using std::abs;
  const T num = w(two_m) * w(two_m) - w(two_m + 2) * w(two_m - 2);
  const T den = w(two_m - 2) * w(two_m - 2) - w(two_m) * w(two_m - 4);
  // A single real pair (theta = 0) makes both differences vanish; the plain
  // ratio test then applies.
  const T eps = 64 * std::numeric_limits<T>::epsilon();
  if (abs(num) <= eps * w(two_m) * w(two_m) && abs(den) <= eps * w(two_m - 2) * w(two_m - 2)) {
    const T q = w(two_m + 2) / w(two_m);
    if (!(q > 0)) throw error(errc::negative_ratio, "at 2m=" + std::to_string(two_m));
    return sqrt(q);
  }
  if (!(num > 0) || !(den > 0)) throw error(errc::negative_ratio, "at 2m=" + std::to_string(two_m));
  return sqrt(sqrt(num / den));
}

/// C_{2m} = (a_{2m-2} B^2 / a_{2m} + a_{2m+2} / (a_{2m} B^2)) / 2, tending to cos 2theta.
template <class T>
T domb_sykes_C(const coefficient_window<T>& w, long two_m) {
  if (!w.covers(two_m - 4, two_m + 2)) throw error(errc::insufficient_order, "C needs a_{2m-4}..a_{2m+2}");
  if (w(two_m) == 0) throw error(errc::zero_coefficient, "a_" + std::to_string(two_m) + " is zero");
  const T b = domb_sykes_B(w, two_m);
  const T b2 = b * b;
  return (w(two_m - 2) * b2 / w(two_m) + w(two_m + 2) / (w(two_m) * b2)) / 2;
}

struct domb_sykes_fit {
  long window_lo = 0, window_hi = 0;
  double intercept = 0, slope = 0;
  double radius = 0, alpha = 0;
  double rms_residual = 0;
  std::size_t points = 0;
  std::size_t skipped = 0;  // anchors with a negative ratio
  double median_C = 0;      // median of C_{2m} over the same anchors
};

struct domb_sykes_point {
  long two_m;
  double inv_two_m, B, C;
};

/// (1/2m, B_{2m}, C_{2m}) for all usable anchors in [lo, hi].
template <class T>
std::vector<domb_sykes_point> domb_sykes_points(const coefficient_window<T>& w, long lo, long hi,
                                                std::size_t* skipped = nullptr) {
  std::vector<domb_sykes_point> pts;
  std::size_t skip = 0;
  lo = std::max<long>(lo, static_cast<long>(w.first_index()) + 4);
  hi = std::min<long>(hi, static_cast<long>(w.last_index()) - 2);
  for (long m = lo + (lo % 2 != 0); m <= hi; m += 2) {
    if (m <= 0) continue;
    try {
      const double b = static_cast<double>(domb_sykes_B(w, m));
      const double c = static_cast<double>(domb_sykes_C(w, m));
      pts.push_back({m, 1.0 / static_cast<double>(m), b, c});
    } catch (const error& e) {
      if (e.code() != errc::negative_ratio && e.code() != errc::zero_coefficient) throw;
      ++skip;
    }
  }
  if (skipped) *skipped = skip;
  return pts;
}

/// Least-squares line B = intercept + slope / 2m through the given points;
/// r = 1/intercept and alpha = -slope r - 1.
inline domb_sykes_fit fit_domb_sykes_points(const std::vector<domb_sykes_point>& pts) {
  domb_sykes_fit fit;
  if (pts.size() < 8) throw error(errc::too_few_points, std::to_string(pts.size()) + " usable B values");
  fit.window_lo = pts.front().two_m;
  fit.window_hi = pts.back().two_m;
  const double n = static_cast<double>(pts.size());
  double mx = 0, my = 0;
  for (const auto& p : pts) {
    mx += p.inv_two_m;
    my += p.B;
  }
  mx /= n;
  my /= n;
  double vxx = 0, vxy = 0;
  for (const auto& p : pts) {
    vxx += (p.inv_two_m - mx) * (p.inv_two_m - mx);
    vxy += (p.inv_two_m - mx) * (p.B - my);
  }
  fit.slope = vxy / vxx;
  fit.intercept = my - fit.slope * mx;
  fit.radius = 1 / fit.intercept;
  fit.alpha = -fit.slope * fit.radius - 1;
  double ss = 0;
  std::vector<double> cs;
  for (const auto& p : pts) {
    const double e = p.B - (fit.intercept + fit.slope * p.inv_two_m);
    ss += e * e;
    cs.push_back(p.C);
  }
  fit.rms_residual = std::sqrt(ss / n);
  fit.points = pts.size();
  std::nth_element(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(cs.size() / 2), cs.end());
  fit.median_C = cs[cs.size() / 2];
  return fit;
}

/// Fit over anchors in [lo, hi]; anchors with a negative ratio are skipped and counted.
template <class T>
domb_sykes_fit fit_domb_sykes(const coefficient_window<T>& w, long lo, long hi) {
  std::size_t skipped = 0;
  const auto pts = domb_sykes_points(w, lo, hi, &skipped);
  domb_sykes_fit fit = fit_domb_sykes_points(pts);
  fit.window_lo = lo;
  fit.window_hi = hi;
  fit.skipped = skipped;
  return fit;
}

/// Default window: the upper half of the anchors with a usable B.
template <class T>
domb_sykes_fit fit_domb_sykes(const coefficient_window<T>& w) {
  const auto pts = domb_sykes_points(w, 0, static_cast<long>(w.last_index()));
  if (pts.size() < 16) throw error(errc::too_few_points, std::to_string(pts.size()) + " usable B values");
  const std::size_t half = pts.size() / 2;
  return fit_domb_sykes(w, pts[pts.size() - half].two_m, pts.back().two_m);
}

/// Three-term seed taken from a Domb-Sykes fit.
inline three_term_options seed_from(const domb_sykes_fit& fit, three_term_options opt = {}) {
  opt.seed_radius = fit.radius;
  opt.seed_cos = fit.median_C;
  opt.seed_alpha = fit.alpha;
  return opt;
}

}  // namespace ilangevin
