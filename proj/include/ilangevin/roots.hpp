#pragma once

// Polynomial roots. Coefficients are stored lowest power first.
//
// Exact-rational polynomials are solved by Aberth-Ehrlich iteration in MPFR,
// doubling the working precision until two successive root sets agree;
// double-precision polynomials use Aberth in double. The Eigen
// companion-matrix eigenvalue solver is the fallback for both.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "precision.hpp"
#include "rational.hpp"

namespace ilangevin {

struct root_options {
  unsigned start_bits = 192;
  unsigned max_bits = 8192;
  double agreement = 1e-18;  // relative change between precision levels that counts as settled
  int max_iter = 800;
};

struct root_report {
  std::vector<complex_point<double>> roots;
  std::vector<double> backward_error;  // |p(z)| / sum |c_k| |z|^k at the working precision
  unsigned bits = 53;                  // working precision that produced the roots
  bool fallback = false;               // companion-matrix eigenvalues were used
};

namespace detail {

inline std::size_t trimmed_degree(std::size_t n, const auto& is_zero) {
  std::size_t d = n - 1;
  while (d > 0 && is_zero(d)) --d;
  return d;
}

// Initial guesses on circles read off the upper convex hull of (k, log|c_k|).
inline std::vector<complex_point<double>> newton_polygon_guesses(const std::vector<double>& logc) {
  const std::size_t n = logc.size() - 1;
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    if (!std::isfinite(logc[k])) continue;
    while (hull.size() >= 2) {
      const std::size_t i = hull[hull.size() - 2], j = hull.back();
      const double cross = (static_cast<double>(j) - static_cast<double>(i)) * (logc[k] - logc[i]) -
                           (logc[j] - logc[i]) * (static_cast<double>(k) - static_cast<double>(i));
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<complex_point<double>> z;
  z.reserve(n);
  const double sigma = 0.7;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t i = hull[h], j = hull[h + 1];
    const std::size_t m = j - i;
    const double u = std::exp((logc[i] - logc[j]) / static_cast<double>(m));
    for (std::size_t q = 0; q < m; ++q) {
      const double ang = 2 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(m) +
                         2 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(n) + sigma;
      z.push_back({u * std::cos(ang), u * std::sin(ang)});
    }
  }
  return z;
}

template <class T>
void horner2(const std::vector<T>& c, const complex_point<T>& z, complex_point<T>& p, complex_point<T>& dp) {
  const std::size_t n = c.size() - 1;
  p = complex_point<T>(c[n]);
  dp = complex_point<T>(T(0));
  for (std::size_t k = n; k-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += c[k];
  }
}

template <class T>
T abs_poly(const std::vector<T>& c, const T& r) {
  using std::abs;
  T s = 0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * r + abs(c[k]);
  return s;
}

// Aberth-Ehrlich in Gauss-Seidel form. A root is frozen once its correction
// or its backward error drops below tol. Returns false without convergence.
template <class T>
bool aberth(const std::vector<T>& c, std::vector<complex_point<T>>& z, const T& tol, int max_iter) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  complex_point<T> p, dp;
  for (int it = 0; it < max_iter; ++it) {
    std::size_t active = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      ++active;
      horner2(c, z[i], p, dp);
      if ((p.re == 0 && p.im == 0) || abs(p) <= tol * abs_poly(c, abs(z[i]))) {
        done[i] = true;
        continue;
      }
      const complex_point<T> ratio = p / dp;
      complex_point<T> s(T(0));
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += complex_point<T>(T(1)) / (z[i] - z[j]);
      const complex_point<T> w = ratio / (complex_point<T>(T(1)) - ratio * s);
      z[i] -= w;
      if (abs(w) <= tol * abs(z[i])) done[i] = true;
    }
    if (active == 0) return true;
  }
  return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

inline std::vector<complex_point<double>> companion_eigenvalues(const std::vector<double>& c) {
  const std::size_t n = c.size() - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1;
  for (std::size_t i = 0; i < n; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) throw error(errc::no_convergence, "companion eigenvalues failed");
  std::vector<complex_point<double>> r;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    r.push_back({es.eigenvalues()[i].real(), es.eigenvalues()[i].imag()});
  return r;
}

// Largest relative distance from a root in `a` to the nearest root in `b`.
template <class T>
double set_distance(const std::vector<complex_point<T>>& a, const std::vector<complex_point<T>>& b) {
  double worst = 0;
  for (const auto& x : a) {
    double best = std::numeric_limits<double>::infinity();
    const double scale = std::max(1.0, static_cast<double>(abs(x)));
    for (const auto& y : b) best = std::min(best, static_cast<double>(abs(x - y)) / scale);
    worst = std::max(worst, best);
  }
  return worst;
}

// Roots pinned to zero by leading zero coefficients are split off.
inline std::size_t zero_root_count(std::size_t n, const auto& is_zero) {
  std::size_t k = 0;
  while (k < n && is_zero(k)) ++k;
  return k;
}

class precision_guard {
 public:
  explicit precision_guard(unsigned bits) : saved_(variable_real::default_precision()) {
    variable_real::default_precision(bits_to_digits(bits));
  }
  ~precision_guard() { variable_real::default_precision(saved_); }
  precision_guard(const precision_guard&) = delete;
  precision_guard& operator=(const precision_guard&) = delete;

  static unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1; }

 private:
  unsigned saved_;
};

}  // namespace detail

/// Roots of a double-coefficient polynomial.
inline root_report roots(const std::vector<double>& coeffs) {
  if (coeffs.size() < 2) throw error(errc::invalid_argument, "degree must be >= 1");
  const std::size_t deg = detail::trimmed_degree(coeffs.size(), [&](std::size_t k) { return coeffs[k] == 0; });
  if (deg == 0) throw error(errc::invalid_argument, "degree must be >= 1");
  const std::size_t z0 = detail::zero_root_count(deg, [&](std::size_t k) { return coeffs[k] == 0; });
  std::vector<double> c(coeffs.begin() + static_cast<std::ptrdiff_t>(z0),
                        coeffs.begin() + static_cast<std::ptrdiff_t>(deg + 1));
  root_report rep;
  rep.roots.assign(z0, complex_point<double>(0.0));
  if (c.size() > 1) {
    std::vector<double> logc(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) logc[k] = c[k] == 0 ? -INFINITY : std::log(std::abs(c[k]));
    auto z = detail::newton_polygon_guesses(logc);
    if (!detail::aberth(c, z, 4 * std::numeric_limits<double>::epsilon(), 500)) {
      z = detail::companion_eigenvalues(c);
      rep.fallback = true;
    }
    rep.roots.insert(rep.roots.end(), z.begin(), z.end());
  }
  for (const auto& r : rep.roots) {
    complex_point<double> p, dp;
    detail::horner2(coeffs, r, p, dp);
    const double scale = detail::abs_poly(coeffs, abs(r));
    rep.backward_error.push_back(scale == 0 ? 0 : abs(p) / scale);
  }
  return rep;
}

/// Roots of an exact-rational polynomial; precision is raised until the root
/// set is stable to `opt.agreement`.
inline root_report roots(const std::vector<big_rational>& coeffs, const root_options& opt = {}) {
  if (coeffs.size() < 2) throw error(errc::invalid_argument, "degree must be >= 1");
  const std::size_t deg = detail::trimmed_degree(coeffs.size(), [&](std::size_t k) { return coeffs[k] == 0; });
  if (deg == 0) throw error(errc::invalid_argument, "degree must be >= 1");
  const std::size_t z0 = detail::zero_root_count(deg, [&](std::size_t k) { return coeffs[k] == 0; });
  const std::vector<big_rational> ce(coeffs.begin() + static_cast<std::ptrdiff_t>(z0),
                                     coeffs.begin() + static_cast<std::ptrdiff_t>(deg + 1));

  root_report rep;
  if (ce.size() == 1) {
    rep.roots.assign(z0, complex_point<double>(0.0));
    rep.backward_error.assign(z0, 0.0);
    return rep;
  }

  std::vector<complex_point<double>> guess;
  {
    detail::precision_guard g(64);
    std::vector<double> logc(ce.size());
    for (std::size_t k = 0; k < ce.size(); ++k) {
      if (ce[k] == 0) {
        logc[k] = -INFINITY;
        continue;
      }
      const variable_real v = abs(from_rational<variable_real>(ce[k]));
      logc[k] = static_cast<double>(log(v));
    }
    guess = detail::newton_polygon_guesses(logc);
  }

  std::vector<complex_point<double>> prev;
  bool have_prev = false;
  std::vector<std::pair<std::string, std::string>> carry;  // previous roots as decimal strings
  for (unsigned bits = opt.start_bits; bits <= opt.max_bits; bits *= 2) {
    detail::precision_guard g(bits);
    std::vector<variable_real> c(ce.size());
    for (std::size_t k = 0; k < ce.size(); ++k) c[k] = from_rational<variable_real>(ce[k]);
    std::vector<complex_point<variable_real>> z(guess.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (!carry.empty()) z[i] = {variable_real(carry[i].first), variable_real(carry[i].second)};
      else z[i] = {variable_real(guess[i].re), variable_real(guess[i].im)};
    }
    const variable_real tol = ldexp(variable_real(1), -static_cast<int>(bits) + 16);
    const bool ok = detail::aberth(c, z, tol, opt.max_iter);
    std::vector<complex_point<double>> cur(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) cur[i] = {static_cast<double>(z[i].re), static_cast<double>(z[i].im)};
    carry.clear();
    for (const auto& r : z) carry.emplace_back(r.re.str(0, std::ios_base::scientific), r.im.str(0, std::ios_base::scientific));
    if (ok && have_prev && detail::set_distance(cur, prev) <= opt.agreement &&
        detail::set_distance(prev, cur) <= opt.agreement) {
      rep.roots.assign(z0, complex_point<double>(0.0));
      rep.backward_error.assign(z0, 0.0);
      for (const auto& r : z) {
        complex_point<variable_real> p, dp;
        detail::horner2(c, r, p, dp);
        const variable_real scale = detail::abs_poly(c, abs(r));
        rep.roots.push_back({static_cast<double>(r.re), static_cast<double>(r.im)});
        rep.backward_error.push_back(scale == 0 ? 0.0 : static_cast<double>(abs(p) / scale));
      }
      rep.bits = bits;
      return rep;
    }
    prev = cur;
    have_prev = ok;
  }
  // Companion fallback in double.
  std::vector<double> cd(ce.size());
  for (std::size_t k = 0; k < ce.size(); ++k) cd[k] = to_double(ce[k]);
  rep = roots(cd);
  rep.roots.insert(rep.roots.begin(), z0, complex_point<double>(0.0));
  rep.backward_error.insert(rep.backward_error.begin(), z0, 0.0);
  rep.fallback = true;
  return rep;
}

}  // namespace ilangevin
