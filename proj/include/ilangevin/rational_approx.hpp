#pragma once

// Continued fractions and Padé approximants of exact series, with pole/zero
// maps of their convergents.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "precision.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "series.hpp"

namespace ilangevin {

using rational_poly = std::vector<big_rational>;  // ascending powers

/// numerator / denominator in x with denominator(0) = 1.
struct rational_function {
  rational_poly numerator{big_rational(0)};
  rational_poly denominator{big_rational(1)};
  bool deflated = false;  // Padé system was singular and a lower-order solution was returned

  [[nodiscard]] std::size_t numerator_degree() const { return degree(numerator); }
  [[nodiscard]] std::size_t denominator_degree() const { return degree(denominator); }

  static std::size_t degree(const rational_poly& p) {
    std::size_t d = p.size() - 1;
    while (d > 0 && p[d] == 0) --d;
    return d;
  }
};

/// Exact Taylor re-expansion through x^order.
inline rational_series expand(const rational_function& f, std::size_t order) {
  const auto inv = detail::reciprocal(f.denominator, order);
  return rational_series(detail::mul(f.numerator, inv, order), series_parity::none);
}

template <class T>
complex_point<T> evaluate(const rational_poly& p, const complex_point<T>& z) {
  complex_point<T> s(T(0));
  for (std::size_t k = p.size(); k-- > 0;) {
    s = s * z;
    s.re += from_rational<T>(p[k]);
  }
  return s;
}

template <class T>
T evaluate(const rational_function& f, const T& x) {
  T n = 0, d = 0;
  for (std::size_t k = f.numerator.size(); k-- > 0;) n = n * x + from_rational<T>(f.numerator[k]);
  for (std::size_t k = f.denominator.size(); k-- > 0;) d = d * x + from_rational<T>(f.denominator[k]);
  return n / d;
}

/// C-fraction a_0 / (1 + a_1 u / (1 + a_2 u / (1 + ...))) of a series
/// s(x) = x^prefactor_power * g(u), u = x^variable_power.
struct continued_fraction {
  std::vector<big_rational> partial_coefficients;
  std::size_t prefactor_power = 0;
  std::size_t variable_power = 1;
  bool terminated = false;  // a partial numerator vanished before the requested depth

  [[nodiscard]] std::size_t depth() const noexcept { return partial_coefficients.size(); }
};

namespace detail {

inline void remove_content(std::vector<big_integer>& a, std::vector<big_integer>& b) {
  big_integer g = 0;
  for (const auto* v : {&a, &b}) {
    for (const auto& x : *v) {
      if (x == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g <= 1) return;
  for (auto* v : {&a, &b})
    for (auto& x : *v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Coefficients of g(u) from s: strip the x^prefactor and sample every
// variable_power-th coefficient.
inline std::vector<big_rational> reduced_coefficients(const rational_series& s, std::size_t& pre, std::size_t& vp) {
  pre = 0;
  vp = 1;
  if (s.parity() == series_parity::even) vp = 2;
  if (s.parity() == series_parity::odd) {
    vp = 2;
    pre = 1;
  }
  std::vector<big_rational> c;
  for (std::size_t k = pre; k <= s.order(); k += vp) c.push_back(s[k]);
  return c;
}

}  // namespace detail

/// Viskovatov expansion g_k = a_k / (1 + u g_{k+1}) in fraction-free integer
/// arithmetic. Needs `depth` coefficients of g(u).
inline continued_fraction series_to_cf(const rational_series& s, std::size_t depth) {
  continued_fraction cf;
  const auto c = detail::reduced_coefficients(s, cf.prefactor_power, cf.variable_power);
  if (c.size() < depth) throw error(errc::insufficient_order, "need " + std::to_string(depth) + " coefficients in u");
  if (depth == 0) return cf;
  if (c[0] == 0) throw error(errc::zero_coefficient, "leading coefficient vanishes after parity normalization");

  big_integer l = 1;
  for (std::size_t k = 0; k < depth; ++k) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[k].get_den_mpz_t());
  std::vector<big_integer> num(depth), den(depth + 1);
  for (std::size_t k = 0; k < depth; ++k) num[k] = c[k].get_num() * (l / c[k].get_den());
  den[0] = l;

  for (std::size_t k = 0; k < depth; ++k) {
    if (num[0] == 0) {
      cf.terminated = true;
      break;
    }
    cf.partial_coefficients.push_back(make_rational(num[0], den[0]));
    if (k + 1 == depth) break;
    std::vector<big_integer> nn(num.size() - 1);
    for (std::size_t i = 0; i + 1 < num.size(); ++i) nn[i] = num[0] * den[i + 1] - den[0] * num[i + 1];
    std::vector<big_integer> dd(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) dd[i] = den[0] * num[i];
    detail::remove_content(nn, dd);
    num = std::move(nn);
    den = std::move(dd);
  }
  return cf;
}

/// k-th convergent (first k partial coefficients) as an exact rational function of x.
inline rational_function cf_convergent(const continued_fraction& cf, std::size_t k) {
  if (k == 0 || k > cf.depth()) throw error(errc::invalid_argument, "convergent index out of range");
  // Tail-first evaluation R_j = a_j / (1 + u R_{j+1}) with integer P/Q.
  std::vector<big_integer> p{cf.partial_coefficients[k - 1].get_num()};
  std::vector<big_integer> q{cf.partial_coefficients[k - 1].get_den()};
  for (std::size_t j = k - 1; j-- > 0;) {
    const big_rational& a = cf.partial_coefficients[j];
    std::vector<big_integer> qn(std::max(q.size(), p.size() + 1));
    for (std::size_t i = 0; i < q.size(); ++i) qn[i] += q[i];
    for (std::size_t i = 0; i < p.size(); ++i) qn[i + 1] += p[i];
    for (auto& x : qn) x *= a.get_den();
    std::vector<big_integer> pn(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) pn[i] = q[i] * a.get_num();
    detail::remove_content(pn, qn);
    p = std::move(pn);
    q = std::move(qn);
  }
  rational_function f;
  const std::size_t vp = cf.variable_power, pre = cf.prefactor_power;
  f.numerator.assign(pre + vp * (p.size() - 1) + 1, big_rational(0));
  f.denominator.assign(vp * (q.size() - 1) + 1, big_rational(0));
  const big_integer q0 = q[0];
  for (std::size_t i = 0; i < p.size(); ++i) f.numerator[pre + vp * i] = make_rational(p[i], q0);
  for (std::size_t i = 0; i < q.size(); ++i) f.denominator[vp * i] = make_rational(q[i], q0);
  return f;
}

/// [L/M] Padé approximant: denominator from the exact linear system, then numerator.
inline rational_function pade(const rational_series& s, std::size_t L, std::size_t M) {
  if (s.order() < L + M) throw error(errc::insufficient_order, "need L+M+1 coefficients");
  for (std::size_t m = M + 1; m-- > 0;) {
    // sum_{j=1..m} q_j c_{k-j} = -c_k for k = L+1..L+m
    std::vector<std::vector<big_rational>> A(m, std::vector<big_rational>(m + 1));
    auto c = [&](long k) { return k < 0 ? big_rational(0) : s[static_cast<std::size_t>(k)]; };
    for (std::size_t i = 0; i < m; ++i) {
      const long k = static_cast<long>(L + 1 + i);
      for (std::size_t j = 0; j < m; ++j) A[i][j] = c(k - static_cast<long>(j + 1));
      A[i][m] = -c(k);
    }
    bool singular = false;
    for (std::size_t col = 0; col < m && !singular; ++col) {
      std::size_t piv = col;
      while (piv < m && A[piv][col] == 0) ++piv;
      if (piv == m) {
        singular = true;
        break;
      }
      std::swap(A[piv], A[col]);
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col || A[r][col] == 0) continue;
        const big_rational f = A[r][col] / A[col][col];
        for (std::size_t j = col; j <= m; ++j) A[r][j] -= f * A[col][j];
      }
    }
    if (singular) continue;
    rational_function out;
    out.deflated = m != M;
    out.denominator.assign(m + 1, big_rational(0));
    out.denominator[0] = 1;
    for (std::size_t j = 0; j < m; ++j) out.denominator[j + 1] = A[j][m] / A[j][j];
    out.numerator.assign(L + 1, big_rational(0));
    for (std::size_t k = 0; k <= L; ++k)
      for (std::size_t j = 0; j <= std::min(k, m); ++j) out.numerator[k] += out.denominator[j] * s[k - j];
    return out;
  }
  throw error(errc::invalid_argument, "no Padé solution");
}

/// Degree of gcd(numerator, denominator) over Q (Euclid with monic remainders).
inline std::size_t common_factor_degree(const rational_function& f) {
  auto trim = [](rational_poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
  };
  rational_poly a = trim(f.numerator), b = trim(f.denominator);
  if (a.size() < b.size()) std::swap(a, b);
  while (!(b.size() == 1 && b[0] == 0)) {
    if (b.size() == 1) return 0;
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
      const big_rational q = a.back() / b.back();
      const std::size_t sh = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= q * b[i];
      a = trim(a);
      if (a.size() == 1 && a[0] == 0) break;
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
    const big_rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a.size() - 1;
}

struct pz_point {
  complex_point<double> z;
  int multiplicity = 1;
  double residue = 0;  // |residue| for poles, 0 for zeros
};

struct pole_zero_set {
  std::vector<pz_point> poles;
  std::vector<pz_point> zeros;
  bool filtered = false;
  std::size_t truncation_depth = 0;
  unsigned working_bits = 0;
  double pair_tol = 0, residue_tol = 0;  // filter parameters used (0 when unfiltered)
  std::size_t removed_poles = 0, removed_zeros = 0;
};

namespace detail {

// Roots in x of a polynomial in x, solving in x^v when only multiples of v
// occur above the lowest power.
inline root_report roots_in_x(const rational_poly& p, const root_options& opt) {
  std::size_t z0 = 0;
  while (z0 + 1 < p.size() && p[z0] == 0) ++z0;
  std::size_t top = p.size() - 1;
  while (top > z0 && p[top] == 0) --top;
  root_report out;
  out.roots.assign(z0, complex_point<double>(0.0));
  out.backward_error.assign(z0, 0.0);
  if (top == z0) return out;
  bool even = true;
  for (std::size_t k = z0; k <= top; ++k)
    if ((k - z0) % 2 == 1 && p[k] != 0) even = false;
  rational_poly q;
  for (std::size_t k = z0; k <= top; k += even ? 2 : 1) q.push_back(p[k]);
  const root_report r = roots(q, opt);
  out.bits = r.bits;
  out.fallback = r.fallback;
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    if (even) {
      const auto s = sqrt(r.roots[i]);
      out.roots.push_back(s);
      out.roots.push_back(-s);
      out.backward_error.push_back(r.backward_error[i]);
      out.backward_error.push_back(r.backward_error[i]);
    } else {
      out.roots.push_back(r.roots[i]);
      out.backward_error.push_back(r.backward_error[i]);
    }
  }
  return out;
}

inline void assign_multiplicity(std::vector<pz_point>& pts, double tol) {
  for (auto& a : pts) {
    int m = 0;
    for (const auto& b : pts)
      if (abs(a.z - b.z) <= tol * std::max(1.0, abs(a.z))) ++m;
    a.multiplicity = m;
  }
}

template <class T>
complex_point<T> eval_deriv(const rational_poly& p, const complex_point<T>& z) {
  complex_point<T> s(T(0));
  for (std::size_t k = p.size(); k-- > 1;) {
    s = s * z;
    s.re += from_rational<T>(p[k]) * T(static_cast<double>(k));
  }
  return s;
}

}  // namespace detail

/// Poles and zeros of a rational function, with |residue| at each pole.
inline pole_zero_set poles_and_zeros(const rational_function& f, std::size_t depth = 0, const root_options& opt = {}) {
  pole_zero_set out;
  out.truncation_depth = depth;
  if (rational_function::degree(f.denominator) > 0) {
    const auto rp = detail::roots_in_x(f.denominator, opt);
    out.working_bits = rp.bits;
    detail::precision_guard g(std::max(rp.bits, 128u));
    for (const auto& z : rp.roots) {
      const complex_point<variable_real> zm{variable_real(z.re), variable_real(z.im)};
      const auto num = evaluate(f.numerator, zm);
      const auto dq = detail::eval_deriv(f.denominator, zm);
      out.poles.push_back({z, 1, static_cast<double>(abs(num) / abs(dq))});
    }
  }
  if (rational_function::degree(f.numerator) > 0 || f.numerator[0] == 0) {
    bool allzero = std::all_of(f.numerator.begin(), f.numerator.end(), [](const big_rational& x) { return x == 0; });
    if (!allzero && rational_function::degree(f.numerator) > 0) {
      const auto rz = detail::roots_in_x(f.numerator, opt);
      out.working_bits = std::max(out.working_bits, rz.bits);
      for (const auto& z : rz.roots) out.zeros.push_back({z, 1, 0.0});
    }
  }
  detail::assign_multiplicity(out.poles, 1e-8);
  detail::assign_multiplicity(out.zeros, 1e-8);
  return out;
}

struct froissart_options {
  double pair_tol = 1e-6;      // times |pole|, or max |pole| when scale_by_max_pole
  double residue_tol = 1e-10;  // times max |residue|
  bool scale_by_max_pole = false;
};

/// Drop pole-zero pairs closer than pair_tol * |pole| and poles whose
/// residue is below residue_tol * max|residue| (with their nearest zero).
/// A non-real point survives only together with its conjugate.
inline pole_zero_set filter_froissart(const pole_zero_set& in, const froissart_options& opt = {}) {
  pole_zero_set out = in;
  out.filtered = true;
  out.pair_tol = opt.pair_tol;
  out.residue_tol = opt.residue_tol;
  double max_pole = 0, max_res = 0;
  for (const auto& p : in.poles) {
    max_pole = std::max(max_pole, abs(p.z));
    max_res = std::max(max_res, p.residue);
  }
  std::vector<bool> kill_p(in.poles.size(), false), kill_z(in.zeros.size(), false);
  for (std::size_t i = 0; i < in.poles.size(); ++i) {
    std::size_t best = in.zeros.size();
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < in.zeros.size(); ++j) {
      if (kill_z[j]) continue;
      const double d = abs(in.poles[i].z - in.zeros[j].z);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    const double dist_tol = opt.pair_tol * (opt.scale_by_max_pole ? max_pole : abs(in.poles[i].z));
    const bool close = best < in.zeros.size() && bd < dist_tol;
    const bool weak = in.poles[i].residue < opt.residue_tol * max_res;
    if (close || weak) {
      kill_p[i] = true;
      if (best < in.zeros.size() && (close || bd < 1e-3 * std::max(1.0, abs(in.poles[i].z)))) kill_z[best] = true;
    }
  }
  auto conj_closed = [](const std::vector<pz_point>& v, std::vector<bool>& kill) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (kill[i] || v[i].z.im == 0) continue;
      const auto c = conj(v[i].z);
      std::size_t best = v.size();
      double bd = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (j == i) continue;
        const double d = abs(v[j].z - c);
        if (d < bd) {
          bd = d;
          best = j;
        }
      }
      if (best < v.size() && kill[best]) kill[i] = true;
    }
  };
  conj_closed(in.poles, kill_p);
  conj_closed(in.zeros, kill_z);
  out.poles.clear();
  out.zeros.clear();
  for (std::size_t i = 0; i < in.poles.size(); ++i)
    if (!kill_p[i]) out.poles.push_back(in.poles[i]);
    else ++out.removed_poles;
  for (std::size_t j = 0; j < in.zeros.size(); ++j)
    if (!kill_z[j]) out.zeros.push_back(in.zeros[j]);
    else ++out.removed_zeros;
  return out;
}

/// Largest distance from a point of `pts` to its conjugate's nearest match.
inline double conjugate_defect(const std::vector<pz_point>& pts) {
  double worst = 0;
  for (const auto& a : pts) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : pts) best = std::min(best, abs(b.z - conj(a.z)));
    worst = std::max(worst, best / std::max(1.0, abs(a.z)));
  }
  return worst;
}

}  // namespace ilangevin
