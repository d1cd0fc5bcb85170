#pragma once

// Minimal complex arithmetic usable with double and Boost/MPFR reals
// (std::complex is only specified for the built-in floating types).

#include <cmath>
#include <ostream>

namespace ilangevin {

template <class T>
struct complex_point {
  T re{0};
  T im{0};

  complex_point() = default;
  complex_point(T r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real promotion is intended
  complex_point(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  template <class U>
  static complex_point from(const complex_point<U>& z) {
    return {static_cast<T>(z.re), static_cast<T>(z.im)};
  }

  complex_point& operator+=(const complex_point& o) { re += o.re; im += o.im; return *this; }
  complex_point& operator-=(const complex_point& o) { re -= o.re; im -= o.im; return *this; }
  complex_point& operator*=(const complex_point& o) { return *this = *this * o; }
  complex_point& operator/=(const complex_point& o) { return *this = *this / o; }

  friend complex_point operator+(complex_point a, const complex_point& b) { return a += b; }
  friend complex_point operator-(complex_point a, const complex_point& b) { return a -= b; }
  friend complex_point operator-(const complex_point& a) { return {-a.re, -a.im}; }
  friend complex_point operator*(const complex_point& a, const complex_point& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend complex_point operator*(const complex_point& a, const T& s) { return {a.re * s, a.im * s}; }
  friend complex_point operator*(const T& s, const complex_point& a) { return {a.re * s, a.im * s}; }
  friend complex_point operator/(const complex_point& a, const T& s) { return {a.re / s, a.im / s}; }
  friend complex_point operator/(const complex_point& a, const complex_point& b) {
    using std::abs;
    // Smith's algorithm
    if (abs(b.re) >= abs(b.im)) {
      const T q = b.im / b.re;
      const T d = b.re + b.im * q;
      return {(a.re + a.im * q) / d, (a.im - a.re * q) / d};
    }
    const T q = b.re / b.im;
    const T d = b.re * q + b.im;
    return {(a.re * q + a.im) / d, (a.im * q - a.re) / d};
  }
  friend bool operator==(const complex_point& a, const complex_point& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const complex_point& z) {
    return os << '(' << z.re << ", " << z.im << ')';
  }
};

template <class T>
complex_point<T> conj(const complex_point<T>& z) { return {z.re, -z.im}; }

template <class T>
T norm2(const complex_point<T>& z) { return z.re * z.re + z.im * z.im; }

template <class T>
T abs(const complex_point<T>& z) {
  using std::abs;
  using std::sqrt;
  const T a = abs(z.re), b = abs(z.im);
  const T big = a > b ? a : b;
  if (big == 0) return big;
  const T p = a / big, q = b / big;
  return big * sqrt(p * p + q * q);
}

template <class T>
T arg(const complex_point<T>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class T>
complex_point<T> exp(const complex_point<T>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  const T e = exp(z.re);
  return {e * cos(z.im), e * sin(z.im)};
}

template <class T>
complex_point<T> sinh(const complex_point<T>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}

template <class T>
complex_point<T> cosh(const complex_point<T>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}

/// Principal square root (branch cut on the negative real axis).
template <class T>
complex_point<T> sqrt(const complex_point<T>& z) {
  using std::abs;
  using std::sqrt;
  if (z.re == 0 && z.im == 0) return {T(0), T(0)};
  const T m = abs(z);
  if (z.re >= 0) {
    const T t = sqrt((m + z.re) / 2);
    return {t, z.im / (2 * t)};
  }
  T t = sqrt((m - z.re) / 2);
  if (z.im < 0) t = -t;
  return {z.im / (2 * t), t};
}

template <class T>
complex_point<T> log(const complex_point<T>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

/// Principal fourth root: argument in (-pi/4, pi/4].
template <class T>
complex_point<T> fourth_root(const complex_point<T>& z) { return sqrt(sqrt(z)); }

}  // namespace ilangevin
