#pragma once

// Exact rationals (GMP) and correctly rounded export to floating types.

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <string>
#include <type_traits>

#include "error.hpp"

namespace ilangevin {

/// Arbitrary-precision rational kept in lowest terms with a positive denominator.
/// GMP maintains the invariant for every arithmetic result; construction from a
/// raw numerator/denominator pair must go through make_rational().
using big_rational = mpq_class;
using big_integer = mpz_class;

inline big_rational make_rational(const big_integer& num, const big_integer& den) {
  if (den == 0) throw error(errc::invalid_argument, "zero denominator");
  big_rational q(num, den);
  q.canonicalize();
  return q;
}

inline big_rational make_rational(long num, long den = 1) {
  return make_rational(big_integer(num), big_integer(den));
}

/// Parse "p/q" or "p"; result is canonical.
inline big_rational parse_rational(const std::string& text) {
  big_rational q;
  if (q.set_str(text, 10) != 0) throw error(errc::invalid_argument, "not a rational: " + text);
  if (q.get_den() == 0) throw error(errc::invalid_argument, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string numerator_string(const big_rational& q) { return q.get_num().get_str(); }
inline std::string denominator_string(const big_rational& q) { return q.get_den().get_str(); }

inline std::size_t bit_size(const big_rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

/// Round-to-nearest conversion (GMP's mpq_get_d truncates, so go through MPFR).
inline double to_double(const big_rational& q) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

template <class T>
struct rational_converter;

template <>
struct rational_converter<double> {
  static double convert(const big_rational& q) { return to_double(q); }
};

template <unsigned Digits, boost::multiprecision::mpfr_allocation_type Alloc,
          boost::multiprecision::expression_template_option ET>
struct rational_converter<
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits, Alloc>, ET>> {
  using value_type =
      boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits, Alloc>, ET>;
  static value_type convert(const big_rational& q) {
    value_type v;
    mpfr_set_q(v.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return v;
  }
};

/// Correctly rounded conversion to double or any MPFR-backed type (at that
/// type's current precision).
template <class T>
T from_rational(const big_rational& q) {
  return rational_converter<T>::convert(q);
}

}  // namespace ilangevin
