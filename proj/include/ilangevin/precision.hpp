#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace ilangevin {

/// 50 decimal digits; the extended working type for complex evaluation.
using extended_real = boost::multiprecision::mpfr_float_50;

/// Runtime-precision MPFR real used by the polynomial root finder.
using variable_real = boost::multiprecision::mpfr_float;

enum class precision_mode { standard, extended };

constexpr std::string_view to_string(precision_mode m) noexcept {
  return m == precision_mode::standard ? "standard" : "extended";
}

inline precision_mode parse_precision_mode(std::string_view s) {
  if (s == "standard" || s == "double") return precision_mode::standard;
  if (s == "extended") return precision_mode::extended;
  throw error(errc::invalid_argument, "unknown precision mode '" + std::string(s) + "'");
}

/// Honors ILANGEVIN_PRECISION when set, falls back to `fallback` otherwise.
inline precision_mode default_precision_mode(precision_mode fallback = precision_mode::extended) {
  if (const char* env = std::getenv("ILANGEVIN_PRECISION"); env != nullptr && *env != '\0')
    return parse_precision_mode(env);
  return fallback;
}

template <class T>
inline T unit_roundoff() {
  return std::numeric_limits<T>::epsilon() / 2;
}

struct precision_context {
  precision_mode mode = precision_mode::extended;
  double newton_tol = 1e-40;  // relative step size at which Newton stops
  int max_iter = 100;

  static precision_context standard() { return {precision_mode::standard, 2e-15, 100}; }
  static precision_context extended() { return {precision_mode::extended, 1e-40, 100}; }
  static precision_context for_mode(precision_mode m) {
    return m == precision_mode::standard ? standard() : extended();
  }

  /// newton_tol must sit at least an order of magnitude above the mode's roundoff.
  void validate() const {
    const double u = mode == precision_mode::standard
                         ? unit_roundoff<double>()
                         : static_cast<double>(unit_roundoff<extended_real>());
    if (!(newton_tol >= 10 * u)) throw error(errc::invalid_argument, "newton_tol below 10 ulp");
    if (max_iter < 1) throw error(errc::invalid_argument, "max_iter must be positive");
  }
};

}  // namespace ilangevin
