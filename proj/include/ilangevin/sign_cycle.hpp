#pragma once

// Sign-pattern periodicity of coefficient sequences.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "series.hpp"

namespace ilangevin {

struct sign_cycle {
  std::size_t cycle_length = 0;  // in units of the series stride
  std::size_t sign_changes = 0;  // cyclic sign flips within one period
  std::size_t start_index = 0;   // power of x at which the settled pattern begins
  std::string pattern;           // '+'/'-' for one period starting at start_index
  double mean_run = 0;           // mean length of complete runs after the start
};

namespace detail {

struct sign_runs {
  std::vector<std::size_t> start;   // position (in the sign sequence) of each run
  std::vector<std::size_t> length;  // the final run is truncated by the series order
};

inline sign_runs runs_of(const std::vector<int>& signs) {
  sign_runs r;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i == 0 || signs[i] != signs[i - 1]) {
      r.start.push_back(i);
      r.length.push_back(1);
    } else {
      ++r.length.back();
    }
  }
  return r;
}

}  // namespace detail

/// Settled sign cycle of a sequence of signs (+1/-1), with `powers[i]` the
/// power of x carrying signs[i].
///
/// The sign sequence of a series dominated by a conjugate singularity pair
/// consists of runs of alternating sign whose lengths take the two integer
/// neighbours of half the (generally irrational) period. A candidate period N
/// (in sequence units) is accepted from the earliest run start after which
/// every complete run has length floor(N/2) or ceil(N/2), the mean run length
/// is within 1/4 of N/2, and at least 3N signs remain. The smallest such N wins.
inline sign_cycle detect_sign_cycle(const std::vector<int>& signs, const std::vector<std::size_t>& powers) {
  if (signs.size() != powers.size()) throw error(errc::invalid_argument, "signs/powers size mismatch");
  const std::size_t total = signs.size();
  if (total < 6) throw error(errc::no_cycle_found, "fewer than 6 nonzero coefficients");
  const detail::sign_runs runs = detail::runs_of(signs);
  const std::size_t complete = runs.length.size() - 1;  // the last run may be cut off

  for (std::size_t n = 2; 3 * n <= total; ++n) {
    const std::size_t lo = n / 2;
    const std::size_t hi = (n + 1) / 2;
    // Walk back from the end while runs stay admissible.
    std::size_t first = complete;
    while (first > 0) {
      const std::size_t len = runs.length[first - 1];
      if (len != lo && len != hi) break;
      --first;
    }
    // Try successive run starts from the earliest admissible one.
    for (std::size_t r = first; r < complete; ++r) {
      const std::size_t begin = runs.start[r];
      if (total - begin < 3 * n) break;
      std::size_t sum = 0;
      for (std::size_t k = r; k < complete; ++k) sum += runs.length[k];
      const double mean = static_cast<double>(sum) / static_cast<double>(complete - r);
      if (std::abs(2 * mean - static_cast<double>(n)) > 0.5) continue;
      sign_cycle c;
      c.cycle_length = n;
      c.start_index = powers[begin];
      c.mean_run = mean;
      for (std::size_t k = 0; k < n && begin + k < total; ++k) c.pattern += signs[begin + k] > 0 ? '+' : '-';
      for (std::size_t k = 0; k < c.pattern.size(); ++k)
        if (c.pattern[k] != c.pattern[(k + 1) % c.pattern.size()]) ++c.sign_changes;
      return c;
    }
  }
  throw error(errc::no_cycle_found, "no admissible period up to " + std::to_string(total / 3));
}

/// Sign cycle of the nonzero coefficients of `s`, indexed along its parity stride.
inline sign_cycle find_sign_cycle(const rational_series& s) {
  std::vector<int> signs;
  std::vector<std::size_t> powers;
  for (std::size_t k = s.first_power(); k <= s.order(); k += s.stride()) {
    const int sg = sgn(s.at(k));
    if (sg == 0) continue;
    signs.push_back(sg);
    powers.push_back(k);
  }
  return detect_sign_cycle(signs, powers);
}

/// Argument in degrees of the dominant singularity implied by a cycle of
/// period N containing M complete oscillations: 360 M / N, halved for a
/// series in x^2. Folded into [0, 180].
inline double singularity_argument(double period, double oscillations, bool squared_variable) {
  if (!(period > 0)) throw error(errc::invalid_argument, "period must be positive");
  double a = std::fmod(360.0 * oscillations / period, 360.0);
  if (a > 180) a = 360 - a;
  return squared_variable ? a / 2 : a;
}

/// Each oscillation contributes two sign flips.
inline double singularity_argument(const sign_cycle& c, bool squared_variable) {
  return singularity_argument(static_cast<double>(c.cycle_length), c.sign_changes / 2.0, squared_variable);
}

}  // namespace ilangevin
