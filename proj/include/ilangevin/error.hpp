#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ilangevin {

enum class errc {
  zero_linear_coefficient,
  insufficient_order,
  no_cycle_found,
  no_convergence,
  singular_jacobian,
  negative_ratio,
  zero_coefficient,
  too_few_points,
  near_pole,
  quadrant_escape,
  at_singularity,
  domain_error,
  invalid_argument,
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::zero_linear_coefficient: return "ZeroLinearCoefficient";
    case errc::insufficient_order: return "InsufficientOrder";
    case errc::no_cycle_found: return "NoCycleFound";
    case errc::no_convergence: return "NoConvergence";
    case errc::singular_jacobian: return "SingularJacobian";
    case errc::negative_ratio: return "NegativeRatio";
    case errc::zero_coefficient: return "ZeroCoefficient";
    case errc::too_few_points: return "TooFewPoints";
    case errc::near_pole: return "NearPole";
    case errc::quadrant_escape: return "QuadrantEscape";
    case errc::at_singularity: return "AtSingularity";
    case errc::domain_error: return "DomainError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Numerical failure raised by every module; `code()` identifies the condition.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ilangevin
