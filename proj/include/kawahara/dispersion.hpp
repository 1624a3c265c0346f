#pragma once

#include <optional>

namespace kawahara {

/// Absolute band around 1/(1+N^2) inside which beta counts as resonant.
inline constexpr double kResonanceTol = 1e-9;

/// Coefficients of the unscaled steady equation
///   c u + alpha u_xx + beta u_4x + sigma u^2 = 0   on a period of length L.
struct RawParams {
  double alpha = 1.0;
  double beta = 0.0;
  double sigma = 1.0;
  double period = 0.0;
};

/// (beta, sigma) of the 2*pi-periodic, unit-alpha form
///   c u + u_xx + beta u_4x + sigma u^2 = 0.
/// Construction validates beta != 0, sigma != 0 and nonresonance.
class PhysicalParams {
 public:
  /// Throws Error(invalid_argument) or ResonanceError.
  static PhysicalParams make(double beta, double sigma);

  double beta() const noexcept { return beta_; }
  double sigma() const noexcept { return sigma_; }

  /// Same beta, different nonlinearity coefficient (used for sigma scaling checks).
  PhysicalParams with_sigma(double sigma) const { return make(beta_, sigma); }

 private:
  PhysicalParams(double beta, double sigma) : beta_(beta), sigma_(sigma) {}

  double beta_;
  double sigma_;
};

/// Rescales x -> (L/2pi) y, u -> (alpha L/2pi) v:
///   beta' = (beta/alpha)(2pi/L)^2,  sigma' = sigma (L/2pi)^3.
PhysicalParams normalize(const RawParams& raw);

/// Wave speed of the unscaled problem mapped to the normalized frame:
///   c' = (c/alpha)(L/2pi)^2.
double normalize_speed(double c, const RawParams& raw);

/// Returns the N > 1 with |beta - 1/(1+N^2)| <= kResonanceTol, if any.
std::optional<int> is_resonant(double beta);

/// Leading-order speed c0 = 1 - beta.
double c0(const PhysicalParams& params);

/// Omega(k) = -c k + k^3 - beta k^5 with an explicit frame speed.
double omega_at_speed(double k, double speed, double beta);

/// Omega(k) = -c0 k + k^3 - beta k^5.
double omega(double k, const PhysicalParams& params);

/// Omega'(k) = -c0 + 3k^2 - 5 beta k^4.
double group_velocity(double k, const PhysicalParams& params);

/// Omega''(k) = 6k - 20 beta k^3.
double group_velocity_slope(double k, const PhysicalParams& params);

}  // namespace kawahara
