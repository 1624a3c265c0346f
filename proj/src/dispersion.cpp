#include "kawahara/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kawahara/error.hpp"

namespace kawahara {

std::optional<int> is_resonant(double beta) {
  // Scan until 1/(1+N^2) drops below beta/2 (nothing further can match) or 1e-6.
  for (int n = 2;; ++n) {
    const double target = 1.0 / (1.0 + static_cast<double>(n) * n);
    if (std::abs(beta - target) <= kResonanceTol) return n;
    if (target < 0.5 * beta || target < 1e-6) break;
  }
  return std::nullopt;
}

PhysicalParams PhysicalParams::make(double beta, double sigma) {
  if (!std::isfinite(beta) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::invalid_argument, "beta and sigma must be finite");
  }
  if (beta == 0.0) throw Error(ErrorCode::invalid_argument, "beta must be nonzero");
  if (sigma == 0.0) throw Error(ErrorCode::invalid_argument, "sigma must be nonzero");
  if (auto n = is_resonant(beta)) {
    std::ostringstream msg;
    msg << "resonant: N=" << *n << " (beta=" << beta << " matches 1/(1+N^2))";
    throw ResonanceError(*n, msg.str());
  }
  return PhysicalParams(beta, sigma);
}

PhysicalParams normalize(const RawParams& raw) {
  if (raw.alpha == 0.0 || !std::isfinite(raw.alpha)) {
    throw Error(ErrorCode::invalid_argument, "alpha must be nonzero");
  }
  if (!(raw.period > 0.0) || !std::isfinite(raw.period)) {
    throw Error(ErrorCode::invalid_argument, "period L must be positive");
  }
  const double scale = raw.period / (2.0 * std::numbers::pi);  // L/2pi
  const double beta = raw.beta / raw.alpha / (scale * scale);
  const double sigma = raw.sigma * scale * scale * scale;
  return PhysicalParams::make(beta, sigma);
}

double normalize_speed(double c, const RawParams& raw) {
  const double scale = raw.period / (2.0 * std::numbers::pi);
  return c / raw.alpha * scale * scale;
}

double c0(const PhysicalParams& params) { return 1.0 - params.beta(); }

double omega_at_speed(double k, double speed, double beta) {
  const double k2 = k * k;
  return k * (-speed + k2 - beta * k2 * k2);
}

double omega(double k, const PhysicalParams& params) {
  return omega_at_speed(k, c0(params), params.beta());
}

double group_velocity(double k, const PhysicalParams& params) {
  const double k2 = k * k;
  return -c0(params) + 3.0 * k2 - 5.0 * params.beta() * k2 * k2;
}

double group_velocity_slope(double k, const PhysicalParams& params) {
  return 6.0 * k - 20.0 * params.beta() * k * k * k;
}

}  // namespace kawahara
