#include "kawahara/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kawahara/error.hpp"

namespace kawahara {

namespace {

constexpr double kDegenerateTol = 1e-9;

void require_nonzero(double value, const char* what, const PhysicalParams& params) {
  if (std::abs(value) < kDegenerateTol) {
    std::ostringstream msg;
    msg << "degenerate Stokes expansion: " << what << " = " << value << " at beta=" << params.beta();
    throw Error(ErrorCode::degenerate, msg.str());
  }
}

}  // namespace

std::array<double, 4> StokesExpansion::fourier(double eps) const {
  const double e2 = eps * eps;
  return {e2 * u2_0, 0.5 * eps, e2 * u2_2, e2 * eps * u3_3};
}

double StokesExpansion::mode(int p, double eps) const {
  const int q = p < 0 ? -p : p;
  if (q > 3) return 0.0;
  return fourier(eps)[static_cast<std::size_t>(q)];
}

StokesExpansion stokes_expansion(const PhysicalParams& params) {
  const double sigma = params.sigma();
  const double speed0 = c0(params);
  const double omega2 = omega(2.0, params);
  const double omega3 = omega(3.0, params);
  require_nonzero(speed0, "c0", params);
  require_nonzero(omega2, "Omega(2)", params);
  require_nonzero(omega3, "Omega(3)", params);

  StokesExpansion out;
  out.c0 = speed0;
  out.c2 = sigma * sigma * (1.0 / speed0 - 1.0 / omega2);
  out.u2_0 = -sigma / (2.0 * speed0);
  out.u2_2 = sigma / (2.0 * omega2);
  out.u3_3 = 3.0 * sigma * sigma / (2.0 * omega2 * omega3);
  return out;
}

double eval_stokes(const StokesExpansion& wave, double x, double eps) {
  const double e2 = eps * eps;
  return eps * std::cos(x) + e2 * (wave.u2_0 + 2.0 * wave.u2_2 * std::cos(2.0 * x)) +
         e2 * eps * 2.0 * wave.u3_3 * std::cos(3.0 * x);
}

double residual(const StokesExpansion& wave, const PhysicalParams& params, double eps,
                std::span<const double> grid) {
  // Cosine amplitudes a_p of u = sum_p a_p cos(p x); d^2/dx^2 cos(px) = -p^2 cos(px).
  const double e2 = eps * eps;
  const std::array<double, 4> amp = {e2 * wave.u2_0, eps, 2.0 * e2 * wave.u2_2, 2.0 * e2 * eps * wave.u3_3};
  const double speed = wave.speed(eps);
  const double beta = params.beta();
  const double sigma = params.sigma();

  double worst = 0.0;
  for (double x : grid) {
    double u = 0.0;
    double linear = 0.0;
    for (std::size_t p = 0; p < amp.size(); ++p) {
      const double pp = static_cast<double>(p * p);
      const double c = amp[p] * std::cos(static_cast<double>(p) * x);
      u += c;
      linear += (speed - pp + beta * pp * pp) * c;
    }
    worst = std::max(worst, std::abs(linear + sigma * u * u));
  }
  return worst;
}

std::vector<double> periodic_grid(std::size_t count) {
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
  }
  return grid;
}

}  // namespace kawahara
