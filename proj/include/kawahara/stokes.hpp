#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "kawahara/dispersion.hpp"

namespace kawahara {

/// Amplitudes above this are outside the regime the third-order series is meant for.
inline constexpr double kStokesEpsWarn = 0.1;

/// Third-order Stokes wave of the normalized equation,
///   u_S = eps cos x + eps^2 u_2(x) + eps^3 u_3(x),   c = c0 + c2 eps^2.
///
/// Coefficients are exponential-basis Fourier modes, hat(u)_p = (1/2pi) int u e^{-ipx},
/// so u_2 = u2_0 + 2 u2_2 cos 2x and u_3 = 2 u3_3 cos 3x. The mode-1 coefficient of
/// u_1 is 1/2 and no correction carries mode-1 content (eps is twice hat(u_S)_1).
struct StokesExpansion {
  double c0 = 0.0;
  double c2 = 0.0;
  double u2_0 = 0.0;
  double u2_2 = 0.0;
  double u3_3 = 0.0;

  double speed(double eps) const { return c0 + c2 * eps * eps; }

  /// hat(u_S)_p for p = 0..3; negative modes equal their positive mirror.
  std::array<double, 4> fourier(double eps) const;

  /// hat(u_S)_p for any integer p (zero for |p| > 3).
  double mode(int p, double eps) const;
};

/// Throws Error(degenerate) if |c0|, |Omega(2)| or |Omega(3)| < 1e-9.
StokesExpansion stokes_expansion(const PhysicalParams& params);

/// eps cos x + eps^2 (u2_0 + 2 u2_2 cos 2x) + eps^3 2 u3_3 cos 3x.
double eval_stokes(const StokesExpansion& wave, double x, double eps);

/// True when eps is large enough that the truncated series should be flagged.
inline bool stokes_amplitude_suspect(double eps) { return eps > kStokesEpsWarn || eps < -kStokesEpsWarn; }

/// max over grid of |c(eps) u + u_xx + beta u_4x + sigma u^2| for the truncated series.
/// Derivatives are exact (the series is a finite cosine sum).
double residual(const StokesExpansion& wave, const PhysicalParams& params, double eps,
                std::span<const double> grid);

/// `count` equispaced points on [0, 2pi).
std::vector<double> periodic_grid(std::size_t count);

}  // namespace kawahara
