#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kawahara/asymptotics.hpp"

namespace kawahara {

// Second-order corrections for the delta_n = 1 isola, mu = mu0 + eps mu1 + eps^2 mu2,
// lambda = lambda0 + eps lambda1 + eps^2 lambda2. All functions require delta_n = 1.

/// Nonzero Fourier modes of the first-order eigenfunction correction, excluding the
/// gamma_1 e^{imx} term that is fixed at the next order:
///   {n-1: Q_{n,n-1},  m+1: gamma0 Q_{n,m+1}}.
std::map<int, cdouble> w1_coeffs(const CollisionSite& site, const PhysicalParams& params, double mu1,
                                 Branch branch = Branch::plus);

/// D^N = 3 (mu0+N) - 10 beta (mu0+N)^3 (half the derivative of the group velocity).
double d_coefficient(int N, const CollisionSite& site, const PhysicalParams& params);

/// (mu0+N) [sigma (Q_{n,N+k} + 2 hat(u2)_0) + c2].
double p_tilde(int N, int k, const CollisionSite& site, const PhysicalParams& params);

/// p_tilde + 4 sigma^2 k_m k_n D^N / (cg_m - cg_n)^2, the forcing that enters mu2.
double p_reg(int N, int k, const CollisionSite& site, const PhysicalParams& params);

/// mu2 cg(mu0+N) - p_tilde(N, k) + mu1^2 D^N.
double c_tilde(int N, int k, double mu1, double mu2, const CollisionSite& site, const PhysicalParams& params);

struct SecondOrderTerms {
  double A = 0.0;  // c_tilde(m, 1) + c_tilde(n, -1)
  double B = 0.0;  // cg_m c_tilde(n, -1) + cg_n c_tilde(m, 1) - sigma^2 (2 mu0 + m + n)
};

SecondOrderTerms second_order_terms(double mu1, double mu2, const CollisionSite& site,
                                    const PhysicalParams& params);

/// lambda2 = -(i / (2 lambda1_r)) (A lambda1 + i mu1 B) on the chosen branch.
/// Throws Error(degenerate) once |mu1| >= M1 (1 - 1e-10), where lambda1_r vanishes.
cdouble lambda2(double mu1, double mu2, const CollisionSite& site, const PhysicalParams& params,
                Branch branch = Branch::plus);

/// The unique mu2 that keeps Re(lambda2) bounded as |mu1| -> M1.
double regular_curve_mu2(const CollisionSite& site, const PhysicalParams& params);

/// mu_{*,1,1} = -4 sigma^2 k_m k_n (D^m - D^n) / (cg_m - cg_n)^3.
double mu_star_shift_coefficient(const CollisionSite& site, const PhysicalParams& params);

/// mu0 + eps^2 (mu2 + mu_{*,1,1}).
double mu_star_second_order(const CollisionSite& site, const PhysicalParams& params, double eps);

/// lambda0 + eps lambda1(0) + eps^2 lambda2(0, mu2 + mu_{*,1,1}).
cdouble lambda_star_second_order(const CollisionSite& site, const PhysicalParams& params, double eps);

/// Coefficients {c4, c3, c2, c1, c0} of the critical-point condition
/// d/dmu1 [lambda1_r + eps lambda2_r] = 0 after clearing the lambda1_r denominators.
/// The leading coefficient carries a factor eps.
std::array<double, 5> critical_point_quartic(const CollisionSite& site, const PhysicalParams& params, double eps);

struct SecondOrderModel {
  double eps = 0.0;
  double mu2 = 0.0;
  bool regular = true;  // false when mu2 was overridden
  Interval mu_interval;
  double mu_star_shift = 0.0;  // mu2 + mu_{*,1,1}
  double mu_star = 0.0;
  cdouble lambda_star;
  std::vector<CurvePoint> curve;  // lambda0 + eps lambda1 + eps^2 lambda2 over mu1 in (-M1, M1)
};

/// Builds the second-order model with `samples` interior mu1 values per branch. When
/// the curve is regular the two on-axis endpoints (|mu1| = M1) are appended.
SecondOrderModel second_order_model(const CollisionSite& site, const PhysicalParams& params, double eps,
                                    std::size_t samples = 512, std::optional<double> mu2_override = std::nullopt);

}  // namespace kawahara
