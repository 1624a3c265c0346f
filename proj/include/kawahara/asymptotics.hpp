#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "kawahara/collision.hpp"
#include "kawahara/dispersion.hpp"

namespace kawahara {

using cdouble = std::complex<double>;

/// Branch of the square root in the eigenvalue corrections: +1 has positive real part.
enum class Branch : int { minus = -1, plus = 1 };

inline int sign_of(Branch b) { return static_cast<int>(b); }

struct CurvePoint {
  double mu = 0.0;
  cdouble lambda;
  int branch = 0;  // +1, -1, or 0 for a point on the imaginary axis
};

struct Lambda1 {
  cdouble plus;
  cdouble minus;
};

/// First-order eigenvalue correction for a delta_n = 1 collision at mu = mu0 + eps mu1:
///   -i mu1 (cg_m + cg_n)/2 +- sqrt(-mu1^2 ((cg_m - cg_n)/2)^2 - sigma^2 k_m k_n).
/// Outside |mu1| < M1 both branches are purely imaginary.
Lambda1 lambda1(double mu1, const CollisionSite& site, const PhysicalParams& params);

/// Eigenvector mixing coefficient i sigma k_m / (lambda1 + i mu1 cg_m). Diagnostics only.
cdouble gamma0(double mu1, const CollisionSite& site, const PhysicalParams& params, Branch branch);

/// Half-width of the mu1 range with Re(lambda1) != 0. Throws Error(degenerate) if the
/// group velocities coincide.
double M1(const CollisionSite& site, const PhysicalParams& params);

/// Q_{N,M} = sigma (mu0+M) / (Omega(mu0+M) - Omega(mu0+N)).
double Q(int N, int M, const CollisionSite& site, const PhysicalParams& params);

/// sigma (Q_{n,n+1} + 2 hat(u2)_2), computed from the Fourier data.
double S2_fourier(const CollisionSite& site, const PhysicalParams& params);

/// sigma^2 / (2 (1 - 5 beta)).
double S2_closed_form(const PhysicalParams& params);

/// Delta_n = 2 coupling. Evaluates both routes and throws Error(numerical) if they
/// disagree by more than 1e-8.
double S2(const CollisionSite& site, const PhysicalParams& params);

/// Delta_n = 3 coupling sigma [Q1 Q2 + 2 hat(u2)_2 (Q1 + Q2) + 2 hat(u3)_3],
/// Q1 = Q_{n,n+1}, Q2 = Q_{n,n+2}.
double S3(const CollisionSite& site, const PhysicalParams& params);

/// P^N = (mu0+N) [sigma (Q_{n,N-1} + Q_{n,N+1} + 2 hat(u2)_0) + c2], delta_n >= 2 only.
double P_coefficient(int N, const CollisionSite& site, const PhysicalParams& params);

/// eps^2 coefficient of the centre's imaginary drift for delta_n >= 2:
///   -(P^m cg_n - P^n cg_m) / (cg_m - cg_n).
double center_drift(const CollisionSite& site, const PhysicalParams& params);

/// Second-order eigenvalue for delta_n = 2 at mu = mu0 + eps^2 mu2:
///   -i (C^m + C^n)/2 +- sqrt(-((C^m - C^n)/2)^2 - S2^2 k_m k_n),  C^N = mu2 cg(mu0+N) - P^N.
cdouble lambda2_dn2(double mu2, const CollisionSite& site, const PhysicalParams& params, Branch branch);

/// Leading-order description of one isola. The curve is an ellipse parameterized by
/// nu in [-1, 1] across the Floquet window:
///   mu(nu)     = mu_center + nu * mu_half_width
///   Re lambda  = +-a sqrt(1 - nu^2)
///   Im lambda  = center_im + nu * im_tilt
struct IsolaModel {
  int delta_n = 0;
  int order = 0;  // growth rate scales as eps^order
  double eps = 0.0;
  Interval mu_interval;
  double mu_star = 0.0;
  cdouble lambda_star;
  double center_im = 0.0;     // includes the eps^2 drift
  double center_drift = 0.0;  // eps^2 coefficient of the drift
  double semi_major_a = 0.0;  // real half-axis
  double semi_minor_b = 0.0;  // imaginary half-axis
  double strength = 0.0;      // sigma, S2 or S3
  double im_tilt = 0.0;

  bool degenerate() const noexcept { return semi_major_a == 0.0; }
  double mu_at(double nu) const { return mu_interval.center() + 0.5 * nu * mu_interval.width(); }
  cdouble point(double nu, Branch branch) const;

  /// `count` interior nu values per branch, uniformly spaced, in mu order.
  std::vector<CurvePoint> sample(std::size_t count) const;

  /// |lambda_r^2/a^2 + (lambda_i - center_im)^2/b^2 - 1|; NaN for a degenerate model.
  double ellipse_residual(cdouble lambda) const;
};

IsolaModel isola_dn1(const CollisionSite& site, const PhysicalParams& params, double eps);
IsolaModel isola_dn2(const CollisionSite& site, const PhysicalParams& params, double eps);
IsolaModel isola_dn3(const CollisionSite& site, const PhysicalParams& params, double eps);

/// Dispatches on site.delta_n (1, 2 or 3).
IsolaModel isola_model(const CollisionSite& site, const PhysicalParams& params, double eps);

}  // namespace kawahara
