#include "kawahara/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "kawahara/error.hpp"
#include "kawahara/stokes.hpp"

namespace kawahara {

namespace {

constexpr double kDenominatorTol = 1e-10;
constexpr double kS2AgreementTol = 1e-8;

struct GroupVelocities {
  double m;
  double n;
  double sum() const { return m + n; }
  double diff() const { return m - n; }
};

GroupVelocities velocities(const CollisionSite& site, const PhysicalParams& params) {
  const GroupVelocities cg{group_velocity(site.k_m, params), group_velocity(site.k_n, params)};
  if (std::abs(cg.diff()) < kDenominatorTol) {
    throw Error(ErrorCode::degenerate, "group velocities of the colliding modes coincide");
  }
  return cg;
}

void require_delta_n(const CollisionSite& site, int expected, const char* what) {
  if (site.delta_n != expected) {
    std::ostringstream msg;
    msg << what << " requires delta_n=" << expected << ", got " << site.delta_n;
    throw Error(ErrorCode::invalid_argument, msg.str());
  }
}

// Builds the ellipse shared by every delta_n:  strength S, order p, Floquet centre
// offset mu_offset (coefficient of eps^2) and centre drift (coefficient of eps^2).
IsolaModel build_model(const CollisionSite& site, const PhysicalParams& params, double eps, int order,
                       double strength, double mu_offset, double drift) {
  if (!(eps >= 0.0)) throw Error(ErrorCode::invalid_argument, "eps must be >= 0");
  const GroupVelocities cg = velocities(site, params);
  const double scale = std::pow(eps, order);
  const double root = std::sqrt(-site.k_m * site.k_n);
  const double M = 2.0 * std::abs(strength) * root / std::abs(cg.diff());

  IsolaModel model;
  model.delta_n = site.delta_n;
  model.order = order;
  model.eps = eps;
  model.strength = strength;
  model.center_drift = drift;
  model.center_im = site.lambda0_im + eps * eps * drift;
  model.semi_major_a = std::abs(scale * strength) * root;
  model.semi_minor_b = model.semi_major_a * std::abs(cg.sum() / cg.diff());
  const double mu_center = site.mu0 + eps * eps * mu_offset;
  const double half_width = std::abs(scale) * M;
  model.mu_interval = {mu_center - half_width, mu_center + half_width};
  model.im_tilt = -half_width * cg.sum() / 2.0;
  model.mu_star = mu_center;
  model.lambda_star = {model.semi_major_a, model.center_im};
  return model;
}

}  // namespace

Lambda1 lambda1(double mu1, const CollisionSite& site, const PhysicalParams& params) {
  const GroupVelocities cg = velocities(site, params);
  const double sigma = params.sigma();
  const double half_diff = cg.diff() / 2.0;
  const double radicand = -mu1 * mu1 * half_diff * half_diff - sigma * sigma * site.k_m * site.k_n;
  const cdouble drift(0.0, -mu1 * cg.sum() / 2.0);
  const cdouble root = std::sqrt(cdouble(radicand, 0.0));
  return {drift + root, drift - root};
}

cdouble gamma0(double mu1, const CollisionSite& site, const PhysicalParams& params, Branch branch) {
  const Lambda1 l1 = lambda1(mu1, site, params);
  const cdouble lam = branch == Branch::plus ? l1.plus : l1.minus;
  const cdouble i(0.0, 1.0);
  return i * params.sigma() * site.k_m / (lam + i * mu1 * group_velocity(site.k_m, params));
}

double M1(const CollisionSite& site, const PhysicalParams& params) {
  const GroupVelocities cg = velocities(site, params);
  return 2.0 * std::abs(params.sigma()) * std::sqrt(-site.k_m * site.k_n) / std::abs(cg.diff());
}

double Q(int N, int M, const CollisionSite& site, const PhysicalParams& params) {
  const double kM = site.mu0 + M;
  const double denom = omega(kM, params) - omega(site.mu0 + N, params);
  if (std::abs(denom) < kDenominatorTol) {
    std::ostringstream msg;
    msg << "Q_{" << N << "," << M << "} has a vanishing denominator (extra resonance)";
    throw Error(ErrorCode::degenerate, msg.str());
  }
  return params.sigma() * kM / denom;
}

double S2_fourier(const CollisionSite& site, const PhysicalParams& params) {
  const StokesExpansion wave = stokes_expansion(params);
  return params.sigma() * (Q(site.n, site.n + 1, site, params) + 2.0 * wave.u2_2);
}

double S2_closed_form(const PhysicalParams& params) {
  const double sigma = params.sigma();
  return sigma * sigma / (2.0 * (1.0 - 5.0 * params.beta()));
}

double S2(const CollisionSite& site, const PhysicalParams& params) {
  require_delta_n(site, 2, "S2");
  const double fourier = S2_fourier(site, params);
  const double closed = S2_closed_form(params);
  if (std::abs(fourier - closed) > kS2AgreementTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "S2 mismatch: Fourier route " << fourier << " vs closed form " << closed;
    throw Error(ErrorCode::numerical, msg.str());
  }
  return fourier;
}

double S3(const CollisionSite& site, const PhysicalParams& params) {
  require_delta_n(site, 3, "S3");
  const StokesExpansion wave = stokes_expansion(params);
  const double q1 = Q(site.n, site.n + 1, site, params);
  const double q2 = Q(site.n, site.n + 2, site, params);
  return params.sigma() * (q1 * q2 + 2.0 * wave.u2_2 * (q1 + q2) + 2.0 * wave.u3_3);
}

double P_coefficient(int N, const CollisionSite& site, const PhysicalParams& params) {
  if (site.delta_n < 2) {
    throw Error(ErrorCode::invalid_argument, "P^N is defined for delta_n >= 2 only");
  }
  const StokesExpansion wave = stokes_expansion(params);
  const double sum = Q(site.n, N - 1, site, params) + Q(site.n, N + 1, site, params) + 2.0 * wave.u2_0;
  return (site.mu0 + N) * (params.sigma() * sum + wave.c2);
}

double center_drift(const CollisionSite& site, const PhysicalParams& params) {
  const GroupVelocities cg = velocities(site, params);
  const double pm = P_coefficient(site.m, site, params);
  const double pn = P_coefficient(site.n, site, params);
  return -(pm * cg.n - pn * cg.m) / cg.diff();
}

cdouble lambda2_dn2(double mu2, const CollisionSite& site, const PhysicalParams& params, Branch branch) {
  require_delta_n(site, 2, "lambda2_dn2");
  const GroupVelocities cg = velocities(site, params);
  const double s2 = S2(site, params);
  const double cm = mu2 * cg.m - P_coefficient(site.m, site, params);
  const double cn = mu2 * cg.n - P_coefficient(site.n, site, params);
  const double half_diff = (cm - cn) / 2.0;
  const double radicand = -half_diff * half_diff - s2 * s2 * site.k_m * site.k_n;
  const cdouble root = std::sqrt(cdouble(radicand, 0.0));
  const cdouble drift(0.0, -(cm + cn) / 2.0);
  return branch == Branch::plus ? drift + root : drift - root;
}

cdouble IsolaModel::point(double nu, Branch branch) const {
  const double re = semi_major_a * std::sqrt(std::max(0.0, 1.0 - nu * nu));
  return {sign_of(branch) * re, center_im + nu * im_tilt};
}

std::vector<CurvePoint> IsolaModel::sample(std::size_t count) const {
  std::vector<CurvePoint> out;
  out.reserve(2 * count);
  for (std::size_t i = 0; i < count; ++i) {
    const double nu = -1.0 + 2.0 * static_cast<double>(i + 1) / static_cast<double>(count + 1);
    const double mu = mu_at(nu);
    out.push_back({mu, point(nu, Branch::plus), +1});
    out.push_back({mu, point(nu, Branch::minus), -1});
  }
  return out;
}

double IsolaModel::ellipse_residual(cdouble lambda) const {
  if (degenerate()) return std::numeric_limits<double>::quiet_NaN();
  const double x = lambda.real() / semi_major_a;
  const double y = (lambda.imag() - center_im) / semi_minor_b;
  return std::abs(x * x + y * y - 1.0);
}

IsolaModel isola_dn1(const CollisionSite& site, const PhysicalParams& params, double eps) {
  require_delta_n(site, 1, "isola_dn1");
  return build_model(site, params, eps, 1, params.sigma(), 0.0, 0.0);
}

IsolaModel isola_dn2(const CollisionSite& site, const PhysicalParams& params, double eps) {
  require_delta_n(site, 2, "isola_dn2");
  const GroupVelocities cg = velocities(site, params);
  const double s2 = S2(site, params);
  if (s2 == 0.0) throw Error(ErrorCode::degenerate, "S2 vanishes");
  const double offset = (P_coefficient(site.m, site, params) - P_coefficient(site.n, site, params)) / cg.diff();
  return build_model(site, params, eps, 2, s2, offset, center_drift(site, params));
}

IsolaModel isola_dn3(const CollisionSite& site, const PhysicalParams& params, double eps) {
  require_delta_n(site, 3, "isola_dn3");
  const GroupVelocities cg = velocities(site, params);
  const double s3 = S3(site, params);
  const double offset = (P_coefficient(site.m, site, params) - P_coefficient(site.n, site, params)) / cg.diff();
  return build_model(site, params, eps, 3, s3, offset, center_drift(site, params));
}

IsolaModel isola_model(const CollisionSite& site, const PhysicalParams& params, double eps) {
  switch (site.delta_n) {
    case 1: return isola_dn1(site, params, eps);
    case 2: return isola_dn2(site, params, eps);
    case 3: return isola_dn3(site, params, eps);
    default: break;
  }
  std::ostringstream msg;
  msg << "no leading-order isola model for delta_n=" << site.delta_n << " (supported: 1, 2, 3)";
  throw Error(ErrorCode::invalid_argument, msg.str());
}

}  // namespace kawahara
