#include "kawahara/higher_order.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kawahara/error.hpp"
#include "kawahara/stokes.hpp"

namespace kawahara {

namespace {

constexpr double kSingularFraction = 1e-10;
constexpr double kCurveClip = 1e-9;

void require_dn1(const CollisionSite& site) {
  if (site.delta_n != 1) {
    std::ostringstream msg;
    msg << "second-order theory requires delta_n=1, got " << site.delta_n;
    throw Error(ErrorCode::invalid_argument, msg.str());
  }
}

double cg_gap(const CollisionSite& site, const PhysicalParams& params) {
  const double gap = group_velocity(site.k_m, params) - group_velocity(site.k_n, params);
  if (std::abs(gap) < 1e-10) throw Error(ErrorCode::degenerate, "group velocities coincide");
  return gap;
}

// lambda1_r on the chosen branch and lambda1_i; radicand may be negative outside M1.
struct FirstOrder {
  double re;
  double im;
};

FirstOrder first_order(double mu1, const CollisionSite& site, const PhysicalParams& params, Branch branch) {
  const Lambda1 l1 = lambda1(mu1, site, params);
  const cdouble lam = branch == Branch::plus ? l1.plus : l1.minus;
  return {lam.real(), lam.imag()};
}

}  // namespace

std::map<int, cdouble> w1_coeffs(const CollisionSite& site, const PhysicalParams& params, double mu1,
                                 Branch branch) {
  require_dn1(site);
  const cdouble g0 = gamma0(mu1, site, params, branch);
  return {{site.n - 1, cdouble(Q(site.n, site.n - 1, site, params), 0.0)},
          {site.m + 1, g0 * Q(site.n, site.m + 1, site, params)}};
}

double d_coefficient(int N, const CollisionSite& site, const PhysicalParams& params) {
  const double k = site.mu0 + N;
  return 3.0 * k - 10.0 * params.beta() * k * k * k;
}

double p_tilde(int N, int k, const CollisionSite& site, const PhysicalParams& params) {
  const StokesExpansion wave = stokes_expansion(params);
  return (site.mu0 + N) * (params.sigma() * (Q(site.n, N + k, site, params) + 2.0 * wave.u2_0) + wave.c2);
}

double p_reg(int N, int k, const CollisionSite& site, const PhysicalParams& params) {
  const double gap = cg_gap(site, params);
  const double sigma = params.sigma();
  return p_tilde(N, k, site, params) +
         4.0 * sigma * sigma * site.k_m * site.k_n * d_coefficient(N, site, params) / (gap * gap);
}

double c_tilde(int N, int k, double mu1, double mu2, const CollisionSite& site, const PhysicalParams& params) {
  return mu2 * group_velocity(site.mu0 + N, params) - p_tilde(N, k, site, params) +
         mu1 * mu1 * d_coefficient(N, site, params);
}

SecondOrderTerms second_order_terms(double mu1, double mu2, const CollisionSite& site,
                                    const PhysicalParams& params) {
  require_dn1(site);
  const double cm = c_tilde(site.m, 1, mu1, mu2, site, params);
  const double cn = c_tilde(site.n, -1, mu1, mu2, site, params);
  const double sigma = params.sigma();
  SecondOrderTerms out;
  out.A = cm + cn;
  out.B = group_velocity(site.k_m, params) * cn + group_velocity(site.k_n, params) * cm -
          sigma * sigma * (2.0 * site.mu0 + site.m + site.n);
  return out;
}

cdouble lambda2(double mu1, double mu2, const CollisionSite& site, const PhysicalParams& params,
                Branch branch) {
  require_dn1(site);
  const double limit = M1(site, params);
  if (std::abs(mu1) >= limit * (1.0 - kSingularFraction)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "lambda2 is singular at |mu1|=" << std::abs(mu1) << " (M1=" << limit << ")";
    throw Error(ErrorCode::degenerate, msg.str());
  }
  const FirstOrder l1 = first_order(mu1, site, params, branch);
  const SecondOrderTerms t = second_order_terms(mu1, mu2, site, params);
  return {(t.A * l1.im + mu1 * t.B) / (2.0 * l1.re), -t.A / 2.0};
}

double regular_curve_mu2(const CollisionSite& site, const PhysicalParams& params) {
  require_dn1(site);
  const double gap = cg_gap(site, params);
  const double sigma = params.sigma();
  const double forcing = p_reg(site.m, 1, site, params) - p_reg(site.n, -1, site, params);
  return forcing / gap - 2.0 * sigma * sigma * (2.0 * site.mu0 + site.m + site.n) / (gap * gap);
}

double mu_star_shift_coefficient(const CollisionSite& site, const PhysicalParams& params) {
  require_dn1(site);
  const double gap = cg_gap(site, params);
  const double sigma = params.sigma();
  const double dd = d_coefficient(site.m, site, params) - d_coefficient(site.n, site, params);
  return -4.0 * sigma * sigma * site.k_m * site.k_n * dd / (gap * gap * gap);
}

double mu_star_second_order(const CollisionSite& site, const PhysicalParams& params, double eps) {
  return site.mu0 + eps * eps * (regular_curve_mu2(site, params) + mu_star_shift_coefficient(site, params));
}

cdouble lambda_star_second_order(const CollisionSite& site, const PhysicalParams& params, double eps) {
  const double shift = regular_curve_mu2(site, params) + mu_star_shift_coefficient(site, params);
  const cdouble l1 = lambda1(0.0, site, params).plus;
  const cdouble l2 = lambda2(0.0, shift, site, params, Branch::plus);
  return cdouble(0.0, site.lambda0_im) + eps * l1 + eps * eps * l2;
}

std::array<double, 5> critical_point_quartic(const CollisionSite& site, const PhysicalParams& params,
                                             double eps) {
  require_dn1(site);
  // With lambda1_i = -mu1 (cg_m + cg_n)/2, lambda2_r = mu1 g(mu1) / (2 lambda1_r) where
  // g = B - A (cg_m + cg_n)/2 = g0 + g2 mu1^2 and lambda1_r^2 = R - K mu1^2.
  const double gap = cg_gap(site, params);
  const double mean = (group_velocity(site.k_m, params) + group_velocity(site.k_n, params)) / 2.0;
  const double mu2 = regular_curve_mu2(site, params);
  const SecondOrderTerms at0 = second_order_terms(0.0, mu2, site, params);
  const SecondOrderTerms at1 = second_order_terms(1.0, mu2, site, params);
  const double g0 = at0.B - mean * at0.A;
  const double g2 = (at1.B - mean * at1.A) - g0;
  const double K = gap * gap / 4.0;
  const double sigma = params.sigma();
  const double R = -sigma * sigma * site.k_m * site.k_n;
  // -mu K lambda1_r^2 + (eps/2) [lambda1_r^2 (g + mu g') + mu^2 g K]
  return {-eps * K * g2, K * K, 1.5 * eps * R * g2, -K * R, 0.5 * eps * R * g0};
}

SecondOrderModel second_order_model(const CollisionSite& site, const PhysicalParams& params, double eps,
                                    std::size_t samples, std::optional<double> mu2_override) {
  require_dn1(site);
  if (!(eps >= 0.0)) throw Error(ErrorCode::invalid_argument, "eps must be >= 0");
  const double limit = M1(site, params);

  SecondOrderModel model;
  model.eps = eps;
  model.mu2 = mu2_override.value_or(regular_curve_mu2(site, params));
  model.regular = !mu2_override.has_value();
  const double drift = site.mu0 + eps * eps * model.mu2;
  model.mu_interval = {drift - eps * limit, drift + eps * limit};
  model.mu_star_shift = regular_curve_mu2(site, params) + mu_star_shift_coefficient(site, params);
  model.mu_star = site.mu0 + eps * eps * model.mu_star_shift;
  model.lambda_star = lambda_star_second_order(site, params, eps);

  const cdouble lambda0(0.0, site.lambda0_im);
  auto point = [&](double mu1, Branch branch) {
    const cdouble l1 = branch == Branch::plus ? lambda1(mu1, site, params).plus : lambda1(mu1, site, params).minus;
    return lambda0 + eps * l1 + eps * eps * lambda2(mu1, model.mu2, site, params, branch);
  };

  // |mu1| = M1: lambda1_r = 0 and lambda2_r -> 0 under the regular-curve condition.
  const double mean = (group_velocity(site.k_m, params) + group_velocity(site.k_n, params)) / 2.0;
  auto axis_point = [&](double mu1) {
    const SecondOrderTerms t = second_order_terms(mu1, model.mu2, site, params);
    return lambda0 + cdouble(0.0, -eps * mu1 * mean - eps * eps * t.A / 2.0);
  };

  const double clip = limit * (1.0 - kCurveClip);
  model.curve.reserve(2 * samples + 2);
  if (model.regular) {
    model.curve.push_back({drift - eps * limit, axis_point(-limit), 0});
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const double nu = -1.0 + 2.0 * static_cast<double>(i + 1) / static_cast<double>(samples + 1);
    const double mu1 = std::clamp(nu * limit, -clip, clip);
    const double mu = drift + eps * mu1;
    model.curve.push_back({mu, point(mu1, Branch::plus), +1});
    model.curve.push_back({mu, point(mu1, Branch::minus), -1});
  }
  if (model.regular) {
    model.curve.push_back({drift + eps * limit, axis_point(limit), 0});
  }
  return model;
}

}  // namespace kawahara
