#include "kawahara/collision.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "kawahara/error.hpp"

namespace kawahara {

namespace {

constexpr double kCollisionTol = 1e-10;

double horner(const std::array<double, 5>& c, double k) {
  return (((c[0] * k + c[1]) * k + c[2]) * k + c[3]) * k + c[4];
}

double horner_derivative(const std::array<double, 5>& c, double k) {
  return ((4.0 * c[0] * k + 3.0 * c[1]) * k + 2.0 * c[2]) * k + c[3];
}

std::string window_text(const Interval& window) {
  std::ostringstream out;
  out.precision(6);
  out << "(" << window.lo << ", " << window.hi << ")";
  return out.str();
}

// Candidate k_n values (roots of F away from the origin collisions).
std::vector<double> candidate_roots(int delta_n, const PhysicalParams& params) {
  const double beta = params.beta();
  if (delta_n == 1) {
    const double r = std::sqrt(12.0 / (5.0 * beta) - 3.0);
    return {(-1.0 - r) / 2.0, (-1.0 + r) / 2.0};
  }
  if (delta_n == 2) {
    const double r = std::sqrt(3.0 / (5.0 * beta) - 2.0);
    return {-1.0 - r, -1.0 + r};
  }
  return real_quartic_roots(collision_polynomial(delta_n, params));
}

}  // namespace

Interval admissible_beta_range(int delta_n) {
  if (delta_n < 1) throw Error(ErrorCode::invalid_argument, "delta_n must be >= 1");
  const double d = delta_n;
  const double d2 = d * d;
  const double lower = 1.0 / (1.0 + d2);
  const double upper = 1.0 / (0.25 * d2 + 1.0);
  if (delta_n < 3) {
    return {std::max(3.0 / (5.0 * d2), lower), std::min(6.0 / (5.0 * d2), upper)};
  }
  return {lower, upper};
}

std::array<double, 5> collision_polynomial(int delta_n, const PhysicalParams& params) {
  const double b = params.beta();
  const double d = delta_n;
  const double d2 = d * d;
  return {5.0 * b, 10.0 * b * d, 10.0 * b * d2 - 3.0, 5.0 * b * d2 * d - 3.0 * d, b * d2 * d2 - d2 + 1.0 - b};
}

double collision_function(double k, int delta_n, const PhysicalParams& params) {
  return horner(collision_polynomial(delta_n, params), k);
}

double quartic_discriminant(int delta_n, const PhysicalParams& params) {
  const double b = params.beta();
  const double d2 = static_cast<double>(delta_n) * delta_n;
  const double last = 5.0 * b * (b * (d2 * d2 + 4.0) - 2.0 * (d2 + 2.0)) + 9.0;
  return 5.0 * b * (d2 - 4.0) * (b * (d2 + 4.0) - 4.0) * last * last;
}

std::vector<double> real_quartic_roots(const std::array<double, 5>& coeffs, double imag_tol) {
  if (coeffs[0] == 0.0) throw Error(ErrorCode::invalid_argument, "leading quartic coefficient is zero");
  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i) companion(0, i) = -coeffs[static_cast<std::size_t>(i) + 1] / coeffs[0];
  for (int i = 1; i < 4; ++i) companion(i, i - 1) = 1.0;

  Eigen::EigenSolver<Eigen::Matrix4d> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::numerical, "companion eigenvalue solve failed");
  }
  std::vector<double> roots;
  for (const auto& z : solver.eigenvalues()) {
    if (std::abs(z.imag()) >= imag_tol) continue;
    double k = z.real();
    // Newton polish; a step is kept only if it shrinks the residual (double roots).
    for (int step = 0; step < 2; ++step) {
      const double slope = horner_derivative(coeffs, k);
      if (slope == 0.0) break;
      const double next = k - horner(coeffs, k) / slope;
      if (!(std::abs(horner(coeffs, next)) < std::abs(horner(coeffs, k)))) break;
      k = next;
    }
    roots.push_back(k);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

FloquetImage nearest_int_map(double k) {
  const double n = std::ceil(k - 0.5);
  return {k - n, static_cast<int>(n)};
}

bool krein_check(const CollisionSite& site) { return site.k_n * site.k_m < 0.0; }

CollisionSite find_collision(int delta_n, const PhysicalParams& params) {
  const Interval window = admissible_beta_range(delta_n);
  if (!window.contains(params.beta())) {
    std::ostringstream msg;
    msg << "beta=" << params.beta() << " is outside the admissible window " << window_text(window)
        << " for delta_n=" << delta_n;
    throw Error(ErrorCode::inadmissible, msg.str());
  }

  std::optional<CollisionSite> best;
  for (double k : candidate_roots(delta_n, params)) {
    const FloquetImage image = nearest_int_map(k);
    if (image.mu < 0.0) continue;
    const double omega_n = omega(k, params);
    const double omega_m = omega(k + delta_n, params);
    if (std::abs(omega_m - omega_n) > kCollisionTol || std::abs(omega_n) <= kCollisionTol) continue;

    CollisionSite site;
    site.delta_n = delta_n;
    site.mu0 = image.mu;
    site.n = image.n;
    site.m = image.n + delta_n;
    site.k_n = k;
    site.k_m = k + delta_n;
    site.lambda0_im = -omega_n;
    // Both roots land on mu0 = 1/2 only at the boundary of the fold; keep the larger k.
    if (!best || k > best->k_n) best = site;
  }
  if (!best) {
    std::ostringstream msg;
    msg << "no collision root maps into [0, 1/2] for delta_n=" << delta_n << " beta=" << params.beta();
    throw Error(ErrorCode::numerical, msg.str());
  }
  return *best;
}

}  // namespace kawahara
