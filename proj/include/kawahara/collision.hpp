#pragma once

#include <array>
#include <vector>

#include "kawahara/dispersion.hpp"

namespace kawahara {

/// Open interval (lo, hi). Empty when lo >= hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const noexcept { return !(lo < hi); }
  bool contains(double x) const noexcept { return lo < x && x < hi; }
  double width() const noexcept { return hi - lo; }
  double center() const noexcept { return 0.5 * (lo + hi); }
};

/// Two unperturbed eigenvalues -i Omega(mu0+n) and -i Omega(mu0+m), m = n + delta_n,
/// that coincide away from the origin.
struct CollisionSite {
  int delta_n = 0;
  double mu0 = 0.0;
  int n = 0;
  int m = 0;
  double lambda0_im = 0.0;  // lambda0 = i * lambda0_im = -i Omega(k_n)
  double k_n = 0.0;         // mu0 + n
  double k_m = 0.0;         // mu0 + m
};

/// Open beta window in which a delta_n collision exists; empty if the bounds cross.
Interval admissible_beta_range(int delta_n);

/// Coefficients {a4, a3, a2, a1, a0} of
///   F(k) = 5b k^4 + 10b d k^3 + (10b d^2 - 3) k^2 + (5b d^3 - 3d) k + b d^4 - d^2 + 1 - b,
/// which equals -(Omega(k+d) - Omega(k))/d. Only the zero set matters downstream.
std::array<double, 5> collision_polynomial(int delta_n, const PhysicalParams& params);

/// F(k; delta_n), the expanded quartic above. Symmetric about k = -delta_n/2.
double collision_function(double k, int delta_n, const PhysicalParams& params);

/// Closed-form discriminant of F with respect to k.
double quartic_discriminant(int delta_n, const PhysicalParams& params);

/// Real roots of a4 k^4 + ... + a0 via companion-matrix eigenvalues, each polished by
/// two Newton steps; roots with |imag| >= imag_tol are dropped. Ascending order.
std::vector<double> real_quartic_roots(const std::array<double, 5>& coeffs, double imag_tol = 1e-8);

struct FloquetImage {
  double mu = 0.0;  // in (-1/2, 1/2]
  int n = 0;
};

/// k = mu + n with n the nearest integer, half-integers rounded down ([p/2] = (p-1)/2).
FloquetImage nearest_int_map(double k);

/// Opposite Krein signatures: k_n k_m < 0.
bool krein_check(const CollisionSite& site);

/// The unique collision with mu0 in [0, 1/2].
/// Throws Error(inadmissible) outside the open window, Error(numerical) if no root fits.
CollisionSite find_collision(int delta_n, const PhysicalParams& params);

}  // namespace kawahara
