#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "kawahara/asymptotics.hpp"
#include "kawahara/collision.hpp"
#include "kawahara/dispersion.hpp"
#include "kawahara/stokes.hpp"

namespace kawahara {

inline constexpr int kDefaultModes = 32;
inline constexpr int kMinModes = 8;
inline constexpr double kDefaultGrowthFloor = 1e-10;
inline constexpr double kDefaultMuTol = 1e-10;

/// Everything needed to assemble the Hill matrix at any Floquet exponent.
struct HillProblem {
  PhysicalParams params;
  StokesExpansion wave;
  double eps = 0.0;
  int modes = kDefaultModes;  // Fourier modes -modes..modes

  static HillProblem make(const PhysicalParams& params, double eps, int modes = kDefaultModes);
};

/// Truncated Fourier matrix of the linearization about the Stokes wave at Floquet
/// exponent mu, rows/columns indexed by j = -N..N:
///   A_jl = -i Omega_c(mu+j) delta_jl + 2 i sigma (mu+j) hat(u_S)_{j-l},
/// with Omega_c using the full speed c(eps) = c0 + c2 eps^2.
Eigen::MatrixXcd hill_matrix(const HillProblem& problem, double mu);

struct SpectrumSlice {
  double mu = 0.0;
  std::vector<cdouble> eigenvalues;  // 2N+1 values sorted by (imag, real)
  int trunc_N = 0;
  double eps = 0.0;
};

/// Dense complex eigenvalues of hill_matrix. On solver failure the matrix is written
/// to a temporary file and Error(numerical) names the path.
SpectrumSlice spectrum_slice(const HillProblem& problem, double mu);

/// One slice per grid point, in grid order. Slices are computed on `threads` workers
/// (0 = hardware concurrency); the result does not depend on the thread count.
std::vector<SpectrumSlice> sweep(const HillProblem& problem, std::span<const double> mu_grid, unsigned threads = 0);

/// `count` points spanning [lo, hi] inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

struct ExtractOptions {
  double growth_floor = kDefaultGrowthFloor;
  double isola_radius = 0.0;  // around i*lambda0_im; must be > 0 unless eps = 0
  double mu_tol = kDefaultMuTol;
  bool refine_peak = true;  // golden-section search for the max-growth exponent
};

/// 10 x the larger predicted semi-axis plus eps.
double default_isola_radius(const IsolaModel& model);

struct IsolaNumerics {
  bool empty = true;  // nothing above the floor: stable at this resolution
  double mu_lo = 0.0;
  double mu_hi = 0.0;
  double mu_star = 0.0;
  cdouble lambda_star;
  bool lo_clipped = false;  // the isola reaches the first grid point
  bool hi_clipped = false;  // ... or the last one
  std::vector<CurvePoint> points;
};

/// Largest real part among eigenvalues within `radius` of i*center_im (0 if none).
double max_growth_near(const SpectrumSlice& slice, double center_im, double radius);

/// Measures the isola born at `site` from a sweep whose grid is ascending in mu.
/// Boundaries are bisected to `mu_tol` on max-Re(mu) = growth_floor.
IsolaNumerics extract_isola(const HillProblem& problem, std::span<const SpectrumSlice> slices,
                            const CollisionSite& site, const ExtractOptions& options);

}  // namespace kawahara
