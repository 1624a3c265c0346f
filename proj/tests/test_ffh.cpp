#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "kawahara/asymptotics.hpp"
#include "kawahara/collision.hpp"
#include "kawahara/error.hpp"
#include "kawahara/ffh.hpp"

using namespace kawahara;

namespace {

const cdouble I(0.0, 1.0);

// Symbol of d/dx (c w + w_xx + beta w_4x) at wavenumber k, written out directly.
cdouble linear_symbol(double k, double c, double beta) { return I * k * (c - k * k + beta * std::pow(k, 4)); }

int count_unstable_near(const SpectrumSlice& s, double center, double radius, double floor) {
  int n = 0;
  for (const auto& z : s.eigenvalues) {
    if (z.real() > floor && std::abs(z - cdouble(0.0, center)) < radius) ++n;
  }
  return n;
}

bool contains(const std::vector<cdouble>& values, cdouble z, double tol) {
  return std::any_of(values.begin(), values.end(), [&](cdouble v) { return std::abs(v - z) <= tol; });
}

}  // namespace

TEST(Hill, RejectsBadTruncationAndEps) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  EXPECT_THROW(HillProblem::make(p, 1e-3, 7), Error);
  EXPECT_THROW(HillProblem::make(p, NAN, 32), Error);
  EXPECT_NO_THROW(HillProblem::make(p, 1e-3, 8));
  EXPECT_THROW(hill_matrix(HillProblem::make(p, 1e-3, 8), NAN), Error);
}

TEST(Hill, DiagonalAtZeroAmplitude) {
  for (double beta : {0.7, 0.25, 0.43}) {
    const auto p = PhysicalParams::make(beta, 1.0);
    for (int N : {8, 16, 64}) {
      const auto prob = HillProblem::make(p, 0.0, N);
      for (double mu : {0.0, 0.25, -0.37, 0.5}) {
        const auto a = hill_matrix(prob, mu);
        double off = 0.0, diag = 0.0;
        for (int r = 0; r < a.rows(); ++r) {
          for (int c = 0; c < a.cols(); ++c) {
            if (r == c) {
              const double k = mu + r - N;
              diag = std::max(diag, std::abs(a(r, c) - linear_symbol(k, 1.0 - beta, beta)) /
                                        std::max(1.0, std::abs(a(r, c))));
            } else {
              off = std::max(off, std::abs(a(r, c)));
            }
          }
        }
        EXPECT_EQ(off, 0.0);
        EXPECT_LE(diag, 1e-12);
      }
    }
  }
  const auto s = spectrum_slice(HillProblem::make(PhysicalParams::make(0.7, 1.0), 0.0, 16), 0.25);
  for (const auto& z : s.eigenvalues) EXPECT_LE(std::abs(z.real()), 1e-12);
}

TEST(Hill, ToeplitzBandAndSkewHermitianAtZero) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto prob = HillProblem::make(p, 0.05, 12);
  const auto a = hill_matrix(prob, 0.17);
  const auto u = prob.wave.fourier(0.05);
  for (int r = 0; r < a.rows(); ++r) {
    const double k = 0.17 + r - 12;
    for (int c = 0; c < a.cols(); ++c) {
      if (r == c) continue;
      const int d = std::abs(r - c);
      const cdouble expected = d <= 3 ? 2.0 * I * k * u[static_cast<std::size_t>(d)] : cdouble(0.0);
      EXPECT_NEAR(std::abs(a(r, c) - expected), 0.0, 1e-15);
    }
  }
  const auto a0 = hill_matrix(HillProblem::make(p, 0.0, 12), 0.17);
  EXPECT_LE((a0 + a0.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

// Applies the linearized operator to e^{i mu x} sum w_l e^{ilx} by pointwise products
// on a fine grid and compares with the matrix-vector product.
TEST(Hill, MatchesPseudospectralApplication) {
  const auto p = PhysicalParams::make(0.37, -0.8);
  const double eps = 0.08, mu = 0.31;
  const int N = 16, keep = N - 3, M = 128;
  const auto prob = HillProblem::make(p, eps, N);
  const auto a = hill_matrix(prob, mu);
  const double c = prob.wave.speed(eps);

  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(2 * N + 1);
    for (int l = -keep; l <= keep; ++l) w(l + N) = cdouble(g(rng), g(rng));

    std::vector<cdouble> product(M);
    for (int i = 0; i < M; ++i) {
      const double x = 2.0 * M_PI * i / M;
      cdouble field;
      for (int l = -keep; l <= keep; ++l) field += w(l + N) * std::exp(I * (double)l * x);
      product[i] = 2.0 * p.sigma() * eval_stokes(prob.wave, x, eps) * field;
    }
    const Eigen::VectorXcd got = a * w;
    for (int j = -N; j <= N; ++j) {
      cdouble mode;
      for (int i = 0; i < M; ++i) mode += product[i] * std::exp(-I * (double)j * (2.0 * M_PI * i / M));
      mode /= (double)M;
      const double k = mu + j;
      const cdouble expected = linear_symbol(k, c, p.beta()) * w(j + N) + I * k * mode;
      EXPECT_LE(std::abs(got(j + N) - expected), 1e-10 * (1.0 + std::abs(expected))) << "j=" << j;
    }
  }
}

TEST(Hill, QuadrafoldSymmetry) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto prob = HillProblem::make(p, 0.02, 24);
  for (double mu : {0.1726, 0.31, -0.44}) {
    const auto s = spectrum_slice(prob, mu);
    const auto r = spectrum_slice(prob, -mu);
    for (const auto& z : s.eigenvalues) {
      const double tol = 1e-8 * std::max(1.0, std::abs(z));
      EXPECT_TRUE(contains(s.eigenvalues, -std::conj(z), tol)) << z;
      EXPECT_TRUE(contains(r.eigenvalues, std::conj(z), tol)) << z;
    }
  }
}

TEST(Hill, SingleUnstablePairAtCollision) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto site = find_collision(1, p);
  const auto s = spectrum_slice(HillProblem::make(p, 1e-3, 32), site.mu0);
  EXPECT_EQ(count_unstable_near(s, site.lambda0_im, 0.05, 1e-6), 1);
  int total = 0;
  for (const auto& z : s.eigenvalues) total += std::abs(z.real()) > 1e-6;
  EXPECT_EQ(total, 2);
}

TEST(Hill, TruncationConverged) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto site = find_collision(1, p);
  const auto coarse = spectrum_slice(HillProblem::make(p, 1e-3, 16), site.mu0);
  const auto fine = spectrum_slice(HillProblem::make(p, 1e-3, 32), site.mu0);
  for (const auto& z : coarse.eigenvalues) {
    if (std::abs(z - cdouble(0.0, site.lambda0_im)) > 0.05) continue;
    EXPECT_TRUE(contains(fine.eigenvalues, z, 1e-12)) << z;
  }
  const auto m = isola_dn1(site, p, 1e-3);
  const double g24 = max_growth_near(spectrum_slice(HillProblem::make(p, 1e-3, 24), site.mu0), site.lambda0_im, 0.05);
  const double g48 = max_growth_near(spectrum_slice(HillProblem::make(p, 1e-3, 48), site.mu0), site.lambda0_im, 0.05);
  EXPECT_NEAR(g24, g48, 1e-12);
  EXPECT_NEAR(g24, m.lambda_star.real(), 0.02 * m.lambda_star.real());
}

TEST(Sweep, MatchesSlicesAndIgnoresThreadCount) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto prob = HillProblem::make(p, 1e-3, 16);
  const auto grid = uniform_grid(0.16, 0.18, 9);
  const auto one = sweep(prob, grid, 1);
  const auto four = sweep(prob, grid, 4);
  ASSERT_EQ(one.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(one[i].mu, grid[i]);
    EXPECT_EQ(one[i].eigenvalues, four[i].eigenvalues);
    EXPECT_EQ(one[i].trunc_N, 16);
  }
  const std::vector<double> single = {0.17};
  EXPECT_EQ(sweep(prob, single)[0].eigenvalues, spectrum_slice(prob, 0.17).eigenvalues);
}

TEST(Sweep, ErrorNamesGridIndex) {
  const auto prob = HillProblem::make(PhysicalParams::make(0.7, 1.0), 1e-3, 8);
  const std::vector<double> grid = {0.1, 0.2, NAN, 0.3};
  try {
    sweep(prob, grid, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("grid index 2"), std::string::npos) << e.what();
  }
}

TEST(UniformGrid, Endpoints) {
  const auto g = uniform_grid(-1.0, 1.0, 5);
  EXPECT_EQ(g, (std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0}));
  EXPECT_EQ(uniform_grid(0.0, 1.0, 1), std::vector<double>{0.5});
  EXPECT_TRUE(uniform_grid(0.0, 1.0, 0).empty());
}

TEST(Extract, EmptyAtZeroAmplitude) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto site = find_collision(1, p);
  const auto prob = HillProblem::make(p, 0.0, 16);
  const auto grid = uniform_grid(0.1, 0.25, 31);
  const auto slices = sweep(prob, grid);
  const auto out = extract_isola(prob, slices, site, ExtractOptions{});
  EXPECT_TRUE(out.empty);
  EXPECT_TRUE(out.points.empty());
}

TEST(Extract, RequiresRadiusWhenAmplitudeNonzero) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto site = find_collision(1, p);
  const auto prob = HillProblem::make(p, 1e-3, 8);
  const auto slices = sweep(prob, uniform_grid(0.17, 0.175, 3));
  EXPECT_THROW(extract_isola(prob, slices, site, ExtractOptions{}), Error);
}

TEST(Extract, Dn1AgreesWithLeadingOrder) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto site = find_collision(1, p);
  const double eps = 1e-3;
  const auto model = isola_dn1(site, p, eps);
  const auto prob = HillProblem::make(p, eps, 32);
  const double half = 0.5 * model.mu_interval.width();
  const double lo = model.mu_interval.lo - 0.2 * 2 * half;
  const double hi = model.mu_interval.hi + 0.2 * 2 * half;
  const auto slices = sweep(prob, uniform_grid(lo, hi, 400));
  ExtractOptions opt;
  opt.isola_radius = default_isola_radius(model);
  const auto out = extract_isola(prob, slices, site, opt);
  ASSERT_FALSE(out.empty);
  EXPECT_FALSE(out.lo_clipped);
  EXPECT_FALSE(out.hi_clipped);
  EXPECT_NEAR(out.lambda_star.real(), model.lambda_star.real(), 0.05 * model.lambda_star.real());
  EXPECT_NEAR(out.mu_lo, model.mu_interval.lo, 0.05 * model.mu_interval.width());
  EXPECT_NEAR(out.mu_hi, model.mu_interval.hi, 0.05 * model.mu_interval.width());
  EXPECT_LE(out.mu_lo, out.mu_star);
  EXPECT_LE(out.mu_star, out.mu_hi);
  for (const auto& pt : out.points) {
    EXPECT_LE(pt.lambda.real(), out.lambda_star.real());
    EXPECT_GE(pt.mu, out.mu_lo - 1e-9);
    EXPECT_LE(pt.mu, out.mu_hi + 1e-9);
  }
}

TEST(Extract, Dn2AgreesWithLeadingOrder) {
  const auto p = PhysicalParams::make(0.25, 1.0);
  const auto site = find_collision(2, p);
  const double eps = 1e-2;
  const auto model = isola_dn2(site, p, eps);
  const auto prob = HillProblem::make(p, eps, 32);
  const double w = model.mu_interval.width();
  const auto slices = sweep(prob, uniform_grid(model.mu_interval.lo - 0.5 * w, model.mu_interval.hi + 0.5 * w, 200));
  ExtractOptions opt;
  opt.isola_radius = default_isola_radius(model);
  const auto out = extract_isola(prob, slices, site, opt);
  ASSERT_FALSE(out.empty);
  EXPECT_NEAR(out.lambda_star.real(), model.lambda_star.real(), 0.1 * model.lambda_star.real());
  EXPECT_NEAR(out.mu_lo, model.mu_interval.lo, 0.1 * w);
  EXPECT_NEAR(out.mu_hi, model.mu_interval.hi, 0.1 * w);
}

TEST(Extract, ClippedWhenGridTooNarrow) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto site = find_collision(1, p);
  const auto model = isola_dn1(site, p, 1e-3);
  const auto prob = HillProblem::make(p, 1e-3, 16);
  const auto slices = sweep(prob, uniform_grid(model.mu_star - 1e-4, model.mu_star + 1e-4, 11));
  ExtractOptions opt;
  opt.isola_radius = default_isola_radius(model);
  const auto out = extract_isola(prob, slices, site, opt);
  EXPECT_TRUE(out.lo_clipped);
  EXPECT_TRUE(out.hi_clipped);
}
