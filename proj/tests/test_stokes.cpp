#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "kawahara/error.hpp"
#include "kawahara/stokes.hpp"

using namespace kawahara;

namespace {

// Trapezoidal DFT, exact for trigonometric polynomials of low degree.
std::complex<double> fourier_mode(const StokesExpansion& w, double eps, int p, int points = 64) {
  std::complex<double> sum;
  for (int i = 0; i < points; ++i) {
    const double x = 2.0 * M_PI * i / points;
    sum += eval_stokes(w, x, eps) * std::exp(std::complex<double>(0.0, -p * x));
  }
  return sum / static_cast<double>(points);
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST(Stokes, CoefficientsBeta07) {
  const auto w = stokes_expansion(PhysicalParams::make(0.7, 1.0));
  EXPECT_NEAR(w.c0, 0.3, 1e-15);
  EXPECT_NEAR(w.c2, 51.0 / 15.0, 1e-12);
  EXPECT_NEAR(w.u2_0, -1.0 / 0.6, 1e-12);
  EXPECT_NEAR(w.u2_2, 1.0 / (2.0 * -15.0), 1e-12);
  EXPECT_NEAR(w.u3_3, 3.0 / (2.0 * -15.0 * -144.0), 1e-12);
}

TEST(Stokes, CoefficientsBeta025) {
  const auto w = stokes_expansion(PhysicalParams::make(0.25, 1.0));
  EXPECT_NEAR(w.u2_2, -1.0 / 3.0, 1e-12);
}

TEST(Stokes, ClosedFormsForOtherSigma) {
  const double beta = 0.41, sigma = -1.7;
  const auto w = stokes_expansion(PhysicalParams::make(beta, sigma));
  const double c = 1.0 - beta;
  auto om = [&](double k) { return -c * k + k * k * k - beta * std::pow(k, 5); };
  EXPECT_NEAR(w.u2_0, -sigma / (2.0 * c), 1e-12);
  EXPECT_NEAR(w.u2_2, sigma / (2.0 * om(2)), 1e-12);
  EXPECT_NEAR(w.u3_3, 3.0 * sigma * sigma / (2.0 * om(2) * om(3)), 1e-12);
  EXPECT_NEAR(w.c2, sigma * sigma * (1.0 / c - 1.0 / om(2)), 1e-12);
}

TEST(Stokes, DegenerateSpeedRejected) {
  EXPECT_THROW(stokes_expansion(PhysicalParams::make(1.0, 1.0)), Error);
}

TEST(Stokes, EvaluationValues) {
  const auto w = stokes_expansion(PhysicalParams::make(0.7, 1.0));
  EXPECT_EQ(eval_stokes(w, 1.234, 0.0), 0.0);
  const double expected = 1e-3 + 1e-6 * (w.u2_0 + 2.0 * w.u2_2) + 1e-9 * 2.0 * w.u3_3;
  EXPECT_NEAR(eval_stokes(w, 0.0, 1e-3), expected, 1e-18);
  EXPECT_NEAR(eval_stokes(w, 0.0, 1e-3), 9.982667e-4, 1e-9);
}

TEST(Stokes, EvenInX) {
  const auto w = stokes_expansion(PhysicalParams::make(0.7, 1.0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double t = x(rng);
    EXPECT_NEAR(eval_stokes(w, t, 0.05), eval_stokes(w, -t, 0.05), 1e-15);
  }
}

TEST(Stokes, FourierModesMatchSeries) {
  const auto w = stokes_expansion(PhysicalParams::make(0.7, 1.0));
  for (double eps : {1e-3, 0.02, 0.3}) {
    const auto modes = w.fourier(eps);
    for (int p = 0; p <= 3; ++p) {
      const auto dft = fourier_mode(w, eps, p);
      EXPECT_NEAR(dft.real(), modes[p], 1e-14) << "p=" << p;
      EXPECT_NEAR(dft.imag(), 0.0, 1e-14);
      EXPECT_EQ(w.mode(-p, eps), w.mode(p, eps));
    }
    EXPECT_NEAR(fourier_mode(w, eps, 1).real(), eps / 2.0, 1e-15);
    EXPECT_EQ(w.mode(4, eps), 0.0);
    EXPECT_EQ(w.mode(-7, eps), 0.0);
  }
}

TEST(Stokes, ResidualZeroAtZeroAmplitude) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto grid = periodic_grid(128);
  EXPECT_EQ(residual(stokes_expansion(p), p, 0.0, grid), 0.0);
}

TEST(Stokes, ResidualIsFourthOrder) {
  for (double beta : {0.7, 0.25, 0.15}) {
    const auto p = PhysicalParams::make(beta, 1.0);
    const auto w = stokes_expansion(p);
    const auto grid = periodic_grid(256);
    std::vector<double> eps = {1e-3, 2e-3, 4e-3};
    std::vector<double> res;
    for (double e : eps) res.push_back(residual(w, p, e, grid));
    EXPECT_NEAR(slope(eps, res), 4.0, 0.2) << "beta=" << beta;
  }
  const auto p = PhysicalParams::make(0.7, 1.0);
  const auto w = stokes_expansion(p);
  const auto grid = periodic_grid(256);
  EXPECT_NEAR(residual(w, p, 2e-2, grid) / residual(w, p, 1e-2, grid), 16.0, 0.5);
}

TEST(Stokes, ResidualSmallForBeta025) {
  const auto p = PhysicalParams::make(0.25, 1.0);
  EXPECT_LE(residual(stokes_expansion(p), p, 1e-3, periodic_grid(256)), 1e-11);
}

// Independent residual by spectral differentiation of samples.
TEST(Stokes, ResidualMatchesSampledDerivatives) {
  const auto p = PhysicalParams::make(0.43, 0.8);
  const auto w = stokes_expansion(p);
  const double eps = 0.05;
  const auto modes = w.fourier(eps);
  double worst = 0.0;
  for (double x : periodic_grid(64)) {
    double u = 0, uxx = 0, u4 = 0;
    for (int q = -3; q <= 3; ++q) {
      const double c = modes[std::abs(q)];
      const double cs = std::cos(q * x);
      u += c * cs;
      uxx += -q * q * c * cs;
      u4 += std::pow(q, 4) * c * cs;
    }
    worst = std::max(worst, std::abs(w.speed(eps) * u + uxx + p.beta() * u4 + p.sigma() * u * u));
  }
  EXPECT_NEAR(residual(w, p, eps, periodic_grid(64)), worst, 1e-15);
}

TEST(Stokes, AmplitudeWarningThreshold) {
  EXPECT_FALSE(stokes_amplitude_suspect(1e-3));
  EXPECT_FALSE(stokes_amplitude_suspect(0.1));
  EXPECT_TRUE(stokes_amplitude_suspect(0.11));
}
