#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "kawahara/dispersion.hpp"
#include "kawahara/error.hpp"

using namespace kawahara;

namespace {

// Independent reference: Omega evaluated term by term.
double omega_ref(double k, double beta) {
  const double c = 1.0 - beta;
  return -c * k + std::pow(k, 3) - beta * std::pow(k, 5);
}

double central_difference(double k, double beta, double h) {
  return (omega_ref(k + h, beta) - omega_ref(k - h, beta)) / (2.0 * h);
}

}  // namespace

TEST(Dispersion, SpeedAtOrderZero) {
  EXPECT_DOUBLE_EQ(c0(PhysicalParams::make(0.7, 1.0)), 1.0 - 0.7);
  EXPECT_DOUBLE_EQ(c0(PhysicalParams::make(0.25, 1.0)), 0.75);
  EXPECT_DOUBLE_EQ(c0(PhysicalParams::make(1.0, 1.0)), 0.0);
}

TEST(Dispersion, OmegaValues) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  EXPECT_EQ(omega(0.0, p), 0.0);
  EXPECT_NEAR(omega(2.0, p), -15.0, 1e-12);
  EXPECT_NEAR(omega(3.0, p), -144.0, 1e-12);
}

TEST(Dispersion, OmegaIsOdd) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> k(-4.0, 4.0);
  const auto p = PhysicalParams::make(0.37, 1.3);
  for (int i = 0; i < 200; ++i) {
    const double x = k(rng);
    EXPECT_NEAR(omega(-x, p), -omega(x, p), 1e-12 * (1.0 + std::abs(omega(x, p))));
  }
}

TEST(Dispersion, GroupVelocityValues) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  EXPECT_NEAR(group_velocity(0.0, p), -0.3, 1e-15);
  for (double k : {0.1726731, -0.8273269, 1.3, -2.1}) {
    EXPECT_NEAR(group_velocity(k, p), central_difference(k, 0.7, 1e-6), 1e-8) << "k=" << k;
  }
  EXPECT_NEAR(group_velocity(0.1726731, p), -0.213664, 1e-6);
  EXPECT_NEAR(group_velocity(-0.8273269, p), 0.113663, 1e-6);
}

TEST(Dispersion, FiniteDifferenceConvergesAtSecondOrder) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  for (double k : {0.3, -0.9, 1.7}) {
    const double e1 = std::abs(group_velocity(k, p) - central_difference(k, 0.7, 1e-3));
    const double e2 = std::abs(group_velocity(k, p) - central_difference(k, 0.7, 1e-4));
    const double order = std::log10(e1 / e2);
    EXPECT_GE(order, 1.9) << "k=" << k;
  }
}

TEST(Dispersion, GroupVelocitySlopeMatchesDifference) {
  const auto p = PhysicalParams::make(0.7, 1.0);
  for (double k : {0.2, -0.8, 1.1}) {
    const double h = 1e-5;
    const double fd = (group_velocity(k + h, p) - group_velocity(k - h, p)) / (2.0 * h);
    EXPECT_NEAR(group_velocity_slope(k, p), fd, 1e-7);
  }
}

TEST(Dispersion, ResonanceDetection) {
  EXPECT_FALSE(is_resonant(0.5).has_value());
  ASSERT_TRUE(is_resonant(0.2).has_value());
  EXPECT_EQ(*is_resonant(0.2), 2);
  ASSERT_TRUE(is_resonant(0.1).has_value());
  EXPECT_EQ(*is_resonant(0.1), 3);
  EXPECT_EQ(*is_resonant(1.0 / 26.0 + 5e-10), 5);
  EXPECT_FALSE(is_resonant(0.2 + 1e-8).has_value());
  EXPECT_FALSE(is_resonant(0.7).has_value());
}

TEST(Dispersion, ParamsRejectResonanceNamingMode) {
  try {
    PhysicalParams::make(0.2, 1.0);
    FAIL() << "expected a resonance error";
  } catch (const ResonanceError& e) {
    EXPECT_EQ(e.mode(), 2);
    EXPECT_EQ(e.code(), ErrorCode::resonant);
    EXPECT_NE(std::string(e.what()).find("N=2"), std::string::npos);
  }
}

TEST(Dispersion, ParamsRejectZeroAndNonFinite) {
  EXPECT_THROW(PhysicalParams::make(0.0, 1.0), Error);
  EXPECT_THROW(PhysicalParams::make(0.7, 0.0), Error);
  EXPECT_THROW(PhysicalParams::make(NAN, 1.0), Error);
  EXPECT_THROW(PhysicalParams::make(0.7, INFINITY), Error);
}

TEST(Normalize, IdentityScaling) {
  const auto p = normalize({1.0, 0.7, 1.0, 2.0 * M_PI});
  EXPECT_NEAR(p.beta(), 0.7, 1e-15);
  EXPECT_NEAR(p.sigma(), 1.0, 1e-15);
}

TEST(Normalize, IdempotentOnNormalizedInput) {
  const auto p = normalize({1.0, 0.33, -2.5, 2.0 * M_PI});
  const auto q = normalize({1.0, p.beta(), p.sigma(), 2.0 * M_PI});
  EXPECT_DOUBLE_EQ(p.beta(), q.beta());
  EXPECT_DOUBLE_EQ(p.sigma(), q.sigma());
}

TEST(Normalize, AlphaTwo) {
  const auto p = normalize({2.0, 1.4, 2.0, 2.0 * M_PI});
  EXPECT_NEAR(p.beta(), 0.7, 1e-15);
  EXPECT_NEAR(p.sigma(), 2.0, 1e-15);
}

TEST(Normalize, RejectsBadInputs) {
  EXPECT_THROW(normalize({0.0, 0.7, 1.0, 2.0 * M_PI}), Error);
  EXPECT_THROW(normalize({1.0, 0.7, 1.0, 0.0}), Error);
  EXPECT_THROW(normalize({1.0, 0.7, 1.0, -3.0}), Error);
  try {
    normalize({1.0, 0.2, 1.0, 2.0 * M_PI});
    FAIL();
  } catch (const ResonanceError& e) {
    EXPECT_EQ(e.mode(), 2);
  }
}

// Substitutes u(x) = alpha s v(x/s), s = L/2pi, into the raw equation and checks it is a
// fixed multiple of the normalized equation for v, for a random trigonometric polynomial.
TEST(Normalize, SubstitutionResidual) {
  const RawParams raw{1.7, 0.9, -0.6, 5.3};
  const auto p = normalize(raw);
  const double s = raw.period / (2.0 * M_PI);
  const double c_raw = 0.37;
  const double c_norm = normalize_speed(c_raw, raw);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> a(5), b(5);
  for (int j = 0; j < 5; ++j) {
    a[j] = coef(rng);
    b[j] = coef(rng);
  }
  // d^order/dy^order of v(y) = sum a_j cos(jy) + b_j sin(jy)
  auto v = [&](double y, int order) {
    double out = 0.0;
    for (int j = 0; j < 5; ++j) {
      const double jp = std::pow(static_cast<double>(j), order);
      const double sc = std::cos(j * y + order * M_PI / 2.0);
      const double ss = std::sin(j * y + order * M_PI / 2.0);
      out += jp * (a[j] * sc + b[j] * ss);
    }
    return out;
  };
  for (double y = 0.0; y < 2.0 * M_PI; y += 0.37) {
    const double u = raw.alpha * s * v(y, 0);
    const double u_xx = raw.alpha * s * v(y, 2) / (s * s);
    const double u_4x = raw.alpha * s * v(y, 4) / std::pow(s, 4);
    const double raw_res = c_raw * u + raw.alpha * u_xx + raw.beta * u_4x + raw.sigma * u * u;
    const double v0 = v(y, 0);
    const double norm_res = c_norm * v0 + v(y, 2) + p.beta() * v(y, 4) + p.sigma() * v0 * v0;
    const double factor = raw.alpha * raw.alpha / s;
    EXPECT_NEAR(raw_res, factor * norm_res, 1e-10 * (1.0 + std::abs(raw_res)));
  }
}
