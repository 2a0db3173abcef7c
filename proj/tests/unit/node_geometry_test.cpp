#include "pseudocurve/error.hpp"
#include "pseudocurve/node_geometry.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace pseudocurve {
namespace {

constexpr double kPi = std::numbers::pi;

CylinderMap single(int m, Complex v = {1.0, 0.0}, Cylinder dom = {-3.0, 12.0}) { return CylinderMap({{m, {v}}}, dom); }

TEST(ConformalRadius, BothConventions) {
  EXPECT_NEAR(radius_exp({0.0, 1.0}), std::exp(1.0), 1e-15);
  EXPECT_NEAR(radius_exp({0.0, 0.0001}), 1.0001, 1e-8);
  EXPECT_NEAR(radius_log({0.1, 0.0}), 2.302585092994046, 1e-14);
  EXPECT_THROW(radius_exp({1.0, 1.0}), Error);
  EXPECT_THROW(radius_log({0.0, 0.0}), Error);
}

TEST(NodeParameter, Validation) {
  EXPECT_NO_THROW(validate(NodeParameter{{0.05, 0.0}, 0.1}));
  EXPECT_NO_THROW(validate(NodeParameter{{0.0, 0.0}, 0.1}));
  EXPECT_THROW(validate(NodeParameter{{0.2, 0.0}, 0.1}), Error);
}

TEST(HyperbolaMetric, Density) {
  EXPECT_DOUBLE_EQ(hyperbola_metric_density({0.3, 0.4}, {0.0, 0.0}), 1.0);
  const Complex lambda(0.0, 0.1);
  EXPECT_NEAR(hyperbola_metric_density({std::sqrt(0.1), 0.0}, lambda), 2.0, 1e-14);
  EXPECT_NEAR(hyperbola_metric_density({0.0, 1.0}, lambda), 1.01, 1e-15);
  try {
    hyperbola_metric_density({0.0, 0.0}, lambda);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularPoint);
  }
  EXPECT_THROW(hyperbola_metric_density({0.01, 0.0}, lambda), Error);
  EXPECT_THROW(hyperbola_metric_density({1.5, 0.0}, lambda), Error);
}

TEST(GluingMaps, EndpointsAndMidpoint) {
  for (double mod : {0.5, 0.1, 0.01}) {
    const Complex lambda = std::polar(mod, 1.0);
    EXPECT_NEAR(r_of_rho(1.0, lambda), 1.0, 1e-14);
    EXPECT_NEAR(r_of_rho(-1.0, lambda), mod, 1e-14);
    EXPECT_NEAR(r_of_rho(0.0, lambda), std::sqrt(mod), 1e-14);
  }
}

TEST(GluingMaps, InversePair) {
  for (double mod : {0.5, 0.1, 0.01}) {
    const Complex lambda(mod, 0.0);
    for (int i = 0; i < 1000; ++i) {
      const double rho = -1.0 + 2.0 * i / 999.0;
      ASSERT_NEAR(rho_of_r(r_of_rho(rho, lambda), lambda), rho, 1e-12);
    }
    for (int i = 0; i < 1000; ++i) {
      const double r = mod + (1.0 - mod) * i / 999.0;
      ASSERT_NEAR(r_of_rho(rho_of_r(r, lambda), lambda), r, 1e-12 * std::max(1.0, 1.0 / mod));
    }
  }
}

TEST(GluingMaps, LimitAndDomain) {
  EXPECT_DOUBLE_EQ(r_of_rho(0.25, {0.0, 0.0}), 0.5);
  EXPECT_THROW(r_of_rho(0.0, {0.0, 0.0}), Error);
  EXPECT_THROW(r_of_rho(1.5, {0.1, 0.0}), Error);
  EXPECT_THROW(rho_of_r(0.05, {0.1, 0.0}), Error);
  EXPECT_THROW(r_of_rho(0.5, {1.0, 0.0}), Error);
}

TEST(GluingMaps, DerivativeMatchesFiniteDifference) {
  for (double mod : {0.5, 0.1, 0.01}) {
    const Complex lambda(mod, 0.0);
    for (double rho = -0.95; rho <= 0.95; rho += 0.05) {
      const double fd = testing::r_derivative_fd(rho, lambda);
      EXPECT_NEAR(r_of_rho_derivative(rho, lambda), fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
  EXPECT_NEAR(r_of_rho_derivative(0.36, {0.0, 0.0}), 0.5 / 0.6, 1e-15);
}

TEST(VolumeIdentity, ResidualAndArea) {
  for (double mod : {0.5, 0.1, 0.01}) {
    const auto r = volume_identity({mod, 0.0}, 100);
    EXPECT_LT(r.max_residual, 1e-10);
    EXPECT_LT(r.max_ratio_deviation, 1e-10);
    EXPECT_NEAR(r.pulled_back_area, 2.0 * kPi * (1.0 - mod * mod), 1e-9);
    EXPECT_NEAR(r.annulus_area, 2.0 * kPi * (1.0 - mod * mod), 1e-12);
  }
  EXPECT_LT(volume_identity_limit_residual(100), 1e-10);
  EXPECT_THROW(volume_identity({0.0, 0.0}, 10), Error);
}

TEST(VolumeIdentity, AreaAgreesWithRadialQuadrature) {
  // Direct Simpson integration of (1 + |λ|^2 / r^4) r over [|λ|, 1] in the z+ plane.
  const double mod = 0.3;
  const int n = 20000;
  const double h = (1.0 - mod) / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double r = mod + h * i;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * (1.0 + mod * mod / std::pow(r, 4)) * r;
  }
  const double area = 2.0 * kPi * s * h / 3.0;
  EXPECT_NEAR(volume_identity({mod, 0.0}, 50).pulled_back_area, area, 1e-8);
}

TEST(CylinderMapTest, MergesAndValidates) {
  const CylinderMap u({{2, {{1.0, 0.0}}}, {-1, {{0.5, 0.0}}}, {2, {{1.0, 1.0}}}}, {0.0, 5.0});
  ASSERT_EQ(u.modes().size(), 2u);
  EXPECT_EQ(u.modes()[0].m, -1);
  EXPECT_EQ(u.modes()[1].v[0], Complex(2.0, 1.0));
  EXPECT_THROW(CylinderMap({}, {0.0, 1.0}), Error);
  EXPECT_THROW(CylinderMap({{1, {{1.0, 0.0}}}, {2, {{1.0, 0.0}, {0.0, 0.0}}}}, {0.0, 1.0}), Error);
  EXPECT_THROW(CylinderMap({{1, {{1.0, 0.0}}}}, {1.0, 0.0}), Error);
}

TEST(BandEnergy, ClosedForms) {
  EXPECT_NEAR(band_energy(single(1), 0), 2.0 * kPi * (1.0 - std::exp(-2.0)), 1e-13);
  EXPECT_DOUBLE_EQ(band_energy(single(0), 3), 0.0);
  const CylinderMap both({{1, {{1.0, 0.0}}}, {-1, {{0.0, 2.0}}}}, {-3.0, 12.0});
  EXPECT_NEAR(band_energy(both, 2), band_energy(single(1), 2) + band_energy(single(-1, {0.0, 2.0}), 2), 1e-12);
  EXPECT_THROW(band_energy(single(1), 20), Error);
}

TEST(BandEnergy, MatchesQuadrature) {
  const CylinderMap u({{1, {{0.3, -0.2}, {0.1, 0.0}}}, {-2, {{0.0, 0.4}, {0.2, 0.2}}}, {3, {{0.5, 0.0}, {0.0, -0.1}}}},
                      {0.0, 4.0});
  for (int k = 0; k < 4; ++k) {
    const double exact = band_energy(u, k);
    EXPECT_NEAR(exact, testing::band_energy_quadrature(u, k, k + 1.0), 1e-9 * std::max(1.0, exact));
  }
}

TEST(BandEnergy, Additivity) {
  const CylinderMap u({{2, {{1.0, 0.0}}}, {-1, {{0.3, 0.1}}}, {1, {{0.0, 1.0}}}}, {0.0, 6.0});
  EXPECT_NEAR(band_energy(u, Cylinder{0.5, 4.0}), band_energy(u, Cylinder{0.5, 2.25}) + band_energy(u, Cylinder{2.25, 4.0}),
              1e-12);
}

TEST(ThreeBandRatio, CoshConstants) {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 0; k <= 8; ++k) {
      EXPECT_NEAR(three_band_ratio(single(m), k), 1.0 / std::cosh(2.0 * m), 1e-12);
      EXPECT_NEAR(three_band_ratio(single(-m), k), 1.0 / std::cosh(2.0 * m), 1e-12);
    }
  }
  EXPECT_DOUBLE_EQ(gamma_star(), 1.0 / std::cosh(2.0));
}

TEST(ThreeBandRatio, MixtureLiesBetween) {
  const CylinderMap u({{1, {{1.0, 0.0}}}, {2, {{3.0, 0.0}}}}, {-3.0, 12.0});
  const double r = three_band_ratio(u, 2);
  EXPECT_GT(r, 1.0 / std::cosh(4.0));
  EXPECT_LT(r, 1.0 / std::cosh(2.0));
}

TEST(ThreeBandRatio, Errors) {
  try {
    three_band_ratio(single(0), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateMap);
  }
  EXPECT_THROW(three_band_ratio(single(1, {1.0, 0.0}, {0.0, 3.0}), 0), Error);
}

TEST(DecayCheck, Examples) {
  const auto two = decay_estimate_check(single(2, {1.0, 0.0}, {0.0, 10.0}), 10);
  EXPECT_TRUE(two.pass);
  EXPECT_LE(two.c_fit, 1.0);
  ASSERT_TRUE(two.c_fit_sharp.has_value());
  EXPECT_TRUE(std::isfinite(*two.c_fit_sharp));

  const CylinderMap pm({{1, {{1.0, 0.0}}}, {-1, {{0.0, 1.0}}}}, {0.0, 10.0});
  const auto r = decay_estimate_check(pm, 10);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(std::isfinite(r.c_fit));
  EXPECT_FALSE(r.c_fit_sharp.has_value());

  const auto flat = decay_estimate_check(single(0, {1.0, 0.0}, {0.0, 10.0}), 10);
  EXPECT_TRUE(flat.pass);
  for (double e : flat.energies) EXPECT_EQ(e, 0.0);
  EXPECT_DOUBLE_EQ(flat.gamma_star, 1.0 / std::cosh(2.0));
  EXPECT_THROW(decay_estimate_check(single(1, {1.0, 0.0}, {0.0, 5.0}), 10), Error);
}

TEST(Supersolutions, PureGammaStar) {
  for (int l : {10, 20, 40}) {
    const auto s = supersolution_sequences(l);
    ASSERT_TRUE(s.k0.has_value());
    EXPECT_EQ(*s.k0, 2);
    for (int k = 1; k <= s.k_star; ++k) EXPECT_LE(s.a_plus[static_cast<std::size_t>(k)] * std::exp(2.0 * k), 1.0);
    EXPECT_TRUE(std::isfinite(s.decay_constant_plus));
  }
}

TEST(Supersolutions, K0IndependentOfLength) {
  const SupersolutionParams p{0.5, 2.0, 1.0};
  std::optional<int> first;
  for (int l : {10, 20, 40}) {
    const auto s = supersolution_sequences(l, std::nullopt, p);
    ASSERT_TRUE(s.k0.has_value()) << l;
    if (!first) first = s.k0;
    EXPECT_EQ(s.k0, first);
  }
}

TEST(Supersolutions, Symmetry) {
  const int l = 20;
  const auto s = supersolution_sequences(l, 8);
  const auto t = supersolution_sequences(l, l - 8);
  for (int k = 1; k < l; ++k) {
    EXPECT_NEAR(s.a_minus[static_cast<std::size_t>(k)], t.a_plus[static_cast<std::size_t>(l - k)],
                1e-15 * s.a_minus[static_cast<std::size_t>(k)]);
  }
  EXPECT_THROW(supersolution_sequences(10, 0), Error);
  EXPECT_THROW(supersolution_sequences(1), Error);
}

TEST(Supersolutions, RatioApproachesGammaStar) {
  const auto s = supersolution_sequences(200);
  const auto k = static_cast<std::size_t>(60);
  const double ratio = 2.0 * s.a_plus[k] / (s.a_plus[k - 1] + s.a_plus[k + 1]);
  const double expansion = gamma_star() + std::sinh(2.0) / std::pow(std::cosh(2.0), 2) / (60.0 * 60.0);
  EXPECT_NEAR(ratio, expansion, 5e-5);
}

TEST(Truncation, ThreeTerm) {
  const CylinderMap low({{-1, {{1.0, 0.0}}}, {0, {{2.0, 0.0}}}, {1, {{0.0, 1.0}}}}, {0.0, 5.0});
  const auto a = three_term_truncation(low, 2);
  EXPECT_DOUBLE_EQ(a.remainder_norm, 0.0);
  EXPECT_EQ(a.principal.modes().size(), 3u);

  const CylinderMap high = single(2, {1.0, 0.0}, {0.0, 5.0});
  const auto b = three_term_truncation(high, 2);
  EXPECT_NEAR(b.remainder_norm, std::sqrt(band_l12_squared(high, band(2))), 1e-15);
  EXPECT_DOUBLE_EQ(band_energy(b.principal, 2), 0.0);

  const CylinderMap mixed({{1, {{1.0, 0.0}}}, {2, {{0.5, 0.5}}}, {-3, {{1e-3, 0.0}}}}, {0.0, 8.0});
  for (int k = 1; k <= 6; ++k) EXPECT_LE(remainder_band_ratio(mixed, k), 1.0 / std::cosh(4.0) + 1e-12);
}

}  // namespace
}  // namespace pseudocurve
