#include <random>

#include <gtest/gtest.h>

#include "loopfact/rootsub.hpp"

using namespace loopfact;

namespace {

const LaurentSeries z = LaurentSeries::monomial(1);

RootParams random_zeta(std::mt19937_64& rng, int support, double radius) {
  std::uniform_real_distribution<double> r(0.0, radius);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<cplx> v(static_cast<std::size_t>(support));
  for (auto& x : v) x = std::polar(r(rng), phase(rng));
  return zeta_params(v);
}

}  // namespace

TEST(AFactor, Values) {
  EXPECT_EQ(a_factor(0.0), 1.0);
  EXPECT_NEAR(a_factor(1.0), 1.0 / std::sqrt(2.0), 1e-16);
  EXPECT_NEAR(a_factor({3.0, 4.0}), 1.0 / std::sqrt(26.0), 1e-16);
}

TEST(RootParams, Diagnostics) {
  const auto p = zeta_params({0.3, 0.0, cplx(0.0, 0.2)});
  EXPECT_EQ(p.support(), 3);
  EXPECT_NEAR(p.l2_norm_sq(), 0.13, 1e-15);
  EXPECT_NEAR(p.w_half_norm_sq(), 0.09 + 3 * 0.04, 1e-15);
  EXPECT_EQ(eta_params({0.0, 0.0}).support(), -1);
  EXPECT_EQ(eta_params({0.5})(0), cplx(0.5));
}

TEST(PartialProduct, SingleFactor) {
  const cplx zeta(0.2, -0.1);
  const auto g = partial_product(zeta_params({zeta}), 1);
  const double a = a_factor(zeta);
  EXPECT_EQ(g.a, LaurentSeries::constant(a));
  EXPECT_EQ(g.b, LaurentSeries::monomial(-1, a * zeta));
  EXPECT_EQ(g.c, LaurentSeries::monomial(1, -a * std::conj(zeta)));
  EXPECT_EQ(g.d, LaurentSeries::constant(a));
}

TEST(PartialProduct, ZeroIsIdentity) {
  EXPECT_EQ(partial_product(zeta_params({0.0, 0.0, 0.0})), LoopMatrix::identity());
  EXPECT_EQ(partial_product(eta_params({0.0, 0.0})), LoopMatrix::identity());
}

TEST(PartialProduct, TwoFactorsByHand) {
  const cplx z1(0.3, 0.1), z2(-0.2, 0.25);
  const auto g = partial_product(zeta_params({z1, z2}), 2);
  const double a = a_factor(z1) * a_factor(z2);
  EXPECT_LT(max_abs_difference(g.c, a * (-std::conj(z1) * z - std::conj(z2) * z * z)), 1e-16);
  EXPECT_LT(max_abs_difference(g.d, a * (1.0 - z1 * std::conj(z2) * z)), 1e-16);
}

TEST(PartialProduct, UnitaryUnimodularAndFormA2) {
  std::mt19937_64 rng(21);
  const CircleGrid grid;
  for (int t = 0; t < 10; ++t) {
    const auto p = random_zeta(rng, 6, 0.8);
    const auto g = partial_product(p);
    EXPECT_LT(unitarity_defect(g, grid), 1e-12);
    EXPECT_LT(max_abs_difference(g.det(), LaurentSeries::constant(1.0)), 1e-12);
    EXPECT_LT(max_abs_difference(g.a, star(g.d)), 1e-14);
    EXPECT_LT(max_abs_difference(g.b, -star(g.c)), 1e-14);
  }
}

TEST(PartialProduct, EtaSideIsSigmaOfZetaSide) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 5; ++t) {
    const auto zeta = random_zeta(rng, 5, 0.7);
    const auto eta = sigma_params(zeta);
    EXPECT_EQ(eta.side, Side::upper_eta);
    EXPECT_LT(max_abs_difference(apply_sigma(partial_product(zeta)), partial_product(eta)), 1e-15);
    EXPECT_LT(max_abs_difference(apply_sigma(partial_product(eta)), partial_product(zeta)), 1e-15);
  }
}

TEST(GammaDelta, TwoParameters) {
  const cplx z1(0.3, 0.1), z2(-0.2, 0.25);
  const auto gd = gammadelta_coeffs(zeta_params({z1, z2}), 4);
  EXPECT_LT(std::abs(gd.gamma[1] + std::conj(z1)), 1e-16);
  EXPECT_LT(std::abs(gd.gamma[2] + std::conj(z2)), 1e-16);
  EXPECT_EQ(gd.gamma[0], cplx{});
  EXPECT_EQ(gd.delta[0], cplx(1.0));
  EXPECT_LT(std::abs(gd.delta[1] + z1 * std::conj(z2)), 1e-16);
}

TEST(GammaDelta, ZeroParameters) {
  const auto gd = gammadelta_coeffs(zeta_params({0.0, 0.0}), 3);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(gd.gamma[static_cast<std::size_t>(n)], cplx{});
    EXPECT_EQ(gd.delta[static_cast<std::size_t>(n)], n == 0 ? cplx(1.0) : cplx{});
  }
}

TEST(GammaDelta, MatchesBruteForceProduct) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const int support = 1 + t % 5;
    const auto p = random_zeta(rng, support, 0.4);
    const auto g = partial_product(p);
    const double a = a_product(p);
    const auto gd = gammadelta_coeffs(p, 20);
    for (int n = 0; n <= 20; ++n) {
      EXPECT_LT(std::abs(gd.gamma[static_cast<std::size_t>(n)] - g.c[n] / a), 1e-12);
      EXPECT_LT(std::abs(gd.delta[static_cast<std::size_t>(n)] - g.d[n] / a), 1e-12);
    }
  }
}

TEST(GammaDelta, StableUnderPadding) {
  std::mt19937_64 rng(24);
  auto p = random_zeta(rng, 4, 0.5);
  const auto before = gammadelta_coeffs(p, 12);
  p.values.resize(9);
  const auto after = gammadelta_coeffs(p, 12);
  EXPECT_EQ(before.delta, after.delta);
  EXPECT_EQ(before.gamma, after.gamma);
}

TEST(CoefficientBound, SmallCases) {
  const auto p = zeta_params({0.3, 0.2});
  EXPECT_NEAR(coefficient_bound(p, 1), 0.13, 1e-15);
  EXPECT_NEAR(coefficient_bound(p, 2), 0.1469, 1e-15);
  // P(4) = {4, 31, 22, 211, 1111}
  const double x = 0.13;
  EXPECT_NEAR(coefficient_bound(p, 4), x + 2 * x * x + x * x * x + x * x * x * x, 1e-15);
}

TEST(CoefficientBound, BoundsDelta) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_zeta(rng, 1 + t % 6, 0.9);
    const auto gd = gammadelta_coeffs(p, 12);
    for (int n = 0; n <= 12; ++n)
      EXPECT_LE(std::abs(gd.delta[static_cast<std::size_t>(n)]), coefficient_bound(p, n) + 1e-15);
  }
}
