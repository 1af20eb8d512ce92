#include <random>

#include <gtest/gtest.h>

#include "loopfact/toeplitz.hpp"

using namespace loopfact;

namespace {

const LaurentSeries z = LaurentSeries::monomial(1);
const LaurentSeries zinv = LaurentSeries::monomial(-1);
const LaurentSeries one = LaurentSeries::constant(1.0);

// a(zeta) [[1, zeta z^-n], [-conj(zeta) z^n, 1]]
LoopMatrix elementary(cplx zeta, int n) {
  const double a = 1.0 / std::sqrt(1.0 + std::norm(zeta));
  return {LaurentSeries::constant(a), LaurentSeries::monomial(-n, a * zeta),
          LaurentSeries::monomial(n, -a * std::conj(zeta)), LaurentSeries::constant(a)};
}

LoopMatrix random_loop(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  LoopMatrix g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      std::vector<cplx> v(static_cast<std::size_t>(hi - lo + 1));
      for (auto& x : v) x = {u(rng), u(rng)};
      g.entry(r, c) = LaurentSeries(lo, v);
    }
  return g;
}

}  // namespace

TEST(Compress, IdentityIsIdentity) {
  const auto t = compress(LoopMatrix::identity(), 1, CompressionKind::toeplitz);
  EXPECT_EQ(t.size_blocks, 2);
  EXPECT_TRUE(t.matrix.isApprox(MatrixXc::Identity(4, 4)));
}

TEST(Compress, UpperUnipotentReadOff) {
  const LoopMatrix g{one, zinv, {}, one};
  const MatrixXc m = compress(g, 1, CompressionKind::toeplitz).matrix;
  MatrixXc expected = MatrixXc::Identity(4, 4);
  expected(0, 3) = 1.0;  // block (0,1) = g_{-1} = [[0,1],[0,0]]
  EXPECT_EQ(m, expected);
}

TEST(Compress, BlockToeplitzStructure) {
  std::mt19937_64 rng(11);
  const auto g = random_loop(rng, -3, 4);
  const int N = 6;
  const MatrixXc m = compress(g, N, CompressionKind::toeplitz).matrix;
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k <= N; ++k) EXPECT_EQ(Matrix2c(m.block(2 * j, 2 * k, 2, 2)), g.coefficient(j - k));
}

TEST(Compress, ShiftedMatchesDirectCompression) {
  std::mt19937_64 rng(12);
  for (int N = 0; N <= 8; ++N) {
    const auto g = random_loop(rng, -3, 3);
    const MatrixXc shifted = compress(g, N, CompressionKind::shifted).matrix;
    EXPECT_EQ(shifted, compress(apply_sigma(g), N, CompressionKind::toeplitz).matrix);
    EXPECT_LT((shifted - compress_shifted_direct(g, N)).norm(), 1e-15);
  }
}

TEST(Compress, HankelBlocks) {
  std::mt19937_64 rng(13);
  const auto g = random_loop(rng, -2, 2);
  const int N = 3;
  const MatrixXc b = compress(g, N, CompressionKind::hankel_B).matrix;
  const MatrixXc c = compress(g, N, CompressionKind::hankel_C).matrix;
  // B: row power j >= 0, column power -(k+1); C: row power -(j+1), column power k.
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k <= N; ++k) {
      EXPECT_EQ(Matrix2c(b.block(2 * j, 2 * k, 2, 2)), g.coefficient(j + k + 1));
      EXPECT_EQ(Matrix2c(c.block(2 * j, 2 * k, 2, 2)), g.coefficient(-j - 1 - k));
    }
}

TEST(DetAstarA, IdentityIsOne) {
  for (int N : {0, 3, 10}) EXPECT_NEAR(det_AstarA(LoopMatrix::identity(), N), 1.0, 1e-15);
}

TEST(DetAstarA, SingleFactor) {
  const auto k2 = elementary(0.5, 1);
  EXPECT_NEAR(det_AstarA(k2, 31), 0.8, 1e-10);
}

TEST(DetAstarA, TwoFactorProductFormula) {
  const auto k2 = elementary(0.2, 2) * elementary(0.3, 1);
  const double expected = 1.0 / (1.09 * 1.04 * 1.04);
  EXPECT_NEAR(det_AstarA(k2, 34), expected, 1e-8);
}

TEST(DetAstarA, ContractionForUnitarySymbols) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int t = 0; t < 10; ++t) {
    LoopMatrix g = LoopMatrix::identity();
    for (int n = 1; n <= 3; ++n) g = elementary({u(rng), u(rng)}, n) * g;
    const double d = det_AstarA(g, 12);
    EXPECT_GT(d, 0.0);
    EXPECT_LE(d, 1.0 + 1e-12);
  }
}

TEST(Birkhoff, PlusHolomorphicUnipotent) {
  const LoopMatrix g{one, 0.3 * z + 0.1 * z * z, 0.2 * z, one + 0.06 * z + 0.02 * z * z * z};
  const auto f = birkhoff(g, 10);
  EXPECT_LT(max_abs_difference(f.g_minus, LoopMatrix::identity()), 1e-12);
  EXPECT_LT((f.g_zero - Matrix2c::Identity()).norm(), 1e-12);
  EXPECT_LT(f.residual, 1e-12);
}

TEST(Birkhoff, SingleZetaLoop) {
  const auto g = elementary(0.5, 1);
  const auto f = birkhoff(g, 8);
  const LoopMatrix expected_minus{one, 0.5 * zinv, {}, one};
  EXPECT_LT(max_abs_difference(f.g_minus, expected_minus), 1e-12);
  EXPECT_NEAR(std::abs(f.g_zero.determinant() - 1.0), 0.0, 1e-12);
  EXPECT_LT(f.residual, 1e-12);
}

TEST(Birkhoff, TruncationIndependence) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int t = 0; t < 5; ++t) {
    LoopMatrix g = LoopMatrix::identity();
    for (int n = 1; n <= 3; ++n) g = elementary({u(rng), u(rng)}, n) * g;
    const auto f1 = birkhoff(g, 30);
    const auto f2 = birkhoff(g, 38);
    EXPECT_LT(max_abs_difference(f1.g_minus, f2.g_minus.truncated(f1.g_minus.min_power(), 0)), 1e-10);
    EXPECT_LT((f1.g_zero - f2.g_zero).norm(), 1e-10);
    EXPECT_LT(max_abs_difference(f1.g_plus, f2.g_plus.truncated(0, 30)), 1e-10);
    EXPECT_LT(f1.residual, 1e-9);
  }
}

TEST(Birkhoff, SingularSymbolIsNotInvertible) {
  // z * diag(1, 1) has index -2: A(g) is not onto.
  const LoopMatrix g{z, {}, {}, zinv};
  try {
    birkhoff(g, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
    EXPECT_EQ(e.gate(), "A");
  }
}

TEST(Triangular, Identity) {
  const auto t = triangular(LoopMatrix::identity(), 4);
  EXPECT_EQ(t.m_zero, cplx(1.0));
  EXPECT_DOUBLE_EQ(t.a_zero, 1.0);
  EXPECT_LT(max_abs_difference(t.l, LoopMatrix::identity()), 1e-15);
  EXPECT_LT(max_abs_difference(t.u, LoopMatrix::identity()), 1e-15);
}

TEST(Triangular, SingleZetaLoop) {
  const auto g = elementary(0.5, 1);
  const auto t = triangular(g, 8);
  EXPECT_LT(max_abs_difference(t.l, LoopMatrix{one, 0.5 * zinv, {}, one}), 1e-12);
  EXPECT_LT(max_abs_difference(t.u, LoopMatrix{one, {}, -0.5 * z, one}), 1e-12);
  EXPECT_NEAR(t.a_zero, std::sqrt(1.25), 1e-12);
  EXPECT_NEAR(std::abs(t.m_zero - 1.0), 0.0, 1e-12);
  EXPECT_LT(t.residual, 1e-12);
}

TEST(Triangular, ConstantPhase) {
  const cplx m = std::polar(1.0, std::numbers::pi / 3);
  const auto t = triangular(LoopMatrix::diagonal(LaurentSeries::constant(m), LaurentSeries::constant(1.0 / m)), 4);
  EXPECT_LT(std::abs(t.m_zero - m), 1e-15);
  EXPECT_NEAR(t.a_zero, 1.0, 1e-15);
}

TEST(Triangular, StructureOnRandomUnitaryLoops) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  for (int t = 0; t < 5; ++t) {
    LoopMatrix g = LoopMatrix::identity();
    for (int n = 1; n <= 3; ++n) g = elementary({u(rng), u(rng)}, n) * g * elementary({u(rng), u(rng)}, n).adjoint();
    const auto f = triangular(g, 40);
    EXPECT_LE(f.l.max_power(), 0);
    EXPECT_GE(f.u.min_power(), 0);
    const Matrix2c l_inf = f.l.coefficient(0);
    const Matrix2c u_0 = f.u.coefficient(0);
    EXPECT_LT(std::abs(l_inf(0, 0) - 1.0) + std::abs(l_inf(1, 1) - 1.0) + std::abs(l_inf(0, 1)), 1e-10);
    EXPECT_LT(std::abs(u_0(0, 0) - 1.0) + std::abs(u_0(1, 1) - 1.0) + std::abs(u_0(1, 0)), 1e-10);
    EXPECT_LT(f.residual, 1e-9);
  }
}

TEST(Triangular, ShiftedGateFails) {
  // Constant Weyl element: A(g) is invertible, (g_0)_11 = 0.
  const LoopMatrix g{{}, LaurentSeries::constant(-1.0), one, {}};
  try {
    triangular(g, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShiftedNotInvertible);
    EXPECT_EQ(e.gate(), "A1");
  }
}

TEST(Winding, Monomials) {
  for (int k = -5; k <= 5; ++k) {
    const auto f = LaurentSeries::monomial(k);
    EXPECT_EQ(winding_number(f), k);
    EXPECT_EQ(numerical_index(f, 20), -k);
  }
}

TEST(Winding, ExponentialOfImaginaryPolynomial) {
  const LaurentSeries chi = cplx(0, 0.7) * (z + zinv) + cplx(0.4, 0) * (z * z - zinv * zinv);
  const CircleGrid grid;
  std::vector<cplx> values;
  for (const cplx w : grid.points()) values.push_back(std::exp(chi(w)));
  const auto f = grid.fourier(values, -60, 60).cleaned(1e-17);
  EXPECT_EQ(winding_number(f, grid), 0);
  EXPECT_EQ(numerical_index(f, 40), 0);
}

TEST(Winding, VanishingSymbol) {
  const CircleGrid grid(8);
  try {
    winding_number(1.0 - z, grid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VanishingSymbol);
  }
}
