#pragma once

// Finite compressions of multiplication operators on L^2(S^1, C^2) and the
// Birkhoff / triangular factorizations built from them.
//
// Basis convention for H^+ : (e1 z^0, e2 z^0, e1 z^1, e2 z^1, ...).
// Basis convention for H^- : (e1 z^-1, e2 z^-1, e1 z^-2, ...).
// With that layout block (j, k) of the Toeplitz compression is the Fourier
// coefficient g_{j-k}.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "loopfact/errors.hpp"
#include "loopfact/laurent.hpp"

namespace loopfact {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

struct BasisVector {
  int component;  // 0 -> e1, 1 -> e2
  int power;
};
using Basis = std::vector<BasisVector>;

inline Basis hardy_plus_basis(int N) {
  Basis out;
  for (int m = 0; m <= N; ++m) out.push_back({0, m}), out.push_back({1, m});
  return out;
}

/// e_i z^{-1}, ..., e_i z^{-(N+1)}.
inline Basis hardy_minus_basis(int N) {
  Basis out;
  for (int m = 1; m <= N + 1; ++m) out.push_back({0, -m}), out.push_back({1, -m});
  return out;
}

/// Matrix of P_rows M_g P_cols in the given bases.
inline MatrixXc compression(const LoopMatrix& g, const Basis& rows, const Basis& cols) {
  MatrixXc m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          g.entry(rows[r].component, cols[c].component)[rows[r].power - cols[c].power];
  return m;
}

// Scalar compressions, used for the dotted operators A, B, C of a scalar symbol.

inline std::vector<int> power_range(int lo, int hi) {
  std::vector<int> out;
  for (int p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

/// -1, -2, ..., -count.
inline std::vector<int> negative_powers(int count) {
  std::vector<int> out;
  for (int p = 1; p <= count; ++p) out.push_back(-p);
  return out;
}

inline MatrixXc scalar_compression(const LaurentSeries& f, const std::vector<int>& row_powers,
                                   const std::vector<int>& col_powers) {
  MatrixXc m(static_cast<Eigen::Index>(row_powers.size()), static_cast<Eigen::Index>(col_powers.size()));
  for (std::size_t r = 0; r < row_powers.size(); ++r)
    for (std::size_t c = 0; c < col_powers.size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = f[row_powers[r] - col_powers[c]];
  return m;
}

inline VectorXc to_vector(const LaurentSeries& f, const std::vector<int>& powers) {
  VectorXc v(static_cast<Eigen::Index>(powers.size()));
  for (std::size_t k = 0; k < powers.size(); ++k) v(static_cast<Eigen::Index>(k)) = f[powers[k]];
  return v;
}

inline LaurentSeries from_vector(const VectorXc& v, const std::vector<int>& powers) {
  LaurentSeries out;
  for (std::size_t k = 0; k < powers.size(); ++k)
    out += LaurentSeries::monomial(powers[k], v(static_cast<Eigen::Index>(k)));
  return out;
}

enum class CompressionKind { toeplitz, shifted, hankel_B, hankel_C };

inline const char* to_string(CompressionKind kind) {
  switch (kind) {
    case CompressionKind::toeplitz: return "toeplitz";
    case CompressionKind::shifted: return "shifted";
    case CompressionKind::hankel_B: return "hankel_B";
    case CompressionKind::hankel_C: return "hankel_C";
  }
  return "?";
}

struct ToeplitzTruncation {
  int size_blocks;  // N + 1
  CompressionKind kind;
  MatrixXc matrix;
  LoopMatrix symbol;
};

/// toeplitz: A_N(g); shifted: A_N(sigma(g)); hankel_B: P_+ M_g P_- and
/// hankel_C: P_- M_g P_+, both restricted to powers in [-N-1, N].
inline ToeplitzTruncation compress(const LoopMatrix& g, int N, CompressionKind kind) {
  if (N < 0) throw std::invalid_argument("compress: N must be >= 0");
  MatrixXc m;
  switch (kind) {
    case CompressionKind::toeplitz: m = compression(g, hardy_plus_basis(N), hardy_plus_basis(N)); break;
    case CompressionKind::shifted: m = compression(apply_sigma(g), hardy_plus_basis(N), hardy_plus_basis(N)); break;
    case CompressionKind::hankel_B: m = compression(g, hardy_plus_basis(N), hardy_minus_basis(N)); break;
    case CompressionKind::hankel_C: m = compression(g, hardy_minus_basis(N), hardy_plus_basis(N)); break;
  }
  return {N + 1, kind, std::move(m), g};
}

/// Direct compression of M_g onto span{e_i z^j : j > 0} + {e1}, ordered as
/// the image of the H^+ basis under e1 z^m -> e2 z^{m+1}, e2 z^m -> e1 z^m.
/// Equal entrywise to compress(g, N, shifted).
inline MatrixXc compress_shifted_direct(const LoopMatrix& g, int N) {
  Basis basis;
  for (int m = 0; m <= N; ++m) basis.push_back({1, m + 1}), basis.push_back({0, m});
  return compression(g, basis, basis);
}

/// Determinant of the (N+1)-block compression of A(g)^* A(g). The infinite
/// column space is summed exactly: a finitely supported symbol only reaches
/// powers up to N + max_power(g).
inline double det_AstarA(const LoopMatrix& g, int N) {
  const int reach = N + std::max(0, g.max_power());
  const MatrixXc a = compression(g, hardy_plus_basis(reach), hardy_plus_basis(N));
  return (a.adjoint() * a).partialPivLu().determinant().real();
}

/// Scalar analogue for a symbol f acting on H = L^2(S^1).
inline double det_AstarA(const LaurentSeries& f, int N) {
  const int reach = N + std::max(0, f.max_power());
  const MatrixXc a = scalar_compression(f, power_range(0, reach), power_range(0, N));
  return (a.adjoint() * a).partialPivLu().determinant().real();
}

/// det A_N(g) of the square section; its modulus tracks det A^*A(g) as N grows.
inline cplx det_truncation(const LoopMatrix& g, int N) {
  return compress(g, N, CompressionKind::toeplitz).matrix.partialPivLu().determinant();
}

/// Multiplies every entry of g by the scalar series s.
inline LoopMatrix scale(const LoopMatrix& g, const LaurentSeries& s) { return {g.a * s, g.b * s, g.c * s, g.d * s}; }

struct BirkhoffFactors {
  LoopMatrix g_minus;  // powers <= 0, identity at infinity
  Matrix2c g_zero;
  LoopMatrix g_plus;  // powers >= 0, identity at 0
  double residual = 0.0;        // max grid distance of g - g_minus g_zero g_plus
  double discarded_mass = 0.0;  // positive-power mass cut from g (g_0 g_+)^{-1}
  double rcond = 0.0;           // reciprocal condition estimate of A_N(g)
};

/// Birkhoff factorization g = g_- g_0 g_+ from the first block column of
/// A_N(g)^{-1}, which is (g_0 g_+)^{-1}.
inline BirkhoffFactors birkhoff(const LoopMatrix& g, int N, double tol = 1e-10, const CircleGrid& grid = CircleGrid{}) {
  const MatrixXc a = compress(g, N, CompressionKind::toeplitz).matrix;
  const auto lu = a.partialPivLu();
  const double rcond = lu.rcond();
  if (!(rcond > tol))
    throw Error(ErrorCode::NotInvertible,
                "A_N(g) numerically singular at N=" + std::to_string(N) + " (rcond " + format_real(rcond) + ")",
                "A");

  const MatrixXc cols = lu.solve(MatrixXc::Identity(a.rows(), 2));
  LoopMatrix m;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      std::vector<cplx> coeffs(static_cast<std::size_t>(N) + 1);
      for (int p = 0; p <= N; ++p) coeffs[static_cast<std::size_t>(p)] = cols(2 * p + i, k);
      m.entry(i, k) = LaurentSeries(0, std::move(coeffs));
    }

  const Matrix2c m0 = m.coefficient(0);
  BirkhoffFactors out;
  out.rcond = rcond;
  out.g_zero = m0.inverse();

  // (g_0 g_+) = M^{-1} = adj(M) / det(M), expanded as a power series.
  const LaurentSeries inv_det = invert_series(m.det().truncated(0, N), N);
  const LoopMatrix adj{m.d, -m.b, -m.c, m.a};
  const LoopMatrix m_inv = scale(adj, inv_det).truncated(0, N);
  out.g_plus = (LoopMatrix::constant(m0) * m_inv).truncated(0, N);

  const LoopMatrix gm = g * m;
  out.g_minus = gm.truncated(gm.min_power(), 0);
  out.discarded_mass = gm.truncated(1, gm.max_power()).max_abs();
  out.residual = grid_distance(g, out.g_minus * LoopMatrix::constant(out.g_zero) * out.g_plus, grid);
  return out;
}

struct TriangularFactors {
  LoopMatrix l;  // powers <= 0, lower unipotent at infinity
  cplx m_zero;   // unit modulus
  double a_zero = 1.0;
  LoopMatrix u;  // powers >= 0, upper unipotent at 0
  double residual = 0.0;
  BirkhoffFactors birkhoff;

  /// diag(m_0 a_0, (m_0 a_0)^{-1}).
  LoopMatrix diagonal() const {
    const cplx d = m_zero * a_zero;
    return LoopMatrix::diagonal(LaurentSeries::constant(d), LaurentSeries::constant(1.0 / d));
  }
  LoopMatrix product() const { return l * diagonal() * u; }
};

/// Triangular factorization g = l m a u. The constant Birkhoff factor is
/// LDU-decomposed with diagonal (d, 1/d); m_0 = d/|d| and a_0 = |d|.
inline TriangularFactors triangular(const LoopMatrix& g, int N, double tol = 1e-10,
                                    const CircleGrid& grid = CircleGrid{}) {
  TriangularFactors out;
  out.birkhoff = birkhoff(g, N, tol, grid);
  const Matrix2c& g0 = out.birkhoff.g_zero;
  const cplx alpha = g0(0, 0);
  if (!(std::abs(alpha) > tol))
    throw Error(ErrorCode::ShiftedNotInvertible, "(g_0)_11 vanishes: shifted Toeplitz operator singular", "A1");

  const LoopMatrix lower{LaurentSeries::constant(1.0), {}, LaurentSeries::constant(g0(1, 0) / alpha),
                         LaurentSeries::constant(1.0)};
  const LoopMatrix upper{LaurentSeries::constant(1.0), LaurentSeries::constant(g0(0, 1) / alpha), {},
                         LaurentSeries::constant(1.0)};
  out.l = out.birkhoff.g_minus * lower;
  out.u = upper * out.birkhoff.g_plus;
  out.a_zero = std::abs(alpha);
  out.m_zero = alpha / out.a_zero;
  out.residual = grid_distance(g, out.product(), grid);
  return out;
}

/// Degree of f : S^1 -> C^* from the accumulated argument over the grid.
inline int winding_number(const LaurentSeries& f, const CircleGrid& grid = CircleGrid{}, double tol = 1e-12) {
  const auto values = grid.sample(f);
  for (const cplx v : values)
    if (std::abs(v) < tol) throw Error(ErrorCode::VanishingSymbol, "symbol vanishes on the grid");
  double total = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) total += std::arg(values[(j + 1) % values.size()] / values[j]);
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// Numerical Fredholm index of the scalar Toeplitz operator T(f): dimension
/// of the numerical kernel of a tall section of T(f) minus that of T(f^*).
inline int numerical_index(const LaurentSeries& f, int N, double tol = 1e-8) {
  const auto kernel_dim = [&](const LaurentSeries& s) {
    const int reach = N + std::max(0, s.max_power()) + std::max(0, -s.min_power());
    const MatrixXc t = scalar_compression(s, power_range(0, reach), power_range(0, N));
    const Eigen::VectorXd sv = Eigen::JacobiSVD<MatrixXc>(t).singularValues();
    const double cutoff = tol * std::max(1.0, sv(0));
    int count = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) < cutoff) ++count;
    return count;
  };
  return kernel_dim(f) - kernel_dim(star(f));
}

}  // namespace loopfact
