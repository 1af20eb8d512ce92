#pragma once

// Exact-support arithmetic for Laurent series on the unit circle and for
// 2x2 loops whose entries are such series.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "loopfact/errors.hpp"

namespace loopfact {

using cplx = std::complex<double>;

/// Finitely supported Laurent series  sum_k c_k z^k.
///
/// The coefficients are kept in one contiguous window beginning at
/// `min_power()`. Leading and trailing coefficients that are exactly zero are
/// trimmed, so the zero series stores nothing. Use `cleaned()` for numerical
/// thresholding.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  LaurentSeries(int min_power, std::vector<cplx> coefficients)
      : min_power_(min_power), coeffs_(std::move(coefficients)) {
    trim();
  }

  static LaurentSeries constant(cplx value) { return {0, {value}}; }
  static LaurentSeries monomial(int power, cplx value = 1.0) { return {power, {value}}; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest stored power (0 for the zero series).
  int min_power() const noexcept { return min_power_; }
  /// Highest stored power (-1 for the zero series).
  int max_power() const noexcept { return min_power_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Largest |power| present; 0 for the zero series.
  int max_abs_power() const noexcept {
    return is_zero() ? 0 : std::max(std::abs(min_power()), std::abs(max_power()));
  }
  std::span<const cplx> coefficients() const noexcept { return coeffs_; }

  cplx operator[](int power) const noexcept {
    const int k = power - min_power_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
  }

  cplx operator()(cplx z) const {
    if (is_zero()) return {};
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc * std::pow(z, min_power_);
  }

  /// Keeps only the powers in [lo, hi].
  LaurentSeries truncated(int lo, int hi) const {
    if (is_zero() || lo > hi) return {};
    const int from = std::max(lo, min_power());
    const int to = std::min(hi, max_power());
    if (from > to) return {};
    std::vector<cplx> out(coeffs_.begin() + (from - min_power_), coeffs_.begin() + (to - min_power_ + 1));
    return {from, std::move(out)};
  }

  /// Zeroes every coefficient with magnitude <= tol, then trims.
  LaurentSeries cleaned(double tol) const {
    std::vector<cplx> out = coeffs_;
    for (auto& c : out)
      if (std::abs(c) <= tol) c = 0.0;
    return {min_power_, std::move(out)};
  }

  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  double l2_norm() const noexcept {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
  }

  LaurentSeries& operator+=(const LaurentSeries& rhs) { return *this = combine(*this, rhs, 1.0); }
  LaurentSeries& operator-=(const LaurentSeries& rhs) { return *this = combine(*this, rhs, -1.0); }
  LaurentSeries& operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return combine(f, g, 1.0); }
  friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return combine(f, g, -1.0); }
  friend LaurentSeries operator-(const LaurentSeries& f) { return f * cplx(-1.0); }
  friend LaurentSeries operator*(LaurentSeries f, cplx s) { return f *= s; }
  friend LaurentSeries operator*(cplx s, LaurentSeries f) { return f *= s; }
  friend LaurentSeries operator+(const LaurentSeries& f, cplx s) { return f + constant(s); }
  friend LaurentSeries operator+(cplx s, const LaurentSeries& f) { return f + constant(s); }
  friend LaurentSeries operator-(const LaurentSeries& f, cplx s) { return f - constant(s); }
  friend LaurentSeries operator-(cplx s, const LaurentSeries& f) { return constant(s) - f; }

  /// Exact convolution of coefficient sequences.
  friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<cplx> out(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return {f.min_power_ + g.min_power_, std::move(out)};
  }

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  static LaurentSeries combine(const LaurentSeries& f, const LaurentSeries& g, double sign) {
    if (f.is_zero()) return g * cplx(sign);
    if (g.is_zero()) return f;
    const int lo = std::min(f.min_power(), g.min_power());
    const int hi = std::max(f.max_power(), g.max_power());
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (int p = f.min_power(); p <= f.max_power(); ++p) out[p - lo] += f[p];
    for (int p = g.min_power(); p <= g.max_power(); ++p) out[p - lo] += sign * g[p];
    return {lo, std::move(out)};
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == cplx{}) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      min_power_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == cplx{}) --last;
    coeffs_ = std::vector<cplx>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    min_power_ += static_cast<int>(first);
  }

  int min_power_ = 0;
  std::vector<cplx> coeffs_;
};

inline double max_abs_difference(const LaurentSeries& f, const LaurentSeries& g) { return (f - g).max_abs(); }

/// f* = sum conj(f_n) z^{-n}; on the circle this is the pointwise conjugate.
inline LaurentSeries star(const LaurentSeries& f) {
  if (f.is_zero()) return {};
  auto c = f.coefficients();
  std::vector<cplx> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[c.size() - 1 - k] = std::conj(c[k]);
  return {-f.max_power(), std::move(out)};
}

enum class Half { plus, minus };

/// Hardy projection: `plus` keeps powers >= 0, `minus` keeps powers < 0.
inline LaurentSeries project(const LaurentSeries& f, Half half) {
  if (f.is_zero()) return {};
  return half == Half::plus ? f.truncated(0, f.max_power()) : f.truncated(f.min_power(), -1);
}

/// Taylor expansion of 1/d about 0 through z^order. d must be a power series.
inline LaurentSeries invert_series(const LaurentSeries& d, int order, double tol = 1e-14) {
  if (!d.is_zero() && d.min_power() < 0) throw std::invalid_argument("invert_series: d has negative powers");
  if (std::abs(d[0]) < tol) throw Error(ErrorCode::ZeroConstantTerm, "invert_series: |d(0)| below tolerance");
  if (order < 0) return {};
  std::vector<cplx> inv(static_cast<std::size_t>(order) + 1);
  inv[0] = 1.0 / d[0];
  for (int k = 1; k <= order; ++k) {
    cplx acc{};
    for (int m = 1; m <= std::min(k, d.max_power()); ++m) acc += d[m] * inv[static_cast<std::size_t>(k - m)];
    inv[static_cast<std::size_t>(k)] = -acc * inv[0];
  }
  return {0, std::move(inv)};
}

/// exp(f) truncated at |power| <= order, for f supported on one side of 0
/// (all powers >= 0 or all powers <= 0).
inline LaurentSeries exp_series(const LaurentSeries& f, int order) {
  if (f.is_zero()) return LaurentSeries::constant(1.0);
  if (f.max_power() <= 0 && f.min_power() < 0) return star(exp_series(star(f), order));
  if (f.min_power() < 0) throw std::invalid_argument("exp_series: mixed-sign support");
  // n g_n = sum_{k=1}^n k f_k g_{n-k}
  std::vector<cplx> g(static_cast<std::size_t>(order) + 1);
  g[0] = std::exp(f[0]);
  for (int n = 1; n <= order; ++n) {
    cplx acc{};
    for (int k = 1; k <= std::min(n, f.max_power()); ++k) acc += double(k) * f[k] * g[static_cast<std::size_t>(n - k)];
    g[static_cast<std::size_t>(n)] = acc / double(n);
  }
  return {0, std::move(g)};
}

/// Conjugate function on Fourier coefficients: coefficient n is multiplied by
/// -i sign(n). For real-valued f, f + i H(f) = f_0 + 2 P_{>0} f.
inline LaurentSeries hilbert_transform(const LaurentSeries& f) {
  if (f.is_zero()) return {};
  std::vector<cplx> out(f.coefficients().begin(), f.coefficients().end());
  for (int p = f.min_power(); p <= f.max_power(); ++p) {
    const double s = p > 0 ? 1.0 : (p < 0 ? -1.0 : 0.0);
    out[static_cast<std::size_t>(p - f.min_power())] *= cplx(0.0, -s);
  }
  return {f.min_power(), std::move(out)};
}

using Matrix2c = Eigen::Matrix2cd;

/// 2x2 loop with Laurent-series entries, named row-major:
/// a = (1,1), b = (1,2), c = (2,1), d = (2,2).
struct LoopMatrix {
  LaurentSeries a, b, c, d;

  static LoopMatrix identity() {
    return {LaurentSeries::constant(1.0), {}, {}, LaurentSeries::constant(1.0)};
  }
  static LoopMatrix constant(const Matrix2c& m) {
    return {LaurentSeries::constant(m(0, 0)), LaurentSeries::constant(m(0, 1)), LaurentSeries::constant(m(1, 0)),
            LaurentSeries::constant(m(1, 1))};
  }
  static LoopMatrix diagonal(LaurentSeries p, LaurentSeries q) { return {std::move(p), {}, {}, std::move(q)}; }

  const LaurentSeries& entry(int row, int col) const {
    return row == 0 ? (col == 0 ? a : b) : (col == 0 ? c : d);
  }
  LaurentSeries& entry(int row, int col) { return row == 0 ? (col == 0 ? a : b) : (col == 0 ? c : d); }

  LaurentSeries det() const { return a * d - b * c; }

  /// Pointwise adjoint on the circle: [[a*, c*], [b*, d*]].
  LoopMatrix adjoint() const { return {star(a), star(c), star(b), star(d)}; }

  /// Fourier coefficient g_n as a constant matrix.
  Matrix2c coefficient(int power) const {
    Matrix2c m;
    m << a[power], b[power], c[power], d[power];
    return m;
  }

  Matrix2c operator()(cplx z) const {
    Matrix2c m;
    m << a(z), b(z), c(z), d(z);
    return m;
  }

  /// Lowest power over all entries (0 for the zero loop).
  int min_power() const {
    std::optional<int> m;
    for (const auto* e : {&a, &b, &c, &d})
      if (!e->is_zero()) m = std::min(m.value_or(e->min_power()), e->min_power());
    return m.value_or(0);
  }
  int max_power() const {
    std::optional<int> m;
    for (const auto* e : {&a, &b, &c, &d})
      if (!e->is_zero()) m = std::max(m.value_or(e->max_power()), e->max_power());
    return m.value_or(0);
  }
  int max_abs_power() const { return std::max(std::abs(min_power()), std::abs(max_power())); }

  LoopMatrix truncated(int lo, int hi) const {
    return {a.truncated(lo, hi), b.truncated(lo, hi), c.truncated(lo, hi), d.truncated(lo, hi)};
  }
  LoopMatrix cleaned(double tol) const { return {a.cleaned(tol), b.cleaned(tol), c.cleaned(tol), d.cleaned(tol)}; }

  double max_abs() const { return std::max({a.max_abs(), b.max_abs(), c.max_abs(), d.max_abs()}); }

  friend LoopMatrix operator*(const LoopMatrix& x, const LoopMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend LoopMatrix operator+(const LoopMatrix& x, const LoopMatrix& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend LoopMatrix operator-(const LoopMatrix& x, const LoopMatrix& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend LoopMatrix operator*(cplx s, const LoopMatrix& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend bool operator==(const LoopMatrix&, const LoopMatrix&) = default;
};

inline double max_abs_difference(const LoopMatrix& x, const LoopMatrix& y) { return (x - y).max_abs(); }

/// Outer involution [[a,b],[c,d]] -> [[d, c z^-1], [b z, a]].
inline LoopMatrix apply_sigma(const LoopMatrix& g) {
  const auto zinv = LaurentSeries::monomial(-1);
  const auto z = LaurentSeries::monomial(1);
  return {g.d, g.c * zinv, g.b * z, g.a};
}

/// The point_count-th roots of unity, with sampling and discrete Fourier
/// analysis of series on them.
class CircleGrid {
 public:
  static constexpr int default_point_count = 512;

  explicit CircleGrid(int point_count = default_point_count) : points_(static_cast<std::size_t>(point_count)) {
    if (point_count <= 0) throw std::invalid_argument("CircleGrid: point_count must be positive");
    for (int j = 0; j < point_count; ++j) points_[static_cast<std::size_t>(j)] = std::polar(1.0, theta(j));
  }

  int point_count() const noexcept { return static_cast<int>(points_.size()); }
  std::span<const cplx> points() const noexcept { return points_; }
  double theta(int j) const noexcept { return 2.0 * std::numbers::pi * j / static_cast<double>(points_.size()); }

  /// True when a series supported in [-max_power, max_power] is resolved
  /// without aliasing.
  bool resolves(int max_abs_power) const noexcept { return point_count() >= 2 * max_abs_power + 1; }

  std::vector<cplx> sample(const LaurentSeries& f) const {
    std::vector<cplx> out(points_.size());
    for (std::size_t j = 0; j < points_.size(); ++j) out[j] = f(points_[j]);
    return out;
  }

  /// Discrete inverse transform restricted to powers in [lo, hi].
  LaurentSeries fourier(std::span<const cplx> values, int lo, int hi) const {
    if (values.size() != points_.size()) throw std::invalid_argument("CircleGrid::fourier: size mismatch");
    if (lo > hi) return {};
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    const double inv_m = 1.0 / static_cast<double>(points_.size());
    for (int p = lo; p <= hi; ++p) {
      cplx acc{};
      for (std::size_t j = 0; j < points_.size(); ++j) {
        // z_j^{-p} via the index arithmetic keeps the phases exact
        const long idx = ((-static_cast<long>(p) * static_cast<long>(j)) % static_cast<long>(points_.size()) +
                          static_cast<long>(points_.size())) %
                         static_cast<long>(points_.size());
        acc += values[j] * points_[static_cast<std::size_t>(idx)];
      }
      out[static_cast<std::size_t>(p - lo)] = acc * inv_m;
    }
    return {lo, std::move(out)};
  }

  double mean(std::span<const double> values) const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
  }

 private:
  std::vector<cplx> points_;
};

/// max over grid points of || g(z)^* g(z) - I ||_2.
inline double unitarity_defect(const LoopMatrix& g, const CircleGrid& grid) {
  double worst = 0.0;
  for (const cplx z : grid.points()) {
    const Matrix2c m = g(z);
    const Matrix2c h = m.adjoint() * m - Matrix2c::Identity();
    Eigen::SelfAdjointEigenSolver<Matrix2c> es(h, Eigen::EigenvaluesOnly);
    worst = std::max(worst, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return worst;
}

/// max over grid points of the operator-norm distance || x(z) - y(z) ||_2.
inline double grid_distance(const LoopMatrix& x, const LoopMatrix& y, const CircleGrid& grid) {
  const LoopMatrix diff = x - y;
  double worst = 0.0;
  for (const cplx z : grid.points()) {
    Eigen::JacobiSVD<Matrix2c> svd(diff(z));
    worst = std::max(worst, svd.singularValues()(0));
  }
  return worst;
}

}  // namespace loopfact
