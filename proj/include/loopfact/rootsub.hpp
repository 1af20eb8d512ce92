#pragma once

// Loops assembled from root-subgroup parameters and the combinatorial
// expansion of their Taylor coefficients.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "loopfact/laurent.hpp"

namespace loopfact {

enum class Side { lower_zeta, upper_eta };

/// Finite parameter sequence. zeta is 1-indexed (zeta_1, zeta_2, ...), eta is
/// 0-indexed (eta_0, eta_1, ...); `values` always starts at the first index.
struct RootParams {
  Side side = Side::lower_zeta;
  std::vector<cplx> values;

  int first_index() const noexcept { return side == Side::lower_zeta ? 1 : 0; }
  /// Largest index present (first_index() - 1 when empty).
  int last_index() const noexcept { return first_index() + static_cast<int>(values.size()) - 1; }

  /// Parameter at index n, zero outside the stored window.
  cplx operator()(int n) const noexcept {
    const int k = n - first_index();
    if (k < 0 || k >= static_cast<int>(values.size())) return {};
    return values[static_cast<std::size_t>(k)];
  }

  /// Largest index carrying a nonzero value; first_index() - 1 if all vanish.
  int support() const noexcept {
    for (int k = static_cast<int>(values.size()) - 1; k >= 0; --k)
      if (values[static_cast<std::size_t>(k)] != cplx{}) return first_index() + k;
    return first_index() - 1;
  }

  double l2_norm_sq() const noexcept {
    double s = 0.0;
    for (const cplx v : values) s += std::norm(v);
    return s;
  }

  /// sum n |zeta_n|^2
  double w_half_norm_sq() const noexcept {
    double s = 0.0;
    for (int n = first_index(); n <= last_index(); ++n) s += n * std::norm((*this)(n));
    return s;
  }

  friend bool operator==(const RootParams&, const RootParams&) = default;
};

inline RootParams zeta_params(std::vector<cplx> values) { return {Side::lower_zeta, std::move(values)}; }
inline RootParams eta_params(std::vector<cplx> values) { return {Side::upper_eta, std::move(values)}; }

/// a(zeta) = (1 + |zeta|^2)^{-1/2}
inline double a_factor(cplx zeta) noexcept { return 1.0 / std::sqrt(1.0 + std::norm(zeta)); }

/// zeta side: a(zeta) [[1, zeta z^-n], [-conj(zeta) z^n, 1]]
/// eta side:  a(eta)  [[1, -conj(eta) z^n], [eta z^-n, 1]]
inline LoopMatrix elementary_factor(Side side, cplx value, int n) {
  const double a = a_factor(value);
  const auto diag = LaurentSeries::constant(a);
  if (side == Side::lower_zeta)
    return {diag, LaurentSeries::monomial(-n, a * value), LaurentSeries::monomial(n, -a * std::conj(value)), diag};
  return {diag, LaurentSeries::monomial(n, -a * std::conj(value)), LaurentSeries::monomial(-n, a * value), diag};
}

/// Ordered product of the elementary factors with index N leftmost down to
/// the first index. Indices past the stored values contribute the identity.
inline LoopMatrix partial_product(const RootParams& params, int N) {
  LoopMatrix out = LoopMatrix::identity();
  for (int n = params.first_index(); n <= N; ++n) {
    const cplx v = params(n);
    if (v != cplx{}) out = elementary_factor(params.side, v, n) * out;
  }
  return out;
}

inline LoopMatrix partial_product(const RootParams& params) { return partial_product(params, params.last_index()); }

/// prod a(zeta_n) over the stored values.
inline double a_product(const RootParams& params) {
  double p = 1.0;
  for (const cplx v : params.values) p *= a_factor(v);
  return p;
}

struct GammaDelta {
  std::vector<cplx> gamma;  // gamma[n] = gamma_{2,n}
  std::vector<cplx> delta;  // delta[n] = delta_{2,n}
};

/// Taylor coefficients of gamma_2 = (2,1) entry and delta_2 = (2,2) entry of
/// the zeta product divided by prod a(zeta_n), as signed sums over strictly
/// increasing index chains i_1 < j_1 < i_2 < ...:
///   gamma_{2,n} = sum (-conj zeta_{i_1}) zeta_{j_1} ... (-conj zeta_{i_{r+1}}),  sum i - sum j = n
///   delta_{2,n} = sum zeta_{i_1} (-conj zeta_{j_1}) ... (-conj zeta_{j_r}),       sum j - sum i = n
inline GammaDelta gammadelta_coeffs(const RootParams& zeta, int n_max) {
  if (zeta.side != Side::lower_zeta) throw std::invalid_argument("gammadelta_coeffs: zeta side required");
  GammaDelta out{std::vector<cplx>(static_cast<std::size_t>(n_max) + 1),
                 std::vector<cplx>(static_cast<std::size_t>(n_max) + 1)};
  const int top = zeta.support();

  // w = (sum of odd positions) - (sum of even positions); pg/pd are the gamma/delta words.
  std::function<void(int, int, int, cplx, cplx)> walk = [&](int last, int length, int w, cplx pg, cplx pd) {
    if (length % 2 == 1) {
      if (w >= 0 && w <= n_max) out.gamma[static_cast<std::size_t>(w)] += pg;
    } else if (-w >= 0 && -w <= n_max) {
      out.delta[static_cast<std::size_t>(-w)] += pd;
    }
    for (int k = last + 1; k <= top; ++k) {
      const cplx v = zeta(k);
      if (v == cplx{}) continue;
      if (length % 2 == 0)
        walk(k, length + 1, w + k, pg * -std::conj(v), pd * v);
      else
        walk(k, length + 1, w - k, pg * v, pd * -std::conj(v));
    }
  };
  walk(0, 0, 0, 1.0, 1.0);
  return out;
}

/// sum over partitions of n of ||zeta||_2^{2 * length}; bounds |delta_{2,n}|.
inline double coefficient_bound(const RootParams& zeta, int n) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  const double x = zeta.l2_norm_sq();
  // count[m][k] = number of partitions of m into exactly k parts
  std::vector<std::vector<double>> count(static_cast<std::size_t>(n) + 1,
                                         std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
  count[0][0] = 1.0;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k)
      count[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
          count[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
          (m - k >= k ? count[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)] : 0.0);
  double bound = 0.0;
  for (int k = 1; k <= n; ++k) bound += count[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * std::pow(x, k);
  return bound;
}

/// The eta sequence with sigma(k_2(zeta)) = k_1(eta): eta_{n-1} = zeta_n.
inline RootParams sigma_params(const RootParams& params) {
  return {params.side == Side::lower_zeta ? Side::upper_eta : Side::lower_zeta, params.values};
}

}  // namespace loopfact
