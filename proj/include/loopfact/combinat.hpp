#pragma once

// Combinatorics of the residue x_1^* as a function of zeta: the recursion in
// the number of variables, the positive-integer expansion
//   x_1^* = sum_n zeta_n prod_{k>n}(1+|zeta_k|^2) s_n,
// the signed cluster formula for its monomial coefficients, and the inverse
// formula for zeta_1 in four x-variables.
//
// The recursion is generic in the scalar type. It takes zeta and conj(zeta)
// as two independent sequences (u, v), so the same code evaluates numerically
// (v = conj u), exactly over the rationals, or formally over a polynomial ring.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopfact/errors.hpp"
#include "loopfact/laurent.hpp"
#include "loopfact/rootsub.hpp"

namespace loopfact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Recursion

/// x_1^*(u_I, ..., u_N) for I = 1..N (entry I-1), from
///   x_1^*(w_1..w_{L+1}) = (1 + w_{L+1} v_{L+1})
///       sum_{s>=0} [ sum_{J_1+..+J_{s+1} = s(L+1)+1} prod_l x_1^*(w_{J_l}..w_L) ] v_{L+1}^s.
/// The inner sum is the t^{s(L+1)+1} coefficient of P(t)^{s+1} with
/// P(t) = sum_J x_1^*(w_J..w_L) t^J.
template <class T>
std::vector<T> x1_windows(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) throw std::invalid_argument("x1_windows: u and v differ in length");
  const int n = static_cast<int>(u.size());
  std::vector<T> cur;  // cur[I-1] = x_1^*(u_I..u_M)
  for (int m = 1; m <= n; ++m) {
    const T& un = u[static_cast<std::size_t>(m - 1)];
    const T& vn = v[static_cast<std::size_t>(m - 1)];
    std::vector<T> next(static_cast<std::size_t>(m), T(0));
    const T factor = T(1) + un * vn;
    for (int i = 1; i <= m - 1; ++i) {
      const int len = m - i;  // old window i..m-1
      const int top = (len - 1) * (len + 1) + 1;
      std::vector<T> p(static_cast<std::size_t>(len) + 1, T(0));
      for (int j = 1; j <= len; ++j) p[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(i + j - 2)];
      std::vector<T> power = p;
      T sum(0);
      T vpow(1);
      for (int s = 0; s <= len - 1; ++s) {
        const int target = s * (len + 1) + 1;
        if (target < static_cast<int>(power.size())) sum = sum + power[static_cast<std::size_t>(target)] * vpow;
        if (s == len - 1) break;
        std::vector<T> nextpow(std::min<std::size_t>(power.size() + p.size() - 1, static_cast<std::size_t>(top) + 1),
                               T(0));
        for (std::size_t a = 0; a < power.size(); ++a)
          for (std::size_t b = 1; b < p.size() && a + b < nextpow.size(); ++b)
            nextpow[a + b] = nextpow[a + b] + power[a] * p[b];
        power = std::move(nextpow);
        vpow = vpow * vn;
      }
      next[static_cast<std::size_t>(i - 1)] = factor * sum;
    }
    next[static_cast<std::size_t>(m - 1)] = un;
    cur = std::move(next);
  }
  return cur;
}

template <class T>
T x1_value(std::span<const T> u, std::span<const T> v) {
  if (u.empty()) return T(0);
  return x1_windows(u, v).front();
}

/// x_1^*(zeta_1, ..., zeta_N).
inline cplx x1_recursion(const RootParams& zeta, int N) {
  if (zeta.side != Side::lower_zeta) throw std::invalid_argument("x1_recursion: zeta side required");
  std::vector<cplx> u, v;
  for (int k = 1; k <= N; ++k) u.push_back(zeta(k)), v.push_back(std::conj(zeta(k)));
  return x1_value<cplx>(u, v);
}

/// x = sum_j conj(x_1^*(zeta_j, zeta_{j+1}, ...)) z^j, i.e. star of
/// x^* = sum_j x_1^*(zeta_j, ...) z^{-j}.
inline LaurentSeries full_x(const RootParams& zeta) {
  const int n = std::max(0, zeta.support());
  std::vector<cplx> u, v;
  for (int k = 1; k <= n; ++k) u.push_back(zeta(k)), v.push_back(std::conj(zeta(k)));
  if (n == 0) return {};
  const auto w = x1_windows<cplx>(u, v);
  std::vector<cplx> c;
  for (const cplx x : w) c.push_back(std::conj(x));
  return {1, std::move(c)};
}

// ---------------------------------------------------------------------------
// Scalar types for the recursion

/// a + b eps with eps^2 = 0.
struct Dual {
  cplx a, b;
  Dual(int c = 0) : a(c), b(0.0) {}
  Dual(cplx a_, cplx b_) : a(a_), b(b_) {}
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
};

/// Polynomial in one variable tau with coefficients in R, truncated above
/// degree `max_degree` (products take the smaller bound).
template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries(int c = 0) : coeffs_{R(c)} {}
  TruncatedSeries(std::vector<R> coeffs, int max_degree) : coeffs_(std::move(coeffs)), max_degree_(max_degree) {
    if (static_cast<int>(coeffs_.size()) > max_degree_ + 1) coeffs_.resize(static_cast<std::size_t>(max_degree_) + 1);
  }

  R operator[](int d) const { return d < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(d)] : R(0); }
  int max_degree() const { return max_degree_; }

  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries out;
    out.max_degree_ = std::min(x.max_degree_, y.max_degree_);
    const std::size_t n = std::min(std::max(x.coeffs_.size(), y.coeffs_.size()), static_cast<std::size_t>(out.max_degree_) + 1);
    out.coeffs_.assign(n, R(0));
    for (std::size_t k = 0; k < n; ++k) out.coeffs_[k] = x[static_cast<int>(k)] + y[static_cast<int>(k)];
    return out;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries out;
    out.max_degree_ = std::min(x.max_degree_, y.max_degree_);
    const std::size_t n =
        std::min(x.coeffs_.size() + y.coeffs_.size() - 1, static_cast<std::size_t>(out.max_degree_) + 1);
    out.coeffs_.assign(n, R(0));
    for (std::size_t a = 0; a < x.coeffs_.size(); ++a) {
      if (x.coeffs_[a] == 0) continue;
      for (std::size_t b = 0; b < y.coeffs_.size() && a + b < n; ++b) out.coeffs_[a + b] += x.coeffs_[a] * y.coeffs_[b];
    }
    return out;
  }

 private:
  std::vector<R> coeffs_;
  int max_degree_ = std::numeric_limits<int>::max() / 2;
};

/// Integer polynomials in u_k (zeta_k) and v_k (conj zeta_k), truncated to
/// monomials of u-weight sum_k k * deg_{u_k} <= max_weight.
class FormalPoly {
 public:
  using Var = int;  // k > 0: u_k, k < 0: v_{-k}
  using Monomial = std::vector<std::pair<Var, int>>;

  FormalPoly(int c = 0) {
    if (c != 0) terms_[{}] = c;
  }
  static FormalPoly variable(Var var, int max_weight) {
    FormalPoly p;
    p.max_weight_ = max_weight;
    if (weight({{var, 1}}) <= max_weight) p.terms_[{{var, 1}}] = 1;
    return p;
  }

  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  static int weight(const Monomial& m) {
    int w = 0;
    for (const auto& [var, e] : m)
      if (var > 0) w += var * e;
    return w;
  }

  friend FormalPoly operator+(const FormalPoly& x, const FormalPoly& y) {
    FormalPoly out = x;
    out.max_weight_ = std::min(x.max_weight_, y.max_weight_);
    for (const auto& [m, c] : y.terms_) out.add(m, c);
    out.prune();
    return out;
  }
  friend FormalPoly operator-(const FormalPoly& x, const FormalPoly& y) { return x + FormalPoly(-1) * y; }
  friend FormalPoly operator*(const FormalPoly& x, const FormalPoly& y) {
    FormalPoly out;
    out.max_weight_ = std::min(x.max_weight_, y.max_weight_);
    if (x.is_zero() || y.is_zero()) return out;
    for (const auto& [mx, cx] : x.terms_) {
      const int wx = weight(mx);
      for (const auto& [my, cy] : y.terms_) {
        if (wx + weight(my) > out.max_weight_) continue;
        out.add(multiply(mx, my), cx * cy);
      }
    }
    return out;
  }

  FormalPoly truncated(int max_weight) const {
    FormalPoly out = *this;
    out.max_weight_ = std::min(max_weight_, max_weight);
    out.prune();
    return out;
  }

  /// Terms whose smallest u-index is exactly n.
  FormalPoly with_min_u_index(int n) const {
    FormalPoly out;
    out.max_weight_ = max_weight_;
    for (const auto& [m, c] : terms_) {
      const auto it = std::find_if(m.begin(), m.end(), [](const auto& p) { return p.first > 0; });
      if (it != m.end() && it->first == n) out.terms_[m] = c;
    }
    return out;
  }

  /// Divides every term by u_n; throws if a term lacks u_n.
  FormalPoly divided_by_u(int n) const {
    FormalPoly out;
    out.max_weight_ = max_weight_;
    for (const auto& [key, c] : terms_) {
      Monomial m = key;
      auto it = std::find_if(m.begin(), m.end(), [n](const auto& p) { return p.first == n; });
      if (it == m.end()) throw std::logic_error("FormalPoly::divided_by_u: term without u_n");
      if (--it->second == 0) m.erase(it);
      out.terms_[m] = c;
    }
    return out;
  }

  template <class R>
  R evaluate(const std::map<Var, R>& values) const {
    R acc(0);
    for (const auto& [m, c] : terms_) {
      R term(c);
      for (const auto& [var, e] : m)
        for (int k = 0; k < e; ++k) term *= values.at(var);
      acc += term;
    }
    return acc;
  }

 private:
  static Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
      else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
      else out.emplace_back(a[i].first, a[i].second + b[j].second), ++i, ++j;
    }
    return out;
  }
  void add(const Monomial& m, const BigInt& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = weight(it->first) > max_weight_ ? terms_.erase(it) : std::next(it);
  }

  std::map<Monomial, BigInt> terms_;
  int max_weight_ = std::numeric_limits<int>::max() / 2;
};

// ---------------------------------------------------------------------------
// Index pairs and coefficient tables

/// Nondecreasing i = (i_0, ..., i_L) and j = (j_1, ..., j_L) with
/// sum i - sum j = 1, labelling the monomial zeta_{i_0} prod_l zeta_{i_l} conj(zeta_{j_l}).
struct IndexPair {
  std::vector<int> i;
  std::vector<int> j;

  int L() const noexcept { return static_cast<int>(j.size()); }
  int weight() const noexcept {
    int s = 0;
    for (int x : i) s += x;
    return s;
  }

  /// Throws InvalidIndex unless entries are positive, both lists are
  /// nondecreasing, |i| = |j| + 1 and sum i - sum j = 1.
  void validate() const {
    const auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidIndex, why); };
    if (i.size() != j.size() + 1) fail("i must have exactly one more entry than j");
    for (int x : i)
      if (x <= 0) fail("indices must be positive");
    for (int x : j)
      if (x <= 0) fail("indices must be positive");
    if (!std::is_sorted(i.begin(), i.end()) || !std::is_sorted(j.begin(), j.end())) fail("indices must be nondecreasing");
    int sj = 0;
    for (int x : j) sj += x;
    if (weight() - sj != 1) fail("sum i - sum j must equal 1");
  }

  /// i_{l-1} < j_l for l = 1..L.
  bool satisfies_strict() const {
    for (int l = 1; l <= L(); ++l)
      if (!(i[static_cast<std::size_t>(l - 1)] < j[static_cast<std::size_t>(l - 1)])) return false;
    return true;
  }
  /// i_l <= j_l for l = 1..L.
  bool satisfies_dominance() const {
    for (int l = 1; l <= L(); ++l)
      if (!(i[static_cast<std::size_t>(l)] <= j[static_cast<std::size_t>(l - 1)])) return false;
    return true;
  }
  /// The i and j sets share no value.
  bool is_generic() const {
    for (int x : i)
      if (std::find(j.begin(), j.end(), x) != j.end()) return false;
    return true;
  }

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

inline constexpr int default_weight_cap = 12;

/// Every IndexPair with sum i <= max_weight.
inline std::vector<IndexPair> enumerate_pairs(int max_weight = default_weight_cap) {
  std::vector<IndexPair> out;
  // nondecreasing lists of `count` entries >= lo with sum exactly `total`
  const auto lists = [](int count, int total) {
    std::vector<std::vector<int>> res;
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int left, int lo, int remaining) -> void {
      if (left == 0) {
        if (remaining == 0) res.push_back(cur);
        return;
      }
      for (int x = lo; x * left <= remaining; ++x) {
        cur.push_back(x);
        self(self, left - 1, x, remaining - x);
        cur.pop_back();
      }
    };
    rec(rec, count, 1, total);
    return res;
  };
  for (int w = 1; w <= max_weight; ++w)
    for (int len = 0; len + 1 <= w; ++len)
      for (const auto& i : lists(len + 1, w))
        for (const auto& j : lists(len, w - 1)) out.push_back({i, j});
  return out;
}

/// Monomial coefficients keyed by IndexPair.
using CoefficientTable = std::map<IndexPair, BigInt>;

inline IndexPair monomial_pair(const FormalPoly::Monomial& m) {
  IndexPair p;
  for (const auto& [var, e] : m)
    for (int k = 0; k < e; ++k) (var > 0 ? p.i : p.j).push_back(std::abs(var));
  std::sort(p.i.begin(), p.i.end());
  std::sort(p.j.begin(), p.j.end());
  return p;
}

/// x_1^*(zeta_1..zeta_W) expanded formally, keeping monomials with sum i <= W.
inline FormalPoly x1_formal(int max_weight) {
  std::vector<FormalPoly> u, v;
  for (int k = 1; k <= max_weight; ++k) {
    u.push_back(FormalPoly::variable(k, max_weight));
    v.push_back(FormalPoly::variable(-k, max_weight));
  }
  return x1_value<FormalPoly>(u, v);
}

/// Coefficients of x_1^* = sum c zeta_{i_0} zeta_{i_1} conj(zeta_{j_1}) ...
inline CoefficientTable x1_coefficients(int max_weight = default_weight_cap) {
  const FormalPoly x1 = x1_formal(max_weight);
  CoefficientTable out;
  for (const auto& [m, c] : x1.terms()) out[monomial_pair(m)] = c;
  return out;
}

/// Coefficients c_{i,j} of s_n = sum c zeta_{i_1} conj(zeta_{j_1}) ..., stored
/// with i_0 = n prepended: s_n = P_n / (u_n prod_{k>n}(1 + u_k v_k)), where P_n
/// collects the terms of x_1^* whose smallest zeta-index is n.
inline CoefficientTable s_coefficients(int max_weight = default_weight_cap) {
  const FormalPoly x1 = x1_formal(max_weight);
  CoefficientTable out;
  for (int n = 1; n <= max_weight; ++n) {
    FormalPoly s = x1.with_min_u_index(n).divided_by_u(n).truncated(max_weight - n);
    for (int k = n + 1; k <= max_weight; ++k) {
      const FormalPoly uv = FormalPoly::variable(k, max_weight) * FormalPoly::variable(-k, max_weight);
      // (1 + uv)^{-1} = sum_e (-uv)^e, finite under the weight cutoff
      FormalPoly inv(1), term(1);
      for (int e = 1; e * k <= max_weight; ++e) {
        term = term * (FormalPoly(-1) * uv);
        inv = inv + term;
      }
      s = s * inv;
    }
    for (const auto& [m, c] : s.terms()) {
      IndexPair p = monomial_pair(m);
      p.i.insert(p.i.begin(), n);
      out[p] = c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cluster decompositions

namespace detail {

using Multiset = std::vector<int>;  // sorted

struct ClusterState {
  Multiset i, j;
  friend auto operator<=>(const ClusterState&, const ClusterState&) = default;
};

inline Multiset remove_values(const Multiset& s, const std::vector<int>& values) {
  Multiset out = s;
  for (int v : values) out.erase(std::find(out.begin(), out.end(), v));
  return out;
}

inline std::vector<int> distinct(const Multiset& s) {
  std::vector<int> d = s;
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

/// Strictly increasing alternating chains i_1 < j_1 < i_2 < ... drawn from
/// the state; `i_terminated` selects chains ending on an i (m-clusters) or on
/// a j (n-clusters). Each chain is reported as (i values, j values).
inline void for_each_chain(const ClusterState& st, bool i_terminated,
                           const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit) {
  const auto di = distinct(st.i);
  const auto dj = distinct(st.j);
  std::vector<int> ci, cj;
  const std::function<void(int, bool)> rec = [&](int last, bool next_is_i) {
    const bool ends_ok = next_is_i ? (!cj.empty() && !i_terminated) : i_terminated;
    if (ends_ok) visit(ci, cj);
    const auto& pool = next_is_i ? di : dj;
    for (int v : pool) {
      if (v <= last) continue;
      (next_is_i ? ci : cj).push_back(v);
      rec(v, !next_is_i);
      (next_is_i ? ci : cj).pop_back();
    }
  };
  rec(0, true);
}

/// signed: sum over ordered sequences of n-clusters covering st of (-1)^s;
/// unsigned: their number.
inline BigInt n_cluster_sequences(const ClusterState& st, bool is_signed, std::map<ClusterState, BigInt>& memo) {
  if (st.i.empty() && st.j.empty()) return 1;
  if (st.i.size() != st.j.size()) return 0;
  if (const auto it = memo.find(st); it != memo.end()) return it->second;
  BigInt total = 0;
  for_each_chain(st, false, [&](const std::vector<int>& ci, const std::vector<int>& cj) {
    const BigInt rest = n_cluster_sequences({remove_values(st.i, ci), remove_values(st.j, cj)}, is_signed, memo);
    total += is_signed ? BigInt(-rest) : rest;
  });
  memo[st] = total;
  return total;
}

inline BigInt cluster_sum(const IndexPair& pair, bool is_signed) {
  const ClusterState st{pair.i, pair.j};
  std::map<ClusterState, BigInt> memo;
  BigInt total = 0;
  for_each_chain(st, true, [&](const std::vector<int>& ci, const std::vector<int>& cj) {
    total += n_cluster_sequences({remove_values(st.i, ci), remove_values(st.j, cj)}, is_signed, memo);
  });
  if (is_signed && pair.L() % 2 == 1) total = -total;
  return total;
}

}  // namespace detail

/// sum of (-1)^{s+L} over all ways to split the index multiset into one
/// m-cluster i_1 < j_1 < ... < j_r < i_{r+1} followed by an ordered sequence
/// of s n-clusters i_1 < j_1 < ... < i_r < j_r.
inline BigInt cluster_coefficient(const IndexPair& pair) {
  pair.validate();
  return detail::cluster_sum(pair, true);
}

/// Number of cluster decompositions counted by cluster_coefficient.
inline BigInt cluster_decomposition_count(const IndexPair& pair) {
  pair.validate();
  return detail::cluster_sum(pair, false);
}

// ---------------------------------------------------------------------------
// s_n identities

/// b_n(m) = sum_{k >= n} u_k v_{k+m} (u = zeta, v = conj zeta).
inline cplx b_sum(std::span<const cplx> u, std::span<const cplx> v, int n, int m) {
  cplx s{};
  for (int k = n; k + m <= static_cast<int>(u.size()); ++k)
    s += u[static_cast<std::size_t>(k - 1)] * v[static_cast<std::size_t>(k + m - 1)];
  return s;
}

/// s_n(u, v) from the recursion: P_n = x_1^*|_{u_1..u_{n-1}=0} - x_1^*|_{u_1..u_n=0}
/// divided by u_n prod_{k>n}(1 + u_k v_k). When u_n = 0 the quotient P_n / u_n
/// is the derivative in u_n, taken with dual numbers.
inline cplx s_value(std::span<const cplx> u, std::span<const cplx> v, int n) {
  const int len = static_cast<int>(u.size());
  if (n < 1 || n > len) return {};
  std::vector<Dual> du, dv;
  for (int k = 1; k <= len; ++k) {
    const cplx uk = u[static_cast<std::size_t>(k - 1)];
    du.push_back(k < n ? Dual(0) : (k == n && uk == cplx{} ? Dual(0.0, 1.0) : Dual(uk, 0.0)));
    dv.push_back(Dual(v[static_cast<std::size_t>(k - 1)], 0.0));
  }
  const Dual with_n = x1_value<Dual>(du, dv);
  du[static_cast<std::size_t>(n - 1)] = Dual(0);
  const Dual without_n = x1_value<Dual>(du, dv);
  const cplx un = u[static_cast<std::size_t>(n - 1)];
  cplx p_over_u = un == cplx{} ? (with_n - without_n).b : (with_n - without_n).a / un;
  for (int k = n + 1; k <= len; ++k) p_over_u /= 1.0 + u[static_cast<std::size_t>(k - 1)] * v[static_cast<std::size_t>(k - 1)];
  return p_over_u;
}

/// s_{n,r}: the part of s_n of degree r in u, from u -> t u at `samples` roots of unity.
inline cplx s_part(std::span<const cplx> u, std::span<const cplx> v, int n, int r, int samples = 16) {
  cplx acc{};
  std::vector<cplx> su(u.begin(), u.end());
  for (int k = 0; k < samples; ++k) {
    const cplx t = std::polar(1.0, 2.0 * std::numbers::pi * k / samples);
    for (std::size_t q = 0; q < u.size(); ++q) su[q] = t * u[q];
    acc += s_value(su, v, n) * std::pow(t, -r);
  }
  return acc / static_cast<double>(samples);
}

enum class SIdentity { s2, s_n1, s32 };

/// Max deviation between s_n extracted from the recursion and the closed forms
///   s_2 = b_2(1) + b_3(1),  s_{n,1} = b_n(n-1) + b_{n+1}(n-1),
///   s_{3,2} = b_3(1)^2 + b_4(1)^2 + sum_{i>=4} (u_i v_{i+1})^2 + u_3 v_4 u_4 v_5
///             + 2 sum_{i>=4} u_i v_{i+1} u_{i+1} v_{i+2},
/// for independent sequences u and v.
inline double s_identity_check(std::span<const cplx> u, std::span<const cplx> v, SIdentity which) {
  const int len = static_cast<int>(u.size());
  const auto at = [&](std::span<const cplx> s, int k) { return k >= 1 && k <= len ? s[static_cast<std::size_t>(k - 1)] : cplx{}; };
  switch (which) {
    case SIdentity::s2:
      return std::abs(s_value(u, v, 2) - (b_sum(u, v, 2, 1) + b_sum(u, v, 3, 1)));
    case SIdentity::s_n1: {
      double worst = 0.0;
      for (int n = 2; n <= len; ++n)
        worst = std::max(worst, std::abs(s_part(u, v, n, 1) - (b_sum(u, v, n, n - 1) + b_sum(u, v, n + 1, n - 1))));
      return worst;
    }
    case SIdentity::s32: {
      cplx rhs = std::pow(b_sum(u, v, 3, 1), 2) + std::pow(b_sum(u, v, 4, 1), 2) + at(u, 3) * at(v, 4) * at(u, 4) * at(v, 5);
      for (int i = 4; i <= len; ++i) {
        rhs += std::pow(at(u, i) * at(v, i + 1), 2);
        rhs += 2.0 * at(u, i) * at(v, i + 1) * at(u, i + 1) * at(v, i + 2);
      }
      return std::abs(s_part(u, v, 3, 2) - rhs);
    }
  }
  return 0.0;
}

inline double s_identity_check(const RootParams& zeta, SIdentity which) {
  std::vector<cplx> u, v;
  for (int k = 1; k <= zeta.last_index(); ++k) u.push_back(zeta(k)), v.push_back(std::conj(zeta(k)));
  return s_identity_check(u, v, which);
}

// ---------------------------------------------------------------------------
// zeta_1 from four x-variables

/// zeta_1(x_1..x_4) with x_n = x_1^*(zeta_n, ...) and p_n = prod_{j>n}(1+|zeta_j|^2).
inline cplx zeta1_four_vars(const std::array<cplx, 4>& x, const std::array<double, 4>& p) {
  for (double q : p)
    if (!(q > 0.0)) throw std::invalid_argument("zeta1_four_vars: p_n must be positive");
  const cplx x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  const cplx c3 = std::conj(x3), c4 = std::conj(x4);
  const double p1 = p[0], p2 = p[1], p3 = p[2], p4 = p[3];
  return x1 / p1 - x2 * x2 * c3 / (p1 * p2 * p3) + 2.0 * x2 * x3 * x3 * c3 * c4 / (p1 * p2 * p3 * p3 * p4) -
         2.0 * x2 * x3 * c4 / (p1 * p3 * p4) - std::pow(x3, 4) * c3 * c4 * c4 / (p1 * p2 * p3 * p3 * p3 * p4 * p4) +
         std::pow(x3, 3) * c4 * c4 / (p1 * p3 * p3 * p4 * p4);
}

/// p_n = prod_{j > n} (1 + |zeta_j|^2) for n = 1..count.
inline std::vector<double> tail_products(const RootParams& zeta, int count) {
  std::vector<double> p;
  for (int n = 1; n <= count; ++n) {
    double q = 1.0;
    for (int j = n + 1; j <= zeta.last_index(); ++j) q *= 1.0 + std::norm(zeta(j));
    p.push_back(q);
  }
  return p;
}

}  // namespace loopfact
