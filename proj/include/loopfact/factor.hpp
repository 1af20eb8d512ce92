#pragma once

// Root-subgroup factorization g = k1^* lambda k2 of SU(2) loops: triangular
// data for k2-form loops, the zeta <-> x maps, and the determinant identities
// tying the coordinates to Toeplitz determinants.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "loopfact/errors.hpp"
#include "loopfact/laurent.hpp"
#include "loopfact/rootsub.hpp"
#include "loopfact/toeplitz.hpp"

namespace loopfact {

/// k2 = [[1, x^*], [0, 1]] diag(a2, 1/a2) [[alpha2, beta2], [gamma2, delta2]].
struct K2Triangular {
  double a2 = 1.0;
  LaurentSeries x;  // powers >= 1
  LaurentSeries alpha2, beta2, gamma2, delta2;
  double discarded_mass = 0.0;  // negative-power mass cut from alpha2, beta2

  LaurentSeries x_star() const { return star(x); }
  LoopMatrix unipotent_factor() const { return {alpha2, beta2, gamma2, delta2}; }
  LoopMatrix assemble() const {
    const LoopMatrix left{LaurentSeries::constant(1.0), x_star(), {}, LaurentSeries::constant(1.0)};
    const LoopMatrix mid = LoopMatrix::diagonal(LaurentSeries::constant(a2), LaurentSeries::constant(1.0 / a2));
    return left * mid * unipotent_factor();
  }
};

/// Triangular data of k2 = [[d^*, -c^*], [c, d]] from its second row. x^* is
/// the residue -(c^* / d)_-, with 1/d expanded through z^order.
inline K2Triangular k2_triangular_from_cd(const LaurentSeries& c, const LaurentSeries& d, int order,
                                          double tol = 1e-12) {
  if ((!c.is_zero() && c.min_power() < 0) || (!d.is_zero() && d.min_power() < 0))
    throw Error(ErrorCode::BadNormalization, "c and d must be power series");
  if (std::abs(c[0]) > tol) throw Error(ErrorCode::BadNormalization, "c(0) must vanish");
  if (!(d[0].real() > tol) || std::abs(d[0].imag()) > tol)
    throw Error(ErrorCode::BadNormalization, "d(0) must be positive real");

  K2Triangular out;
  out.a2 = 1.0 / d[0].real();
  out.gamma2 = out.a2 * c;
  out.delta2 = out.a2 * d;
  const LaurentSeries xs = -project(star(c) * invert_series(d, order), Half::minus);
  out.x = star(xs);

  const LaurentSeries alpha = (1.0 / out.a2) * (star(d) - xs * c);
  const LaurentSeries beta = (1.0 / out.a2) * (-star(c) - xs * d);
  out.alpha2 = project(alpha, Half::plus);
  out.beta2 = project(beta, Half::plus);
  out.discarded_mass = std::max(project(alpha, Half::minus).max_abs(), project(beta, Half::minus).max_abs());
  return out;
}

inline K2Triangular k2_triangular(const LoopMatrix& k2, int order, double tol = 1e-12) {
  return k2_triangular_from_cd(k2.c, k2.d, order, tol);
}

/// x^* from the truncated normal equations of
///   T : x^* -> ((c x^*)_-, (d x^*)_-)  against  ((d^*)_-, -c^*),
/// with x^* supported on powers -1..-N.
inline LaurentSeries x_leastsquares(const LaurentSeries& c, const LaurentSeries& d, int N, double tol = 1e-12) {
  const auto neg = negative_powers(N);
  MatrixXc t(2 * N, N);
  t << scalar_compression(c, neg, neg), scalar_compression(d, neg, neg);
  VectorXc rhs(2 * N);
  rhs << to_vector(star(d), neg), to_vector(-star(c), neg);
  const MatrixXc normal = t.adjoint() * t;
  const auto lu = normal.partialPivLu();
  if (!(lu.rcond() > tol)) throw Error(ErrorCode::RankDeficient, "normal equations for x^* are rank deficient");
  return from_vector(lu.solve(t.adjoint() * rhs), neg);
}

namespace detail {

inline K2Triangular k2_from_x_at(const LaurentSeries& x, int N) {
  const LaurentSeries xs = star(x);
  const LaurentSeries zxs = LaurentSeries::monomial(1) * xs;
  const auto pos = power_range(0, N);
  const auto neg = negative_powers(N);
  const MatrixXc c_xs = scalar_compression(xs, neg, pos);
  const MatrixXc c_zxs = scalar_compression(zxs, neg, pos);
  const MatrixXc a_xs = scalar_compression(xs, pos, pos);
  const MatrixXc id_neg = MatrixXc::Identity(N, N);
  const MatrixXc id_pos = MatrixXc::Identity(N + 1, N + 1);

  K2Triangular out;
  out.x = x;
  const VectorXc g_neg = (id_neg + c_zxs * c_zxs.adjoint()).partialPivLu().solve(to_vector(xs, neg));
  out.gamma2 = -star(from_vector(g_neg, neg));
  const VectorXc gamma = to_vector(out.gamma2, pos);
  out.delta2 = star(1.0 + from_vector(c_xs * gamma, neg));
  const double a2_sq = ((id_pos + c_xs.adjoint() * c_xs).partialPivLu().determinant() /
                        (id_pos + c_zxs.adjoint() * c_zxs).partialPivLu().determinant())
                           .real();
  out.a2 = std::sqrt(a2_sq);
  const VectorXc one = to_vector(LaurentSeries::constant(1.0), pos);
  out.alpha2 = (1.0 / a2_sq) * from_vector(one - a_xs * gamma, pos);
  out.beta2 = (-1.0 / a2_sq) * from_vector(a_xs * to_vector(out.delta2, pos), pos);
  return out;
}

}  // namespace detail

/// Triangular data and k2 (via `assemble()`) from x, using truncated Hankel
/// and Toeplitz operators of x^* and z x^*. Results at N and N+8 must agree
/// within tol.
inline K2Triangular k2_from_x(const LaurentSeries& x, int N, double tol = 1e-9) {
  if (!x.is_zero() && x.min_power() < 1) throw std::invalid_argument("k2_from_x: x must have powers >= 1");
  const K2Triangular a = detail::k2_from_x_at(x, N);
  const K2Triangular b = detail::k2_from_x_at(x, N + 8);
  const double moved = std::max({std::abs(a.a2 - b.a2), max_abs_difference(a.alpha2, b.alpha2),
                                 max_abs_difference(a.beta2, b.beta2), max_abs_difference(a.gamma2, b.gamma2),
                                 max_abs_difference(a.delta2, b.delta2)});
  if (moved > tol)
    throw Error(ErrorCode::TruncationUnstable, "k2_from_x moved by " + format_real(moved) + " between N and N+8");
  return a;
}

struct PeelResult {
  RootParams params;
  double initial_distance = 0.0;
  double remainder_distance = 0.0;  // max coefficient of the final remainder minus identity
};

/// Recovers zeta_1..zeta_{n_max} from a k2-form loop by stripping elementary
/// factors from the right: zeta_n = -conj(c_n / d_0) of the current remainder.
inline PeelResult zeta_from_loop(const LoopMatrix& k2, int n_max) {
  PeelResult out;
  out.params.side = Side::lower_zeta;
  const LoopMatrix id = LoopMatrix::identity();
  out.initial_distance = max_abs_difference(k2, id);
  LoopMatrix r = k2;
  for (int n = 1; n <= n_max; ++n) {
    const cplx zeta = -std::conj(r.c[n] / r.d[0]);
    if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()))
      throw Error(ErrorCode::PeelDivergence, "non-finite parameter at n=" + std::to_string(n));
    out.params.values.push_back(zeta);
    if (zeta != cplx{}) r = r * elementary_factor(Side::lower_zeta, zeta, n).adjoint();
  }
  out.remainder_distance = max_abs_difference(r, id);
  if (!std::isfinite(out.remainder_distance) || out.remainder_distance > out.initial_distance + 1e-12)
    throw Error(ErrorCode::PeelDivergence, "remainder moved away from the identity");
  return out;
}

/// Coordinates of g = k1^* diag(lambda, 1/lambda) k2 with
/// lambda = exp(-chi^* + chi_0 + chi) and chi_0 = i * chi0.
struct RootSubgroupData {
  RootParams eta{Side::upper_eta, {}};
  double chi0 = 0.0;  // in (-pi, pi]
  LaurentSeries chi;  // powers >= 1
  RootParams zeta{Side::lower_zeta, {}};
  double residual = 0.0;

  double a1 = 1.0;
  double a2 = 1.0;
  double consistency_defect = 0.0;
};

/// lambda truncated to |power| <= order.
inline LaurentSeries lambda_series(const LaurentSeries& chi, double chi0, int order) {
  const LaurentSeries s = std::polar(1.0, chi0) * exp_series(chi, order) * star(exp_series(-chi, order));
  return s.truncated(-order, order);
}

inline LoopMatrix lambda_loop(const LaurentSeries& chi, double chi0, int order) {
  return LoopMatrix::diagonal(lambda_series(chi, chi0, order), lambda_series(-chi, -chi0, order));
}

inline LoopMatrix compose_rootsub(const RootSubgroupData& data, int order = 48) {
  const LoopMatrix k1 = partial_product(data.eta);
  const LoopMatrix k2 = partial_product(data.zeta);
  return k1.adjoint() * lambda_loop(data.chi, data.chi0, order) * k2;
}

/// l and u of g = compose_rootsub(data) in closed form. With
/// sigma(k1) = [[1, x'^*], [0, 1]] diag(a2', 1/a2') U2' one has a1 = 1/a2',
/// y = z^{-1} x', U1 = sigma(U2') and, for w = y e^{2chi^*} + e^{2chi_0} x^* e^{2chi},
///   l = U1^* diag(e^{-chi^*}, e^{chi^*}) [[1, a1^2 (w)_-], [0, 1]]
///   u = [[1, a2^{-2} e^{-2chi_0} (w)_+], [0, 1]] diag(e^{chi}, e^{-chi}) U2.
inline TriangularFactors assemble_lu(const RootSubgroupData& data, int order = 48) {
  const LoopMatrix k2 = partial_product(data.zeta);
  const LoopMatrix k1s = apply_sigma(partial_product(data.eta));
  const K2Triangular t2 = k2_triangular(k2, order);
  const K2Triangular t1 = k2_triangular(k1s, order);

  const double a1 = 1.0 / t1.a2;
  const double a2 = t2.a2;
  const LaurentSeries y = LaurentSeries::monomial(-1) * t1.x;
  const LoopMatrix u1 = apply_sigma(t1.unipotent_factor());
  const LoopMatrix& u2 = t2.unipotent_factor();

  const LaurentSeries e_chi = exp_series(data.chi, order);
  const LaurentSeries e_mchi = exp_series(-data.chi, order);
  const LaurentSeries e_2chi = exp_series(2.0 * data.chi, order);
  const cplx e_2chi0 = std::polar(1.0, 2.0 * data.chi0);
  const LaurentSeries w = (y * star(e_2chi) + e_2chi0 * t2.x_star() * e_2chi).truncated(-order, order);

  const LaurentSeries one = LaurentSeries::constant(1.0);
  const LoopMatrix e_minus = LoopMatrix::diagonal(star(e_mchi), star(e_chi));
  const LoopMatrix e_plus = LoopMatrix::diagonal(e_chi, e_mchi);
  const LoopMatrix lw{one, a1 * a1 * project(w, Half::minus), {}, one};
  const LoopMatrix uw{one, (1.0 / (a2 * a2 * e_2chi0)) * project(w, Half::plus), {}, one};

  TriangularFactors out;
  out.l = (u1.adjoint() * e_minus * lw).truncated(-order, 0);
  out.u = (uw * e_plus * u2).truncated(0, order);
  out.a_zero = a1 * a2;
  out.m_zero = std::polar(1.0, data.chi0);
  return out;
}

struct FactorizeOptions {
  double tol = 1e-9;        // consistency and unitarity tolerance
  double gate_tol = 1e-10;  // invertibility gates of A(g) and A_1(g)
  double param_cutoff = 1e-12;
};

/// Full root-subgroup factorization of an SU(2) loop at truncation N.
inline RootSubgroupData rootsub_factorize(const LoopMatrix& g, int N, const FactorizeOptions& opt = {},
                                          const CircleGrid& grid = CircleGrid{}) {
  if (unitarity_defect(g, grid) > opt.tol)
    throw Error(ErrorCode::ConsistencyViolation, "loop is not unitary on the grid");
  TriangularFactors tri;
  try {
    tri = triangular(g, N, opt.gate_tol, grid);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInvertible || e.code() == ErrorCode::ShiftedNotInvertible)
      throw Error(ErrorCode::NotFactorizable, e.what(), e.gate());
    throw;
  }

  const auto& pts = grid.points();
  std::vector<double> log_l(pts.size()), log_u(pts.size()), l_sq(pts.size()), u_sq(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    l_sq[j] = std::norm(tri.l.a(pts[j])) + std::norm(tri.l.c(pts[j]));
    u_sq[j] = std::norm(tri.u.c(pts[j])) + std::norm(tri.u.d(pts[j]));
    log_l[j] = std::log(l_sq[j]);
    log_u[j] = std::log(u_sq[j]);
  }

  RootSubgroupData out;
  out.a1 = std::exp(-0.5 * grid.mean(log_l));
  out.a2 = std::exp(0.5 * grid.mean(log_u));
  const double scale = 1.0 / std::pow(out.a1 * out.a2, 2);
  for (std::size_t j = 0; j < pts.size(); ++j)
    out.consistency_defect = std::max(out.consistency_defect, std::abs(l_sq[j] - scale * u_sq[j]));
  if (!(out.consistency_defect <= opt.tol))
    throw Error(ErrorCode::ConsistencyViolation,
                "|l11|^2+|l21|^2 != (a1 a2)^-2 (|u21|^2+|u22|^2), defect " + format_real(out.consistency_defect));

  std::vector<cplx> re_chi(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) re_chi[j] = -std::log(out.a1) - 0.5 * log_l[j];
  const LaurentSeries re_hat = grid.fourier(re_chi, 1, N);
  out.chi = (2.0 * re_hat).cleaned(opt.param_cutoff);
  out.chi0 = std::arg(tri.m_zero);

  const LaurentSeries e_chi = exp_series(out.chi, N);
  const LoopMatrix k1{(out.a1 * e_chi * star(tri.l.a)).truncated(0, N), (out.a1 * e_chi * star(tri.l.c)).truncated(0, N),
                      {}, {}};
  const LaurentSeries c = ((1.0 / out.a2) * e_chi * tri.u.c).truncated(0, N).cleaned(opt.param_cutoff);
  const LaurentSeries d = ((1.0 / out.a2) * e_chi * tri.u.d).truncated(0, N).cleaned(opt.param_cutoff);
  const LoopMatrix k2{star(d), -star(c), c, d};
  const LaurentSeries a = k1.a.cleaned(opt.param_cutoff);
  const LaurentSeries b = k1.b.cleaned(opt.param_cutoff);
  const LoopMatrix k1s = apply_sigma(LoopMatrix{a, b, -star(b), star(a)});

  const auto trim = [&](RootParams p) {
    while (!p.values.empty() && std::abs(p.values.back()) <= opt.param_cutoff) p.values.pop_back();
    return p;
  };
  out.zeta = trim(zeta_from_loop(k2, std::max(0, std::min(N, c.max_power()))).params);
  out.eta = trim(sigma_params(zeta_from_loop(k1s, std::max(0, std::min(N, k1s.c.max_power()))).params));
  out.residual = grid_distance(g, compose_rootsub(out, N), grid);
  return out;
}

/// l12, l22, u12, u11 from l11, l21, u21, u22 and m0 a0. Unitarity of
/// g = l diag(m0 a0, 1/(m0 a0)) u gives, with
/// q = (l21^* / l11 + m0^2 u21^* / u22) / (|l11|^2 + |l21|^2),
///   l12 = -l11 (q)_-,  u12 = -(m0 a0)^{-2} u22 (q)_+,
///   l22 = (1 + l12 l21) / l11,  u11 = (1 + u12 u21) / u22.
struct LUCompletion {
  LaurentSeries l12, l22, u12, u11;
};

inline LUCompletion reconstruct_lu(const LaurentSeries& l11, const LaurentSeries& l21, const LaurentSeries& u21,
                                   const LaurentSeries& u22, double a0, cplx m0 = 1.0,
                                   const CircleGrid& grid = CircleGrid{}, double tol = 1e-12) {
  const auto& pts = grid.points();
  std::vector<cplx> q(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const cplx l11z = l11(pts[j]);
    const cplx u22z = u22(pts[j]);
    const double den = std::norm(l11z) + std::norm(l21(pts[j]));
    if (!(den > tol) || !(std::abs(l11z) > tol) || !(std::abs(u22z) > tol))
      throw Error(ErrorCode::DenominatorVanishes, "reconstruction denominator vanishes on the grid");
    q[j] = (std::conj(l21(pts[j])) / l11z + m0 * m0 * std::conj(u21(pts[j])) / u22z) / den;
  }
  const int K = (grid.point_count() - 1) / 2;
  const LaurentSeries q_hat = grid.fourier(q, -K, K);

  LUCompletion out;
  out.l12 = (-1.0 * l11 * project(q_hat, Half::minus)).truncated(-K, -1);
  out.u12 = (-1.0 / (m0 * m0 * a0 * a0) * u22 * project(q_hat, Half::plus)).truncated(0, K);
  const LaurentSeries inv_l11 = star(invert_series(star(l11), K));
  out.l22 = ((1.0 + out.l12 * l21) * inv_l11).truncated(-K, 0);
  out.u11 = ((1.0 + out.u12 * u21) * invert_series(u22, K)).truncated(0, K);
  return out;
}

// Identity verifiers.

struct IdentityCheck {
  std::string identity_name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_deviation = 0.0;
  bool pass = false;
};

inline IdentityCheck make_check(std::string name, double lhs, double rhs, double tol) {
  const double dev = std::abs(lhs - rhs);
  return {std::move(name), lhs, rhs, dev, dev < tol};
}

/// prod_{n >= first} (1 + |p_n|^2)^{-n}; eta_0 carries weight 0.
inline double root_product_determinant(const RootParams& p) {
  double out = 1.0;
  for (int n = p.first_index(); n <= p.last_index(); ++n) out *= std::pow(1.0 + std::norm(p(n)), -n);
  return out;
}

/// exp(-2 sum j |chi_j|^2)
inline double szego_widom_value(const LaurentSeries& chi) {
  double s = 0.0;
  for (int j = std::max(1, chi.min_power()); j <= chi.max_power(); ++j) s += j * std::norm(chi[j]);
  return std::exp(-2.0 * s);
}

/// det(1 + B B^*)^{-1} for the scalar Hankel operator B = P_+ M_x P_- of x.
inline double hankel_determinant(const LaurentSeries& x, int N) {
  const MatrixXc b = scalar_compression(x, power_range(0, N), negative_powers(N + 1));
  return 1.0 / (MatrixXc::Identity(N + 1, N + 1) + b * b.adjoint()).partialPivLu().determinant().real();
}

/// det A*A(k2) against the product formula, against det(1 + B B^*(x))^{-1}
/// and against itself at N + 8.
inline std::vector<IdentityCheck> verify_k2_determinants(const RootParams& zeta, int N, double tol = 1e-8) {
  const LoopMatrix k2 = partial_product(zeta);
  const double det = det_AstarA(k2, N);
  const K2Triangular t = k2_triangular(k2, N);
  return {make_check("det_AstarA(k2) = prod (1+|zeta_n|^2)^-n", det, root_product_determinant(zeta), tol),
          make_check("det_AstarA(k2) = det(1+BB*(x))^-1", det, hankel_determinant(t.x, N), tol),
          make_check("det_AstarA(k2) converged at N+8", det, det_AstarA(k2, N + 8), 1e-10)};
}

/// det of the compressed A^*A for lambda = exp(-chi^* + chi) as a 2x2
/// diagonal loop diag(lambda, 1/lambda), and for the scalar symbol lambda.
inline std::vector<IdentityCheck> verify_szego_widom(const LaurentSeries& chi, int N, double tol = 1e-9,
                                                     int order = 48) {
  const double target = szego_widom_value(chi);
  const LaurentSeries lam = lambda_series(chi, 0.0, order);
  return {make_check("det_AstarA(diag(lambda, 1/lambda)) = exp(-2 sum j|chi_j|^2)",
                     det_AstarA(lambda_loop(chi, 0.0, order), N), target, tol),
          make_check("det_AstarA(lambda) scalar = exp(-sum j|chi_j|^2)", det_AstarA(lam, N), std::sqrt(target), tol)};
}

/// det A*A(g) = det A*A(k1^{-1}) det A*A(lambda) det A*A(k2) and its closed form.
inline std::vector<IdentityCheck> verify_det_product(const RootSubgroupData& data, int N, double tol = 1e-8,
                                                     int order = 48) {
  const LoopMatrix g = compose_rootsub(data, order);
  const double det_g = det_AstarA(g, N);
  const double d1 = det_AstarA(partial_product(data.eta).adjoint(), N);
  const double dl = det_AstarA(lambda_loop(data.chi, data.chi0, order), N);
  const double d2 = det_AstarA(partial_product(data.zeta), N);
  const double closed = root_product_determinant(data.eta) * szego_widom_value(data.chi) *
                        root_product_determinant(data.zeta);
  return {make_check("det_AstarA(g) = det_AstarA(k1^-1) det_AstarA(lambda) det_AstarA(k2)", det_g, d1 * dl * d2, tol),
          make_check("det_AstarA(g) = prod(1+|eta|^2)^-i exp(-2 sum j|chi_j|^2) prod(1+|zeta|^2)^-k", det_g, closed,
                     tol)};
}

/// Z(k2) = C(k2) A(k2)^{-1} against C((k2)_-) and the Hankel pattern of x^*:
/// C((k2)_-) sends e2 z^k to sum_{m >= 1} x^*_{-(k+m)} e1 z^{-m}. Compared on
/// the leading quarter of the truncation, away from the section boundary.
inline std::vector<IdentityCheck> verify_hankel_structure(const RootParams& zeta, int N, double tol = 1e-8) {
  const LoopMatrix k2 = partial_product(zeta);
  const K2Triangular t = k2_triangular(k2, N);
  const LaurentSeries xs = t.x_star();
  const LoopMatrix k2_minus{LaurentSeries::constant(1.0), xs, {}, LaurentSeries::constant(1.0)};

  const MatrixXc a = compress(k2, N, CompressionKind::toeplitz).matrix;
  const MatrixXc c = compress(k2, N, CompressionKind::hankel_C).matrix;
  const MatrixXc z_mat = a.transpose().partialPivLu().solve(c.transpose()).transpose();
  const MatrixXc c_minus = compress(k2_minus, N, CompressionKind::hankel_C).matrix;

  MatrixXc pattern = MatrixXc::Zero(c.rows(), c.cols());
  for (int m = 1; m <= N + 1; ++m)
    for (int k = 0; k <= N; ++k) pattern(2 * (m - 1), 2 * k + 1) = xs[-(k + m)];

  const Eigen::Index lead = 2 * (N / 4 + 1);
  const double dev_z = (z_mat - c_minus).topLeftCorner(lead, lead).cwiseAbs().maxCoeff();
  const double dev_p = (c_minus - pattern).cwiseAbs().maxCoeff();
  return {make_check("Z(k2) = C((k2)_-)", dev_z, 0.0, tol), make_check("C((k2)_-) = Hankel pattern of x*", dev_p, 0.0, tol)};
}

/// Shifted compression against the compression of sigma(g) built directly.
inline IdentityCheck verify_shifted(const LoopMatrix& g, int N, double tol = 1e-12) {
  const MatrixXc shifted = compress(g, N, CompressionKind::shifted).matrix;
  const double dev = (shifted - compress_shifted_direct(g, N)).cwiseAbs().maxCoeff();
  return make_check("A_N(sigma(g)) = shifted compression of g", dev, 0.0, tol);
}

inline std::vector<IdentityCheck> verify_identities(const RootSubgroupData& data, int N, double tol = 1e-8) {
  std::vector<IdentityCheck> out;
  const auto append = [&](std::vector<IdentityCheck> v) { out.insert(out.end(), v.begin(), v.end()); };
  append(verify_k2_determinants(data.zeta, N, tol));
  const double det_k1 = det_AstarA(partial_product(data.eta), N);
  out.push_back(make_check("det_AstarA(k1) = prod (1+|eta_n|^2)^-n", det_k1, root_product_determinant(data.eta), tol));
  append(verify_szego_widom(data.chi, N, tol));
  append(verify_det_product(data, N, tol));
  append(verify_hankel_structure(data.zeta, N, tol));
  out.push_back(verify_shifted(compose_rootsub(data), N));
  return out;
}

}  // namespace loopfact
