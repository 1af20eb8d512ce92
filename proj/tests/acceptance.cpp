// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "loopfact/combinat.hpp"
#include "loopfact/factor.hpp"
#include "loopfact/random.hpp"
#include "loopfact/toeplitz.hpp"

using namespace loopfact;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double param_diff(const RootParams& p, const RootParams& q) {
  double m = 0.0;
  for (int k = std::min(p.first_index(), q.first_index()); k <= std::max(p.last_index(), q.last_index()); ++k)
    m = std::max(m, std::abs(p(k) - q(k)));
  return m;
}

const LaurentSeries z = LaurentSeries::monomial(1);
const LaurentSeries zinv = LaurentSeries::monomial(-1);

void determinant_identity(Outcome& o) {
  Rng rng(1001);
  double worst_prod = 0.0, worst_hankel = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int support = 1 + t % 8;
    const RootParams zeta = random_params(rng, Side::lower_zeta, support, 0.9, DecayProfile::rapid);
    const int N = support + 32;
    const LoopMatrix k2 = partial_product(zeta);
    const double det = det_AstarA(k2, N);
    worst_prod = std::max(worst_prod, std::abs(det - root_product_determinant(zeta)));
    worst_hankel = std::max(worst_hankel, std::abs(det - hankel_determinant(k2_triangular(k2, N).x, N)));
  }
  o.require(worst_prod < 1e-8, "product formula");
  o.require(worst_hankel < 1e-8, "Hankel determinant");
  o.detail << "20 loops, max |det - prod| " << worst_prod << ", max |det - det(1+BB*)^-1| " << worst_hankel;
}

void szego_widom(Outcome& o) {
  Rng rng(1002);
  double worst = 0.0, worst_scalar = 0.0;
  for (int t = 0; t < 20; ++t) {
    const LaurentSeries chi = random_chi(rng, 1 + t % 4, 0.4);
    const double target = szego_widom_value(chi);
    worst = std::max(worst, std::abs(det_AstarA(lambda_loop(chi, 0.0, 64), 64) - target));
    worst_scalar = std::max(worst_scalar, std::abs(det_AstarA(lambda_series(chi, 0.0, 64), 64) - std::sqrt(target)));
  }
  const LaurentSeries spot = 0.3 * z;
  const double spot_dev = std::abs(det_AstarA(lambda_loop(spot, 0.0, 64), 64) - std::exp(-0.18));
  o.require(worst < 1e-9, "matrix symbol");
  o.require(worst_scalar < 1e-9, "scalar symbol");
  o.require(spot_dev < 1e-9, "spot value chi = 0.3z");
  o.detail << "N=64, max dev " << worst << ", scalar exp(-sum) dev " << worst_scalar << ", spot exp(-0.18) dev "
           << spot_dev;
}

void product_formula(Outcome& o) {
  Rng rng(1003);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const RootSubgroupData data = random_rootsub_data(rng, 1 + t % 4, 0.8, 3, 0.3);
    for (const auto& c : verify_det_product(data, 48, 1e-8)) {
      worst = std::max(worst, c.abs_deviation);
      o.require(c.pass, c.identity_name);
    }
  }
  o.detail << "20 composed loops, max dev " << worst;
}

void round_trips(Outcome& o) {
  double routes = 0.0, peel = 0.0, factor = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(2000 + seed);
    const int support = 1 + static_cast<int>(seed % 6);
    const RootParams zeta = random_params(rng, Side::lower_zeta, support, 0.9, DecayProfile::rapid);
    const LaurentSeries x = k2_triangular(partial_product(zeta), 48).x;
    routes = std::max(routes, max_abs_difference(full_x(zeta), x));

    const K2Triangular back = k2_from_x(x, 48);
    peel = std::max(peel, param_diff(zeta_from_loop(back.assemble(), support).params, zeta));

    const RootSubgroupData data = random_rootsub_data(rng, 1 + static_cast<int>(seed % 4), 0.8, 3, 0.3);
    const RootSubgroupData got = rootsub_factorize(compose_rootsub(data), 48);
    factor = std::max({factor, param_diff(got.eta, data.eta), param_diff(got.zeta, data.zeta),
                       max_abs_difference(got.chi, data.chi),
                       std::abs(std::polar(1.0, got.chi0) - std::polar(1.0, data.chi0))});
  }
  o.require(routes < 1e-10, "zeta -> x routes");
  o.require(peel < 1e-9, "x -> k2 -> zeta");
  o.require(factor < 1e-8, "compose -> factorize");
  o.detail << "50 seeds each, x routes " << routes << ", peel " << peel << ", factorize " << factor;
}

void factorization_structure(Outcome& o) {
  Rng rng(1005);
  const CircleGrid grid;
  double worst_res = 0.0, worst_norm = 0.0, worst_a = 0.0, worst_m = 0.0, worst_cons = 0.0;
  for (int t = 0; t < 20; ++t) {
    const RootSubgroupData data = random_rootsub_data(rng, 1 + t % 4, 0.8, 3, 0.3);
    const LoopMatrix g = compose_rootsub(data);
    const TriangularFactors tri = triangular(g, 48, 1e-10, grid);
    o.require(tri.l.max_power() <= 0, "l holomorphic outside the disk");
    o.require(tri.u.min_power() >= 0, "u holomorphic inside the disk");
    worst_norm = std::max({worst_norm, std::abs(tri.l.a[0] - 1.0), std::abs(tri.l.b[0]), std::abs(tri.l.d[0] - 1.0),
                           std::abs(tri.u.a[0] - 1.0), std::abs(tri.u.c[0]), std::abs(tri.u.d[0] - 1.0)});
    worst_res = std::max(worst_res, tri.residual);
    const RootSubgroupData got = rootsub_factorize(g, 48, {}, grid);
    worst_a = std::max({worst_a, std::abs(tri.a_zero - got.a1 * got.a2), std::abs(tri.a_zero - assemble_lu(data).a_zero)});
    worst_m = std::max(worst_m, std::abs(tri.m_zero - std::polar(1.0, data.chi0)));
    worst_cons = std::max(worst_cons, got.consistency_defect);
  }
  o.require(worst_norm < 1e-9, "unipotent normalizations");
  o.require(worst_res < 1e-9, "residual");
  o.require(worst_a < 1e-9, "a0 = a1 a2");
  o.require(worst_m < 1e-9, "m0 = exp(chi0)");
  o.require(worst_cons < 1e-9, "consistency identity");
  o.detail << "20 loops, residual " << worst_res << ", normalization " << worst_norm << ", a0 " << worst_a << ", m0 "
           << worst_m << ", consistency " << worst_cons;
}

void reconstruction(Outcome& o) {
  Rng rng(1006);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const RootSubgroupData data = random_rootsub_data(rng, 1 + t % 4, 0.8, 3, 0.3);
    const TriangularFactors tri = triangular(compose_rootsub(data), 48);
    const LUCompletion r = reconstruct_lu(tri.l.a, tri.l.c, tri.u.c, tri.u.d, tri.a_zero, tri.m_zero);
    worst = std::max({worst, max_abs_difference(r.l12, tri.l.b), max_abs_difference(r.l22, tri.l.d),
                      max_abs_difference(r.u12, tri.u.b), max_abs_difference(r.u11, tri.u.a)});
  }
  o.require(worst < 1e-9, "reconstruct_lu");
  o.detail << "20 loops, max dev " << worst;
}

void combinatorics(Outcome& o) {
  Rng rng(1007);
  double gd_dev = 0.0;
  for (int t = 0; t < 20; ++t) {
    const RootParams zeta = random_params(rng, Side::lower_zeta, 1 + t % 5, 0.9, DecayProfile::sobolev_half);
    const LoopMatrix g = partial_product(zeta);
    const double a = a_product(zeta);
    const GammaDelta gd = gammadelta_coeffs(zeta, 20);
    for (int n = 0; n <= 20; ++n)
      gd_dev = std::max({gd_dev, std::abs(gd.gamma[static_cast<std::size_t>(n)] - g.c[n] / a),
                         std::abs(gd.delta[static_cast<std::size_t>(n)] - g.d[n] / a)});
  }
  o.require(gd_dev < 1e-12, "gamma/delta coefficients");

  const CoefficientTable s = s_coefficients(10);
  bool positive = !s.empty();
  for (const auto& [pair, c] : s) positive = positive && c > 0;
  o.require(positive, "c_{i,j} positive integers");

  const CoefficientTable x1 = x1_coefficients(10);
  int violating = 0;
  bool cancel = true, matches = true;
  for (const IndexPair& pair : enumerate_pairs(10)) {
    const BigInt c = cluster_coefficient(pair);
    const auto it = x1.find(pair);
    matches = matches && c == (it == x1.end() ? BigInt(0) : it->second);
    if (!pair.satisfies_dominance() || !pair.satisfies_strict()) {
      ++violating;
      cancel = cancel && c == 0;
    }
  }
  o.require(cancel, "cancellation on violating pairs");
  o.require(matches, "cluster formula against the expansion of x1");
  const IndexPair example{{1, 1, 3}, {2, 2}};
  o.require(cluster_decomposition_count(example) == 2 && cluster_coefficient(example) == 0, "worked example");

  double s_dev = 0.0;
  for (int t = 0; t < 20; ++t) {
    const RootParams zeta = random_params(rng, Side::lower_zeta, 2 + t % 5, 0.9, DecayProfile::sobolev_half);
    for (SIdentity which : {SIdentity::s2, SIdentity::s_n1, SIdentity::s32})
      s_dev = std::max(s_dev, s_identity_check(zeta, which));
  }
  o.require(s_dev < 1e-10, "s identities");
  o.detail << "gamma/delta dev " << gd_dev << ", " << s.size() << " positive c_{i,j}, " << violating
           << " violating pairs cancel, worked example nets " << cluster_coefficient(example) << ", s dev " << s_dev;
}

void positivity(Outcome& o) {
  Rng rng(1008);
  double worst_neg = 0.0, worst_drop = 0.0;
  for (int t = 0; t < 20; ++t) {
    std::vector<cplx> values;
    for (int k = 1; k <= 8; ++k) values.push_back(0.9 * rng.uniform01());
    LaurentSeries prev;
    for (int n = 1; n <= 8; ++n) {
      const RootParams zeta = zeta_params({values.begin(), values.begin() + n});
      const LaurentSeries x = k2_triangular(partial_product(zeta), 64).x;
      for (int j = 1; j <= n; ++j) {
        worst_neg = std::max({worst_neg, -x[j].real(), std::abs(x[j].imag())});
        worst_drop = std::max(worst_drop, prev[j].real() - x[j].real());
      }
      prev = x;
    }
  }
  o.require(worst_neg <= 1e-14, "x coefficients nonnegative");
  o.require(worst_drop <= 1e-14, "x coefficients nondecreasing");
  o.detail << "20 sequences, support 1..8, min coefficient " << -worst_neg << ", max decrease " << worst_drop;
}

void negative_controls(Outcome& o) {
  const double r = 0.5;
  const LaurentSeries inner = -1.0 * (z - r) * invert_series(1.0 - r * z, 200);
  const LoopMatrix g = LoopMatrix::diagonal(star(inner), inner).truncated(-200, 200);
  std::string seen;
  for (int which = 0; which < 2; ++which) {
    try {
      if (which == 0)
        triangular(g, 48);
      else
        rootsub_factorize(g, 48);
      o.require(false, which == 0 ? "triangular returned" : "rootsub_factorize returned");
    } catch (const Error& e) {
      const ErrorCode want = which == 0 ? ErrorCode::NotInvertible : ErrorCode::NotFactorizable;
      o.require(e.code() == want && e.gate() == "A", e.what());
      seen += std::string(to_string(e.code())) + "[" + e.gate() + "] ";
    }
  }
  o.detail << "disk zero r=0.5 at N=48 raises " << seen;
}

void winding(Outcome& o) {
  const CircleGrid grid;
  for (int k = -5; k <= 5; ++k) {
    const LaurentSeries f = LaurentSeries::monomial(k);
    o.require(winding_number(f, grid) == k, "degree z^k");
    o.require(numerical_index(f, 24) == -k, "index of T(z^k)");
  }
  Rng rng(1010);
  for (int t = 0; t < 10; ++t) {
    LaurentSeries chi;
    for (int j = 1; j <= 3; ++j) {
      const cplx w = 0.5 / j * rng.uniform01() * rng.unit_phase();
      chi += w * LaurentSeries::monomial(j) - std::conj(w) * LaurentSeries::monomial(-j);
    }
    const LaurentSeries f =
        (exp_series(project(chi, Half::plus), 60) * exp_series(project(chi, Half::minus), 60)).cleaned(1e-17);
    o.require(winding_number(f, grid) == 0, "degree exp(chi)");
    o.require(numerical_index(f, 40) == 0, "index of T(exp(chi))");
  }
  o.detail << "z^k for |k| <= 5 and 10 imaginary exp(chi): degree = -index";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"determinant identity for k2", determinant_identity},
      {"Szego-Widom limit", szego_widom},
      {"three-factor determinant product", product_formula},
      {"round trips", round_trips},
      {"factorization structure", factorization_structure},
      {"reconstruction of l and u", reconstruction},
      {"combinatorics", combinatorics},
      {"positivity and monotonicity", positivity},
      {"negative controls", negative_controls},
      {"winding", winding},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    o.detail.precision(3);
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
