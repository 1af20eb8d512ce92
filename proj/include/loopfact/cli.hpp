#pragma once

// Command implementations behind the loopfact executable. Each command maps
// JSON documents to a JSON document; the executable only handles arguments
// and files.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopfact/combinat.hpp"
#include "loopfact/factor.hpp"
#include "loopfact/json_io.hpp"
#include "loopfact/random.hpp"

namespace loopfact {

struct RunConfig {
  int trunc = 48;
  double tol = 1e-9;
  int grid = CircleGrid::default_point_count;
  std::uint64_t seed = 0;
  DecayProfile profile = DecayProfile::rapid;

  /// N >= 2 * max support and grid >= 2N + 1.
  void validate(int max_support = 0) const {
    if (trunc < 1) throw std::invalid_argument("--trunc must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("--tol must be positive");
    if (trunc < 2 * max_support)
      throw std::invalid_argument("--trunc " + std::to_string(trunc) + " is below twice the support " +
                                  std::to_string(max_support));
    if (grid < 2 * trunc + 1)
      throw std::invalid_argument("--grid " + std::to_string(grid) + " must be at least 2 * trunc + 1");
  }
};

struct RandomSpec {
  int support = 4;
  double radius = 0.8;
  int chi_terms = 3;
  double chi_radius = 0.3;
  bool zeta_only = false;
};

inline int params_support(const RootSubgroupData& d) {
  return std::max({d.eta.support(), d.zeta.support(), d.chi.is_zero() ? 0 : d.chi.max_power()});
}

inline json prng_metadata(const RunConfig& cfg) {
  return {{"name", prng_name}, {"version", prng_version}, {"seed", cfg.seed}, {"profile", to_string(cfg.profile)}};
}

/// Parameters from a document holding them under "params".
inline RootSubgroupData params_from_document(const json& doc) {
  if (!doc.contains("params")) throw Error(ErrorCode::ParseError, "document has no \"params\" object");
  return rootsub_from_json(doc["params"]);
}

inline RootSubgroupData random_params_for(const RunConfig& cfg, const RandomSpec& spec) {
  Rng rng(cfg.seed);
  RootSubgroupData d;
  d.zeta = random_params(rng, Side::lower_zeta, spec.support, spec.radius, cfg.profile);
  if (!spec.zeta_only) {
    d.eta = random_params(rng, Side::upper_eta, spec.support, spec.radius, cfg.profile);
    d.chi = random_chi(rng, spec.chi_terms, spec.chi_radius);
    d.chi0 = std::numbers::pi * rng.uniform(-1.0, 1.0);
  }
  return d;
}

/// g = k1^* diag(lambda, 1/lambda) k2 for explicit or generated parameters.
inline json cmd_compose(const RunConfig& cfg, const std::optional<json>& params_doc, const std::optional<RandomSpec>& spec) {
  if (params_doc.has_value() == spec.has_value())
    throw std::invalid_argument("compose needs exactly one of a parameter file or --random");
  const RootSubgroupData d = params_doc ? params_from_document(*params_doc) : random_params_for(cfg, *spec);
  cfg.validate(params_support(d));
  json out = document();
  if (spec) {
    json gen = prng_metadata(cfg);
    gen["support"] = spec->support;
    gen["radius"] = spec->radius;
    if (!spec->zeta_only) gen["chi_terms"] = spec->chi_terms, gen["chi_radius"] = spec->chi_radius;
    out["generator"] = gen;
  }
  out["trunc"] = cfg.trunc;
  out["params"] = to_json(d);
  out["loop"] = to_json(compose_rootsub(d, cfg.trunc));
  return out;
}

enum class FactorMode { triangular, rootsub };

inline json error_document(const Error& e) {
  json out = document();
  out["error"] = {{"code", to_string(e.code())}, {"gate", e.gate()}, {"message", e.what()}};
  return out;
}

/// Factors of the "loop" in a loop document. Invertibility failures surface
/// as NotFactorizable naming the gate.
inline json cmd_factor(const RunConfig& cfg, const json& loop_doc, FactorMode mode) {
  if (!loop_doc.contains("loop")) throw Error(ErrorCode::ParseError, "document has no \"loop\" object");
  const LoopMatrix g = loop_from_json(loop_doc["loop"]);
  cfg.validate();
  const CircleGrid grid(cfg.grid);
  json out = document();
  out["trunc"] = cfg.trunc;
  if (mode == FactorMode::triangular) {
    TriangularFactors t;
    try {
      t = triangular(g, cfg.trunc, 1e-10, grid);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotInvertible || e.code() == ErrorCode::ShiftedNotInvertible)
        throw Error(ErrorCode::NotFactorizable, e.what(), e.gate());
      throw;
    }
    out["mode"] = "triangular";
    out["factors"] = to_json(t);
    return out;
  }
  FactorizeOptions opt;
  opt.tol = cfg.tol;
  const RootSubgroupData d = rootsub_factorize(g, cfg.trunc, opt, grid);
  out["mode"] = "rootsub";
  out["params"] = to_json(d);
  out["a1"] = d.a1;
  out["a2"] = d.a2;
  out["residual"] = d.residual;
  out["consistency_defect"] = d.consistency_defect;
  return out;
}

/// Largest support for which x-from-zeta also runs the recursion route.
inline constexpr int recursion_route_limit = 24;

/// x from zeta by the residue of k2 and, for moderate support, by the x_1^*
/// recursion; reports the agreement of the two routes.
inline json cmd_x_from_zeta(const RunConfig& cfg, const json& params_doc) {
  const RootSubgroupData d = params_from_document(params_doc);
  const int support = std::max(0, d.zeta.support());
  cfg.validate(support);
  const K2Triangular t = k2_triangular(partial_product(d.zeta), cfg.trunc);
  json out = document();
  out["trunc"] = cfg.trunc;
  out["x"] = to_json(t.x.cleaned(0.0));
  json routes = {{"residue", true}, {"recursion", support <= recursion_route_limit}};
  if (support <= recursion_route_limit) routes["max_deviation"] = max_abs_difference(full_x(d.zeta), t.x);
  out["routes"] = routes;
  out["discarded_mass"] = t.discarded_mass;
  return out;
}

/// zeta from x: k2 from the Toeplitz/Hankel formulas, then peeling.
inline json cmd_zeta_from_x(const RunConfig& cfg, const json& x_doc) {
  if (!x_doc.contains("x")) throw Error(ErrorCode::ParseError, "document has no \"x\" series");
  const LaurentSeries x = series_from_json(x_doc["x"]);
  if (!x.is_zero() && x.min_power() < 1) throw Error(ErrorCode::ParseError, "x must have powers >= 1");
  cfg.validate(x.is_zero() ? 0 : x.max_power());
  const K2Triangular t = k2_from_x(x, cfg.trunc, cfg.tol);
  const LoopMatrix k2 = t.assemble();
  const PeelResult peel = zeta_from_loop(k2, x.is_zero() ? 0 : x.max_power());
  RootSubgroupData d;
  d.zeta = peel.params;
  json out = document();
  out["trunc"] = cfg.trunc;
  out["params"] = to_json(d);
  out["remainder_distance"] = peel.remainder_distance;
  return out;
}

struct VerifyOutcome {
  json report;
  bool all_pass = true;
};

/// Checks one composed document: the stored loop against its parameters,
/// the factorization round trip, and the determinant identities.
inline std::vector<IdentityCheck> verify_document(const RunConfig& cfg, const json& doc) {
  const RootSubgroupData d = params_from_document(doc);
  if (!doc.contains("loop")) throw Error(ErrorCode::ParseError, "document has no \"loop\" object");
  const LoopMatrix stored = loop_from_json(doc["loop"]);
  const int n = doc.value("trunc", cfg.trunc);
  RunConfig local = cfg;
  local.trunc = n;
  local.validate(params_support(d));

  std::vector<IdentityCheck> out;
  out.push_back(make_check("loop = compose_rootsub(params)", max_abs_difference(stored, compose_rootsub(d, n)), 0.0,
                           cfg.tol));
  const CircleGrid grid(cfg.grid);
  double recovered = 0.0;
  try {
    FactorizeOptions opt;
    opt.tol = cfg.tol;
    const RootSubgroupData r = rootsub_factorize(stored, n, opt, grid);
    const auto diff = [](const RootParams& p, const RootParams& q) {
      double m = 0.0;
      for (int k = std::min(p.first_index(), q.first_index()); k <= std::max(p.last_index(), q.last_index()); ++k)
        m = std::max(m, std::abs(p(k) - q(k)));
      return m;
    };
    recovered = std::max({diff(r.eta, d.eta), diff(r.zeta, d.zeta), max_abs_difference(r.chi, d.chi),
                          std::abs(std::polar(1.0, r.chi0) - std::polar(1.0, d.chi0))});
  } catch (const Error&) {
    recovered = std::numeric_limits<double>::max();
  }
  out.push_back(make_check("rootsub_factorize(loop) = params", recovered, 0.0, 1e-8));
  const auto ids = verify_identities(d, n, 1e-8);
  out.insert(out.end(), ids.begin(), ids.end());
  return out;
}

/// Every *.json document in `dir`, in file-name order.
inline VerifyOutcome cmd_verify(const RunConfig& cfg, const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::invalid_argument(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  VerifyOutcome out;
  json lines = json::array();
  for (const auto& f : files) {
    std::vector<IdentityCheck> checks;
    try {
      checks = verify_document(cfg, read_document(f.string()));
    } catch (const std::exception& e) {
      checks.push_back({std::string("document is readable: ") + e.what(), 0.0, 0.0, 0.0, false});
    }
    for (const auto& c : checks) {
      json line = {{"fixture", f.filename().string()}};
      line.update(to_json(c));
      lines.push_back(line);
      out.all_pass = out.all_pass && c.pass;
    }
  }
  out.report = document();
  out.report["report"] = lines;
  out.report["all_pass"] = out.all_pass;
  return out;
}

struct ProbeRange {
  int from = 8;
  int step = 8;
  double radius = 0.8;
};

/// Exploratory table over support lengths N = from, from + step, ..., trunc.
/// Prefixes of one random draw, so rows are comparable.
inline json cmd_conjecture_probe(const RunConfig& cfg, const ProbeRange& range) {
  cfg.validate();
  if (range.from < 1 || range.step < 1) throw std::invalid_argument("probe range must be positive");
  Rng rng(cfg.seed);
  const RootParams all = random_params(rng, Side::lower_zeta, cfg.trunc, range.radius, cfg.profile);
  const CircleGrid grid(cfg.grid);

  json rows = json::array();
  for (int n = range.from; n <= cfg.trunc; n += range.step) {
    const RootParams zeta = zeta_params({all.values.begin(), all.values.begin() + n});
    const LoopMatrix k2 = partial_product(zeta);
    const K2Triangular t = k2_triangular(k2, 2 * n + 8);
    rows.push_back({{"N", n},
                    {"zeta_l2_norm_sq", zeta.l2_norm_sq()},
                    {"zeta_w_half_norm_sq", zeta.w_half_norm_sq()},
                    {"x_l2_norm", t.x.l2_norm()},
                    {"unitarity_defect", unitarity_defect(k2, grid)},
                    {"a_product", a_product(zeta)},
                    {"discarded_mass", t.discarded_mass}});
  }
  json out = document();
  out["kind"] = "exploratory";
  out["note"] = "diagnostics only; no pass/fail verdict is drawn";
  out["generator"] = prng_metadata(cfg);
  out["radius"] = range.radius;
  out["rows"] = rows;
  return out;
}

}  // namespace loopfact
