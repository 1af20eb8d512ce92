#pragma once

// JSON encodings. Complex numbers are [re, im] pairs; every file carries a
// top-level "schema_version": 1.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "loopfact/combinat.hpp"
#include "loopfact/errors.hpp"
#include "loopfact/factor.hpp"
#include "loopfact/laurent.hpp"
#include "loopfact/rootsub.hpp"
#include "loopfact/toeplitz.hpp"

namespace loopfact {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline json to_json(cplx v) { return json::array({v.real(), v.imag()}); }

inline cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::ParseError, "expected a number or an [re, im] pair, got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

/// {"terms": [{"power": p, "re": x, "im": y}, ...]} with zero terms omitted.
inline json to_json(const LaurentSeries& f) {
  json terms = json::array();
  for (int p = f.min_power(); p <= f.max_power(); ++p) {
    const cplx c = f[p];
    if (c == cplx{}) continue;
    terms.push_back({{"power", p}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"terms", terms}};
}

inline LaurentSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error(ErrorCode::ParseError, "series must be an object with a \"terms\" array");
  LaurentSeries out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("power") || !t["power"].is_number_integer())
      throw Error(ErrorCode::ParseError, "series term needs an integer \"power\"");
    const double re = t.value("re", 0.0);
    const double im = t.value("im", 0.0);
    if (!std::isfinite(re) || !std::isfinite(im)) throw Error(ErrorCode::ParseError, "non-finite coefficient");
    out += LaurentSeries::monomial(t["power"].get<int>(), {re, im});
  }
  return out;
}

inline json to_json(const LoopMatrix& g) {
  return {{"a", to_json(g.a)}, {"b", to_json(g.b)}, {"c", to_json(g.c)}, {"d", to_json(g.d)}};
}

inline LoopMatrix loop_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "loop must be an object with entries a, b, c, d");
  LoopMatrix g;
  for (const char* key : {"a", "b", "c", "d"}) {
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("loop is missing entry ") + key);
  }
  g.a = series_from_json(j["a"]);
  g.b = series_from_json(j["b"]);
  g.c = series_from_json(j["c"]);
  g.d = series_from_json(j["d"]);
  return g;
}

inline json to_json(const Matrix2c& m) {
  return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}), json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

inline json to_json(const RootParams& p) {
  json values = json::array();
  for (const cplx v : p.values) values.push_back(to_json(v));
  return {{"side", p.side == Side::lower_zeta ? "zeta" : "eta"}, {"values", values}};
}

inline RootParams params_from_json(const json& j, Side expected) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw Error(ErrorCode::ParseError, "root parameters need a \"values\" array");
  const std::string side = j.value("side", expected == Side::lower_zeta ? "zeta" : "eta");
  if (side != "zeta" && side != "eta") throw Error(ErrorCode::ParseError, "side must be \"zeta\" or \"eta\"");
  const Side s = side == "zeta" ? Side::lower_zeta : Side::upper_eta;
  if (s != expected) throw Error(ErrorCode::ParseError, "unexpected side \"" + side + "\"");
  RootParams out{s, {}};
  for (const auto& v : j["values"]) out.values.push_back(complex_from_json(v));
  return out;
}

/// {"eta", "chi0", "chi", "zeta"}; chi0 is theta with chi_0 = i theta.
inline json to_json(const RootSubgroupData& d) {
  return {{"eta", to_json(d.eta)}, {"chi0", d.chi0}, {"chi", to_json(d.chi)}, {"zeta", to_json(d.zeta)}};
}

/// Missing fields default to the identity coordinates.
inline RootSubgroupData rootsub_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "parameters must be an object");
  RootSubgroupData d;
  if (j.contains("eta")) d.eta = params_from_json(j["eta"], Side::upper_eta);
  if (j.contains("zeta")) d.zeta = params_from_json(j["zeta"], Side::lower_zeta);
  if (j.contains("chi")) d.chi = series_from_json(j["chi"]);
  if (j.contains("chi0")) {
    if (!j["chi0"].is_number()) throw Error(ErrorCode::ParseError, "chi0 must be a real number");
    d.chi0 = j["chi0"].get<double>();
  }
  if (d.chi.min_power() < 1 && !d.chi.is_zero()) throw Error(ErrorCode::ParseError, "chi must have powers >= 1");
  return d;
}

inline json to_json(const TriangularFactors& t) {
  return {{"l", to_json(t.l)},
          {"m_zero", to_json(t.m_zero)},
          {"a_zero", t.a_zero},
          {"u", to_json(t.u)},
          {"residual", t.residual}};
}

inline json to_json(const IdentityCheck& c) {
  return {{"identity_name", c.identity_name},
          {"lhs", c.lhs},
          {"rhs", c.rhs},
          {"abs_deviation", c.abs_deviation},
          {"pass", c.pass}};
}

/// Row-major [[re, im], ...] rows.
inline json to_json(const ToeplitzTruncation& t) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < t.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < t.matrix.cols(); ++c) row.push_back(to_json(t.matrix(r, c)));
    rows.push_back(row);
  }
  return {{"size_blocks", t.size_blocks}, {"kind", to_string(t.kind)}, {"matrix", rows}};
}

/// [{"i": [...], "j": [...], "c": int}, ...]
inline json to_json(const CoefficientTable& table) {
  json out = json::array();
  for (const auto& [pair, c] : table)
    out.push_back({{"i", pair.i}, {"j", pair.j}, {"c", static_cast<long long>(c)}});
  return out;
}

inline json document() { return {{"schema_version", schema_version}}; }

inline json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") || j["schema_version"] != schema_version)
    throw Error(ErrorCode::ParseError, path + ": expected top-level \"schema_version\": 1");
  return j;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace loopfact
