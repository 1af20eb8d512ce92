#pragma once

// Deterministic pseudo-random parameters. Draws go through mt19937_64 with
// 53-bit uniforms, which every mainstream language reproduces bit for bit.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "loopfact/factor.hpp"
#include "loopfact/rootsub.hpp"

namespace loopfact {

inline constexpr std::string_view prng_name = "mt19937_64";
inline constexpr int prng_version = 1;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  cplx unit_phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform01()); }

 private:
  std::mt19937_64 engine_;
};

enum class DecayProfile { rapid, sobolev_half, l2_only };

inline std::string_view to_string(DecayProfile p) {
  switch (p) {
    case DecayProfile::rapid: return "rapid";
    case DecayProfile::sobolev_half: return "sobolev_half";
    case DecayProfile::l2_only: return "l2_only";
  }
  return "?";
}

inline std::optional<DecayProfile> parse_profile(std::string_view s) {
  if (s == "rapid") return DecayProfile::rapid;
  if (s == "sobolev_half") return DecayProfile::sobolev_half;
  if (s == "l2_only") return DecayProfile::l2_only;
  return std::nullopt;
}

/// Magnitude envelope at 1-based position n: r 0.5^n, r n^-1.1 or r n^-0.6.
inline double profile_magnitude(DecayProfile p, double r, int n) {
  switch (p) {
    case DecayProfile::rapid: return r * std::pow(0.5, n);
    case DecayProfile::sobolev_half: return r * std::pow(n, -1.1);
    case DecayProfile::l2_only: return r * std::pow(n, -0.6);
  }
  return 0.0;
}

/// `count` values with the profile's magnitude scaled by a uniform factor in
/// [0, 1) and an independent uniform phase.
inline RootParams random_params(Rng& rng, Side side, int count, double r, DecayProfile profile) {
  RootParams out{side, {}};
  for (int k = 1; k <= count; ++k) {
    const double mag = profile_magnitude(profile, r, k) * rng.uniform01();
    out.values.push_back(mag * rng.unit_phase());
  }
  return out;
}

/// chi = sum_{j=1}^{terms} chi_j z^j with |chi_j| < r / j.
inline LaurentSeries random_chi(Rng& rng, int terms, double r) {
  std::vector<cplx> c;
  for (int j = 1; j <= terms; ++j) c.push_back(r / j * rng.uniform01() * rng.unit_phase());
  return {1, std::move(c)};
}

inline RootSubgroupData random_rootsub_data(Rng& rng, int support, double r, int chi_terms, double chi_r) {
  RootSubgroupData d;
  d.eta = random_params(rng, Side::upper_eta, support, r, DecayProfile::rapid);
  d.zeta = random_params(rng, Side::lower_zeta, support, r, DecayProfile::rapid);
  d.chi = random_chi(rng, chi_terms, chi_r);
  d.chi0 = std::numbers::pi * rng.uniform(-1.0, 1.0);
  return d;
}

}  // namespace loopfact
