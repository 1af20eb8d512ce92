#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "loopfact/cli.hpp"

namespace {

using namespace loopfact;

void emit(const json& doc, const std::string& out_path) {
  const std::string text = dump(doc);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization of SU(2) loops: Toeplitz, triangular and root subgroup coordinates"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string profile = "rapid";
  std::string out_path;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--trunc", cfg.trunc, "Truncation N")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "Tolerance")->capture_default_str();
    sub->add_option("--grid", cfg.grid, "Grid points on the circle")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    sub->add_option("--profile", profile, "Decay profile of random zeta")
        ->check(CLI::IsMember({"rapid", "sobolev_half", "l2_only"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };

  auto* compose = app.add_subcommand("compose", "Compose a loop from root subgroup coordinates");
  std::string params_path;
  bool random = false;
  RandomSpec spec;
  compose->add_option("params", params_path, "Parameter document");
  compose->add_flag("--random", random, "Draw the parameters from --seed and --profile");
  compose->add_option("--support", spec.support, "Number of random eta and zeta values")->capture_default_str();
  compose->add_option("--radius", spec.radius, "Profile scale r")->capture_default_str();
  compose->add_flag("--zeta-only", spec.zeta_only, "Random loop of the form k2");
  add_common(compose);

  auto* factor = app.add_subcommand("factor", "Factor a loop");
  std::string loop_path;
  std::string mode = "rootsub";
  factor->add_option("loop", loop_path, "Loop document")->required();
  factor->add_option("--mode", mode, "triangular or rootsub")
      ->check(CLI::IsMember({"triangular", "rootsub"}))
      ->capture_default_str();
  add_common(factor);

  auto* x_from_zeta = app.add_subcommand("x-from-zeta", "Residue x of k2(zeta)");
  std::string zeta_path;
  x_from_zeta->add_option("params", zeta_path, "Parameter document")->required();
  add_common(x_from_zeta);

  auto* zeta_from_x = app.add_subcommand("zeta-from-x", "zeta from the residue x");
  std::string x_path;
  zeta_from_x->add_option("x", x_path, "Document with an \"x\" series")->required();
  add_common(zeta_from_x);

  auto* verify = app.add_subcommand("verify", "Check every fixture in a directory");
  std::string fixture_dir;
  verify->add_option("dir", fixture_dir, "Fixture directory")->required();
  add_common(verify);

  auto* probe = app.add_subcommand("conjecture-probe", "Exploratory diagnostics for slowly decaying zeta");
  ProbeRange range;
  probe->add_option("--from", range.from, "Smallest support length")->capture_default_str();
  probe->add_option("--step", range.step, "Support length step")->capture_default_str();
  probe->add_option("--radius", range.radius, "Profile scale r")->capture_default_str();
  add_common(probe);
  probe->get_option("--profile")->default_str("l2_only");

  profile.clear();
  CLI11_PARSE(app, argc, argv);

  try {
    if (profile.empty()) profile = app.got_subcommand(probe) ? "l2_only" : "rapid";
    cfg.profile = *parse_profile(profile);

    if (app.got_subcommand(compose)) {
      std::optional<json> params;
      if (!params_path.empty()) params = read_document(params_path);
      emit(cmd_compose(cfg, params, random ? std::optional<RandomSpec>(spec) : std::nullopt), out_path);
    } else if (app.got_subcommand(factor)) {
      const json doc = read_document(loop_path);
      try {
        emit(cmd_factor(cfg, doc, mode == "triangular" ? FactorMode::triangular : FactorMode::rootsub), out_path);
      } catch (const Error& e) {
        if (!out_path.empty()) emit(error_document(e), out_path);
        throw;
      }
    } else if (app.got_subcommand(x_from_zeta)) {
      emit(cmd_x_from_zeta(cfg, read_document(zeta_path)), out_path);
    } else if (app.got_subcommand(zeta_from_x)) {
      emit(cmd_zeta_from_x(cfg, read_document(x_path)), out_path);
    } else if (app.got_subcommand(verify)) {
      const VerifyOutcome v = cmd_verify(cfg, fixture_dir);
      emit(v.report, out_path);
      for (const auto& line : v.report["report"])
        if (!line["pass"].get<bool>())
          std::cerr << "FAIL " << line["fixture"].get<std::string>() << ": " << line["identity_name"].get<std::string>()
                    << " (deviation " << line["abs_deviation"].dump() << ")\n";
      return v.all_pass ? 0 : 1;
    } else if (app.got_subcommand(probe)) {
      emit(cmd_conjecture_probe(cfg, range), out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.gate().empty()) std::cerr << " [gate " << e.gate() << "]";
    std::cerr << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
