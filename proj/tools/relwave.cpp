// relwave CLI: runs the named verification suites with seeded randomness,
// runs grid evolutions, and writes machine-readable reports.
//
//   relwave verify [--suite NAME] [--config FILE] [--seed N] [--tol X] [--report FILE]
//   relwave evolve [--config FILE] [--seed N] --out FILE [--report FILE]
//   relwave demo   [--seed N]
//
// Exit status: 0 all checks pass, 1 check failure, 2 usage error, 3 I/O error.

#include "relwave/report.hpp"
#include "relwave/rng.hpp"
#include "relwave/solutions.hpp"
#include "relwave/transforms.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

void usage(std::ostream& out) {
  out << "usage: relwave <verify|evolve|demo> [options]\n"
         "  verify   --suite <algebra|modes|solutions|transforms|evolve|all>\n"
         "           [--config FILE] [--seed N] [--tol X] [--report FILE]\n"
         "  evolve   [--config FILE] [--seed N] [--spec FILE] --out FILE [--report FILE]\n"
         "  demo     [--seed N]\n"
         "config keys: mass, charge_e, seed, tol.<suite>, modes.count, samples.count,\n"
         "             grid.dims, grid.n, grid.box, time.t, coulomb.Z, omega_tilde, kind,\n"
         "             check.diagrams. Flags override file values; RELWAVE_SEED is the\n"
         "             seed fallback.\n";
}

struct Args {
  std::string verb;
  std::string suite = "all";
  std::string config_path;
  std::string report_path;
  std::string out_path;
  std::string seed;
  std::string tol;
  std::string spec_path;
};

bool parse_args(int argc, char** argv, Args& a) {
  if (argc < 2) return false;
  a.verb = argv[1];
  for (int i = 2; i < argc; ++i) {
    const std::string flag = argv[i];
    auto value = [&](std::string& dst) {
      if (i + 1 >= argc) return false;
      dst = argv[++i];
      return true;
    };
    bool ok = true;
    if (flag == "--suite") ok = value(a.suite);
    else if (flag == "--config") ok = value(a.config_path);
    else if (flag == "--report") ok = value(a.report_path);
    else if (flag == "--out") ok = value(a.out_path);
    else if (flag == "--seed") ok = value(a.seed);
    else if (flag == "--tol") ok = value(a.tol);
    else if (flag == "--spec") ok = value(a.spec_path);
    else return false;
    if (!ok) return false;
  }
  return true;
}

int write_report_file(const relwave::SuiteReport& rep, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "relwave: cannot open report path " << path << "\n";
    return 3;
  }
  out << relwave::report_to_json(rep);
  return out ? 0 : 3;
}

void print_report(const relwave::SuiteReport& rep) {
  for (const relwave::Check& c : rep.checks) {
    if (c.skipped) {
      std::printf("SKIP  %-38s (%s)\n", c.name.c_str(), c.note.c_str());
      continue;
    }
    const char* rel = c.direction == "le" ? "<=" : ">=";
    std::printf("%s  %-38s %11.4e %s %.1e\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                c.max_residual, rel, c.tolerance);
  }
  std::printf("%s: %s\n", rep.suite.c_str(), rep.overall_pass ? "PASS" : "FAIL");
}

int cmd_verify(const Args& a) {
  if (!relwave::is_suite_name(a.suite)) {
    std::cerr << "relwave: unknown suite '" << a.suite << "'\n";
    usage(std::cerr);
    return 2;
  }
  relwave::Config cfg;
  if (!a.config_path.empty()) cfg = relwave::load_config_file(a.config_path);
  if (!a.seed.empty()) cfg.set("seed", a.seed);
  if (!a.tol.empty()) cfg.set("tol.all", a.tol);
  const relwave::SuiteReport rep = relwave::run_suite(a.suite, cfg);
  print_report(rep);
  if (!a.report_path.empty()) {
    const int rc = write_report_file(rep, a.report_path);
    if (rc != 0) return rc;
  }
  return rep.overall_pass ? 0 : 1;
}

int cmd_evolve(const Args& a) {
  if (a.out_path.empty()) {
    std::cerr << "relwave: evolve needs --out\n";
    usage(std::cerr);
    return 2;
  }
  relwave::Config cfg;
  if (!a.config_path.empty()) cfg = relwave::load_config_file(a.config_path);
  if (!a.seed.empty()) cfg.set("seed", a.seed);
  if (!a.spec_path.empty()) cfg.set("spec.file", a.spec_path);
  relwave::SuiteReport rep;
  const int rc = relwave::run_evolution(cfg, a.out_path, &rep);
  print_report(rep);
  if (rc == 3) {
    std::cerr << "relwave: cannot write dump to " << a.out_path << "\n";
    return 3;
  }
  if (!a.report_path.empty()) {
    const int wrc = write_report_file(rep, a.report_path);
    if (wrc != 0) return wrc;
  }
  return rc;
}

int cmd_demo(const Args& a) {
  using namespace relwave;
  Config cfg;
  if (!a.seed.empty()) cfg.set("seed", a.seed);
  Rng rng(cfg.seed());
  const auto samples = halton_samples(20);

  std::printf("relwave demo (seed %llu)\n\n", static_cast<unsigned long long>(cfg.seed()));

  const SolutionSpec gm = random_spec(SpecKind::GenMaxwell, 0.0, 5, rng);
  const auto mapped = map_maxwell_to_dirac(gm, samples);
  const auto gm_rep = residual_gen_maxwell(gm, samples);
  std::printf("electromagnetic <-> massless Dirac (operator U)\n");
  std::printf("  generalized Maxwell residual (worst of four forms): %.3e\n",
              gm_rep.max_residual());
  std::printf("  massless Dirac residual of the mapped field:       %.3e\n\n",
              mapped.dirac_residual);

  const SolutionSpec sf = random_spec(SpecKind::SF, 1.0, 5, rng);
  const PlaneWaveField lhs = apply_V_field(field_from_spec(sf), 1.0);
  const PlaneWaveField rhs = field_from_spec(apply_V(sf));
  std::printf("quantum-mechanical doublet <-> Dirac (operator V, m = 1)\n");
  std::printf("  pointwise solution match:                          %.3e\n",
              max_field_distance(lhs, rhs, samples));
  Rng rng50(cfg.seed() ^ 0x50);
  std::printf("  intertwining identity on 20 random modes:          %.3e\n\n",
              check_fw_intertwining(20, 1.0, rng50));

  std::vector<EMPlaneWave> waves;
  Eigen::Vector3cd pol;
  for (int j = 0; j < 3; ++j) pol(j) = rng.complex_in_disk(1.0);
  waves.push_back(medium_plane_wave(rng.wavevector(0.5, 1.5), pol, 1.0, 1.0));
  std::printf("medium columns (vacuum plane wave, eps = mu = 1)\n");
  double worst = 0.0;
  for (int col = 1; col <= 8; ++col) {
    worst = std::max(worst, sallhofer_residual(waves, 1.0, 1.0, col, false, samples));
  }
  std::printf("  worst medium-equation residual over 8 columns:     %.3e\n", worst);

  MediumProfile medium;
  std::vector<Eigen::Vector3d> pts;
  while (pts.size() < 50) {
    const Eigen::Vector3d x = rng.vec3(-2.0, 2.0);
    if (x.norm() > 1e-3) pts.push_back(x);
  }
  std::printf("  amplitude-equation symbol agreement (Coulomb):     %.3e\n\n",
              medium_amplitude_equivalence(medium, pts));

  Rng rng_pgi(cfg.seed() ^ 0x9);
  const auto match = spinorization_pgi_match(4, rng_pgi);
  std::printf("eight spinorizations against the eight matrix symmetries\n");
  std::printf("  bijection found: %s, worst match: %.3e\n", match.is_bijection ? "yes" : "no",
              match.worst_match);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  if (!parse_args(argc, argv, args)) {
    usage(std::cerr);
    return 2;
  }
  try {
    if (args.verb == "verify") return cmd_verify(args);
    if (args.verb == "evolve") return cmd_evolve(args);
    if (args.verb == "demo") return cmd_demo(args);
    if (args.verb == "--help" || args.verb == "help") {
      usage(std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "relwave: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "relwave: unknown command '" << args.verb << "'\n";
  usage(std::cerr);
  return 2;
}
