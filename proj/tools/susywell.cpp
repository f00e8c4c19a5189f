// Command-line front end: figure data, 2D spectrum tables and the invariant suite.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "susywell/cli.hpp"

using namespace susywell;

int main(int argc, char** argv) {
  CLI::App app{"SUSY infinite wells and coherent states"};
  app.require_subcommand(1);

  // potential
  cli::PotentialConfig pot;
  auto* potential = app.add_subcommand("potential", "Sample the partner potential V~(x; k, omega)");
  potential->add_option("--k", pot.k, "SUSY level k")->required();
  potential->add_option("--omega", pot.omega, "shift omega, outside [0, 1]")->required();
  potential->add_option("--grid", pot.points, "number of samples on [0, pi]")->capture_default_str();
  potential->add_option("--out", pot.out, "output CSV")->capture_default_str();

  // evolve1d
  cli::Evolve1dConfig e1;
  long k1d = 0;
  double omega1d = 0.0;
  auto* evolve1d = app.add_subcommand("evolve1d", "Time evolution of a 1D gaussian coherent state");
  evolve1d->add_option("--n0", e1.gcs.n0)->capture_default_str();
  evolve1d->add_option("--sigma0", e1.gcs.sigma0)->capture_default_str();
  evolve1d->add_option("--phi0", e1.gcs.phi0)->capture_default_str();
  auto* k_opt = evolve1d->add_option("--k", k1d, "SUSY level (omit for the original well)");
  auto* w_opt = evolve1d->add_option("--omega", omega1d, "SUSY shift");
  evolve1d->add_option("--tmax", e1.t_max)->capture_default_str();
  evolve1d->add_option("--frames", e1.frames)->capture_default_str();
  evolve1d->add_option("--grid", e1.points)->capture_default_str();
  evolve1d->add_option("--out", e1.out, "density CSV (t, x, density)")->capture_default_str();
  evolve1d->add_option("--observables", e1.observables_out, "observables CSV (default <out>.observables.csv)");

  // spectrum2d
  cli::Spectrum2dConfig sp;
  auto* spectrum = app.add_subcommand("spectrum2d", "Ordered 2D spectrum with degeneracies");
  spectrum->add_option("--emax", sp.e_max, "largest energy listed")->capture_default_str();
  spectrum->add_option("--out", sp.out)->capture_default_str();

  // evolve2d
  cli::Evolve2dConfig e2;
  std::string mode = "gcs";
  long k1 = 0, k2 = 0;
  double omega1 = 0.0, omega2 = 0.0;
  double z_re = 0.0, z_im = 0.0;
  std::string gamma = "uniform";
  auto* evolve2d = app.add_subcommand("evolve2d", "Position trajectory of a 2D coherent state");
  evolve2d->add_option("--mode", mode, "gcs (product gaussian) or gecs (generalized)")
      ->check(CLI::IsMember({"gcs", "gecs"}))
      ->capture_default_str();
  evolve2d->add_option("--n0", e2.gcs.axis_x.n0)->capture_default_str();
  evolve2d->add_option("--sigma0", e2.gcs.axis_x.sigma0)->capture_default_str();
  evolve2d->add_option("--phi0", e2.gcs.axis_x.phi0)->capture_default_str();
  evolve2d->add_option("--m0", e2.gcs.axis_y.n0)->capture_default_str();
  evolve2d->add_option("--sigma0-y", e2.gcs.axis_y.sigma0)->capture_default_str();
  evolve2d->add_option("--phi0-y", e2.gcs.axis_y.phi0)->capture_default_str();
  auto* k1_opt = evolve2d->add_option("--k1", k1, "x-axis SUSY level");
  auto* w1_opt = evolve2d->add_option("--omega1", omega1);
  auto* k2_opt = evolve2d->add_option("--k2", k2, "y-axis SUSY level");
  auto* w2_opt = evolve2d->add_option("--omega2", omega2);
  evolve2d->add_option("--z-re", z_re)->capture_default_str();
  evolve2d->add_option("--z-im", z_im)->capture_default_str();
  evolve2d->add_option("--numax", e2.nu_max)->capture_default_str();
  evolve2d->add_option("--gamma", gamma, "uniform, lowest-angle or highest-angle")
      ->check(CLI::IsMember({"uniform", "lowest-angle", "highest-angle"}))
      ->capture_default_str();
  evolve2d->add_option("--tmax", e2.t_max)->capture_default_str();
  evolve2d->add_option("--frames", e2.frames)->capture_default_str();
  evolve2d->add_option("--grid", e2.points, "points per axis (0 = mode default)")->capture_default_str();
  evolve2d->add_option("--out", e2.out, "trajectory CSV")->capture_default_str();
  evolve2d->add_option("--density-out", e2.density_out, "optional density frames CSV (large)");

  // check
  cli::CheckConfig ck;
  std::vector<std::string> tol;
  auto* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("--suite", ck.selector, "all or a module name")->capture_default_str();
  check->add_option("--tol", tol, "tolerance override key=value (repeatable)");
  check->add_option("--out", ck.out, "machine-readable CSV report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInvalid;
  }

  if (potential->parsed()) return cli::cmd_potential(pot, std::cerr);

  if (evolve1d->parsed()) {
    if (k_opt->count() > 0) e1.k = k1d;
    if (w_opt->count() > 0) e1.omega = omega1d;
    return cli::cmd_evolve1d(e1, std::cerr);
  }

  if (spectrum->parsed()) return cli::cmd_spectrum2d(sp, std::cerr);

  if (evolve2d->parsed()) {
    e2.gecs = mode == "gecs";
    e2.z = {z_re, z_im};
    e2.gamma = gamma == "lowest-angle"    ? cli::GammaChoice::lowest_angle
               : gamma == "highest-angle" ? cli::GammaChoice::highest_angle
                                          : cli::GammaChoice::uniform;
    const std::size_t given = k1_opt->count() + w1_opt->count() + k2_opt->count() + w2_opt->count();
    if (given != 0 && given != 4) {
      std::cerr << "error: a SUSY basis needs all of --k1 --omega1 --k2 --omega2\n";
      return cli::kInvalid;
    }
    if (given == 4) {
      try {
        e2.susy = Susy2dParams{SusyParams(k1, omega1), SusyParams(k2, omega2)};
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kInvalid;
      }
    }
    return cli::cmd_evolve2d(e2, std::cerr);
  }

  if (check->parsed()) {
    try {
      ck.tolerances = cli::parse_tolerances(tol);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cli::kInvalid;
    }
    return cli::cmd_check(ck, std::cout, std::cerr);
  }
  return cli::kInvalid;
}
