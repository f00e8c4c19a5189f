#pragma once

// Batch commands behind the `susywell` executable. Each command validates
// through the owning module, writes CSV with fixed formatting and returns a
// process exit code: 0 success, 1 invariant failure, 2 invalid parameters.

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "susywell/checks.hpp"
#include "susywell/cs2d.hpp"
#include "susywell/csv.hpp"
#include "susywell/gcs1d.hpp"
#include "susywell/spectrum2d.hpp"
#include "susywell/susy1d.hpp"

namespace susywell::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalid = 2 };

/// Frame times t_i = t_max * i / (frames - 1); a single frame is t = 0.
inline std::vector<double> frame_times(double t_max, int frames) {
  if (frames < 1) throw std::invalid_argument("frames must be >= 1");
  if (!(t_max >= 0.0)) throw std::invalid_argument("tmax must be >= 0");
  std::vector<double> t(static_cast<std::size_t>(frames), 0.0);
  for (int i = 1; i < frames; ++i) t[static_cast<std::size_t>(i)] = t_max * i / static_cast<double>(frames - 1);
  return t;
}

namespace detail {

inline std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
  return os;
}

/// "<stem>.observables.csv" next to `out`.
inline std::string sibling(const std::string& out, const std::string& tag) {
  const auto dot = out.rfind('.');
  const auto slash = out.rfind('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? out.substr(0, dot) : out) + "." + tag + ".csv";
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------

struct PotentialConfig {
  long k = 10;
  double omega = 2.0;
  std::size_t points = 1000;
  std::string out = "potential.csv";
};

inline int cmd_potential(const PotentialConfig& c, std::ostream& err) {
  return detail::guarded(err, [&] {
    const SusyParams p(c.k, c.omega);
    const Grid g(c.points);
    auto os = detail::open_out(c.out);
    csv::Writer w(os);
    w.row("x", "V_tilde");
    for (std::size_t j = 0; j < g.size(); ++j) w.row(g[j], susy1d::eval_potential(g[j], p));
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------------------

struct Evolve1dConfig {
  GcsParams gcs{100.0, 10.0, pi / 2.0};
  std::optional<long> k;
  std::optional<double> omega;
  double t_max = 0.012;
  int frames = 60;
  std::size_t points = kDefaultPoints;
  std::string out = "evolve1d.csv";
  std::string observables_out;  ///< defaults to <out stem>.observables.csv
};

inline int cmd_evolve1d(const Evolve1dConfig& c, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (c.k.has_value() != c.omega.has_value()) {
      throw std::invalid_argument("evolve1d: give both --k and --omega for a SUSY basis, or neither");
    }
    const Basis basis = c.k ? Basis::partner(SusyParams(*c.k, *c.omega)) : Basis::original();
    const auto times = frame_times(c.t_max, c.frames);
    const Grid g(c.points);
    const GcsEvolver ev(build_gcs(c.gcs, basis), g);

    auto dens_os = detail::open_out(c.out);
    auto obs_os = detail::open_out(c.observables_out.empty() ? detail::sibling(c.out, "observables") : c.observables_out);
    csv::Writer dens(dens_os), obs(obs_os);
    dens.row("t", "x", "density");
    obs.row("t", "mean_x", "mean_p", "dx_dp");
    for (double t : times) {
      const auto psi = ev.at(t);
      for (std::size_t j = 0; j < g.size(); ++j) dens.row(t, g[j], std::norm(psi[j]));
      const auto o = observables(psi);
      obs.row(t, o.mean_x, o.mean_p, o.product);
    }
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------------------

struct Spectrum2dConfig {
  std::int64_t e_max = 100;
  std::string out = "spectrum2d.csv";
};

inline int cmd_spectrum2d(const Spectrum2dConfig& c, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto table = enumerate_levels(c.e_max);
    auto os = detail::open_out(c.out);
    csv::Writer w(os);
    w.row("nu", "E", "shifted", "degeneracy", "members", "rho_nu_log");
    for (const auto& l : table.levels()) {
      std::string members;
      for (const auto& mm : l.members) {
        if (!members.empty()) members += ';';
        members += std::to_string(mm.n) + ":" + std::to_string(mm.m);
      }
      w.row(l.nu, l.energy, l.shifted, l.degeneracy(), members, moments(table, l.nu).log_value);
    }
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------------------

enum class GammaChoice { uniform, lowest_angle, highest_angle };

struct Evolve2dConfig {
  bool gecs = false;
  Gcs2dParams gcs{{100.0, 10.0, pi / 2.0}, {100.0, 10.0, 0.0}};
  std::optional<Susy2dParams> susy;
  complex z{0.0, 0.0};
  std::size_t nu_max = 200;
  GammaChoice gamma = GammaChoice::uniform;
  double t_max = 0.012;
  int frames = 60;
  std::size_t points = 0;  ///< 0: 2001 per axis for product states, 201 for GeCS
  std::string out = "evolve2d.csv";
  std::string density_out;  ///< optional long-format (t, x, y, density)
};

inline constexpr std::size_t kLargeOutputRows = 1000000;

inline int cmd_evolve2d(const Evolve2dConfig& c, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto times = frame_times(c.t_max, c.frames);
    const std::size_t pts = c.points != 0 ? c.points : (c.gecs ? 201 : kDefaultPoints2d);
    const Grid g(pts);
    const Basis2d basis = c.susy ? Basis2d::partner(*c.susy) : Basis2d::original();

    std::optional<std::ofstream> dens_os;
    std::optional<csv::Writer> dens;
    if (!c.density_out.empty()) {
      const std::size_t rows = times.size() * pts * pts;
      if (rows > kLargeOutputRows) {
        err << "warning: density output will have " << rows << " rows\n";
      }
      dens_os.emplace(detail::open_out(c.density_out));
      dens.emplace(*dens_os);
      dens->row("t", "x", "y", "density");
    }
    const auto dump = [&](double t, const Field2d& f) {
      if (!dens) return;
      for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) dens->row(t, f.gx[i], f.gy[j], std::norm(f(i, j)));
      }
    };

    auto os = detail::open_out(c.out);
    csv::Writer w(os);
    if (c.gecs) {
      const LevelTable table = enumerate_at_least(c.nu_max + 1);
      GecsParams p;
      p.z = c.z;
      p.nu_max = c.nu_max;
      if (c.gamma != GammaChoice::uniform) {
        p.gamma = single_member_gamma(table, c.nu_max,
                                      c.gamma == GammaChoice::highest_angle ? MemberPick::highest_angle : MemberPick::lowest_angle);
      }
      const auto state = build_gecs(p, table, basis);
      w.row("t", "mean_x", "mean_y");
      for (double t : times) {
        const auto f = evaluate_gecs(state, g, g, t);
        const auto m = position_moments(f);
        w.row(t, m.mean_x, m.mean_y);
        dump(t, f);
      }
    } else {
      const Gcs2dEvolver ev(build_gcs2d(c.gcs, basis), g, g);
      w.row("t", "mean_x", "mean_y", "mean_px", "mean_py", "dx_dpx", "dy_dpy");
      for (double t : times) {
        const auto fr = ev.at(t);
        const auto& o = fr.observables;
        w.row(t, o.x.mean_x, o.y.mean_x, o.x.mean_p, o.y.mean_p, o.x.product, o.y.product);
        if (dens) dump(t, fr.field());
      }
    }
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------------------

struct CheckConfig {
  std::string selector = "all";
  std::map<std::string, double> tolerances;
  std::string out;  ///< optional machine-readable CSV
};

/// Parses "key=value" tolerance overrides.
inline std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& s : items) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("tolerance override must be key=value, got '" + s + "'");
    std::size_t used = 0;
    const std::string num = s.substr(eq + 1);
    double v = 0.0;
    try {
      v = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size()) throw std::invalid_argument("tolerance value is not a number: '" + s + "'");
    out[s.substr(0, eq)] = v;
  }
  return out;
}

inline int cmd_check(const CheckConfig& c, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto mods = checks::modules();
    if (c.selector != "all" && std::find(mods.begin(), mods.end(), c.selector) == mods.end()) {
      throw std::invalid_argument("unknown suite '" + c.selector + "'");
    }
    const auto rep = checks::run(c.selector, c.tolerances);
    checks::write_text(out, rep);
    if (!c.out.empty()) {
      auto os = detail::open_out(c.out);
      checks::write_csv(os, rep);
    }
    return static_cast<int>(rep.all_pass() ? kOk : kCheckFailed);
  });
}

}  // namespace susywell::cli
