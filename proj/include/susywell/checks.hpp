#pragma once

/**
 * @file checks.hpp
 * @brief Named invariant checks for every module, run by `susywell check`.
 *
 * Each check computes one scalar and passes when lo <= value <= hi. Checks
 * are deterministic; running the suite twice yields identical reports.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "susywell/cs2d.hpp"
#include "susywell/csv.hpp"
#include "susywell/gcs1d.hpp"
#include "susywell/numerics.hpp"
#include "susywell/spectrum2d.hpp"
#include "susywell/susy1d.hpp"
#include "susywell/susy2d.hpp"
#include "susywell/well1d.hpp"

namespace susywell::checks {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Check {
  std::string module;
  std::string name;
  double lo = -kInf;
  double hi = kInf;
  std::function<double()> compute;
};

struct CheckResult {
  std::string module;
  std::string name;
  double value = 0.0;
  double lo = -kInf;
  double hi = kInf;
  bool pass = false;
};

struct Report {
  std::vector<CheckResult> results;
  bool all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
  }
};

// ---------------------------------------------------------------------------
// Check bodies
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<double>> real_table(long count, const Grid& g, const std::function<double(long, double)>& f) {
  std::vector<std::vector<double>> t(static_cast<std::size_t>(count));
  for (long n = 1; n <= count; ++n) {
    auto& row = t[static_cast<std::size_t>(n - 1)];
    row.resize(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) row[j] = f(n, g[j]);
  }
  return t;
}

/// max_{n,m} |<f_n|f_m> - scale * delta_nm|
inline double gram_deviation(const std::vector<std::vector<double>>& t, double spacing, double scale) {
  double worst = 0.0;
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a; b < t.size(); ++b) {
      const double ip = inner_real(t[a], t[b], spacing);
      worst = std::max(worst, std::abs(ip - (a == b ? scale : 0.0)));
    }
  }
  return worst;
}

inline double sin_residual_max(long n, std::size_t points) {
  const Grid g(points);
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = std::sin(static_cast<double>(n) * g[j]);
  const auto d2 = differentiate(g, f, 2);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    worst = std::max(worst, std::abs(d2[j] + static_cast<double>(n * n) * f[j]));
  }
  return worst;
}

}  // namespace detail

inline double quadrature_exactness() {
  const Grid g;
  const auto t = detail::real_table(150, g, [](long n, double x) { return std::sin(static_cast<double>(n) * x); });
  return detail::gram_deviation(t, g.spacing(), pi / 2.0);
}

/// Smallest error reduction factor when the grid is refined by 2, over n <= 120.
inline double differentiation_order() {
  double worst = kInf;
  for (long n : {1L, 2L, 3L, 5L, 8L, 13L, 21L, 34L, 55L, 89L, 120L}) {
    const std::size_t base = std::max<std::size_t>(33, static_cast<std::size_t>(16 * n + 1));
    const double coarse = detail::sin_residual_max(n, base);
    const double fine = detail::sin_residual_max(n, 2 * base - 1);
    worst = std::min(worst, coarse / fine);
  }
  return worst;
}

/// Largest violation of w in [0, 1] and of max w = 1 for integer centers.
inline double gaussian_weights_range() {
  double worst = 0.0;
  for (double c : {1.0, 5.0, 37.0, 100.0, 3.4, 250.5}) {
    for (double w : {0.1, 1.0, 2.0, 10.0}) {
      const auto g = stable_gaussian_weights(c, w, 1, 400);
      double top = 0.0;
      for (double v : g.weights) {
        worst = std::max({worst, -v, v - 1.0});
        top = std::max(top, v);
      }
      if (c == std::floor(c)) worst = std::max(worst, std::abs(top - 1.0));
    }
  }
  return worst;
}

inline double well_orthonormality() {
  const Grid g;
  const auto t = detail::real_table(150, g, [](long n, double x) { return well1d::psi_at(n, x); });
  return detail::gram_deviation(t, g.spacing(), 1.0);
}

inline double well_schrodinger_residual() {
  const Grid g;
  double worst = 0.0;
  for (long n = 1; n <= 120; ++n) {
    const auto psi = well1d::eval_psi(n, g);
    const auto d2 = differentiate(psi, 2);
    const double e = static_cast<double>(well1d::energy(n));
    double r = 0.0;
    for (std::size_t j = kBoundaryBand; j + kBoundaryBand < g.size(); ++j) r = std::max(r, std::abs(-d2[j] - e * psi[j]));
    worst = std::max(worst, r / e);
  }
  return worst;
}

inline const std::vector<double>& z2_omegas() {
  static const std::vector<double> w{-1.0, -0.5, 2.0, 1.5};
  return w;
}

inline double z2_potential() {
  const Grid g(2001);
  double worst = 0.0;
  for (long k = 1; k <= 12; ++k) {
    for (double w : z2_omegas()) {
      const SusyParams p(k, w);
      const auto q = p.mirrored();
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double x = g[j];
        worst = std::max(worst, std::abs(susy1d::eval_potential(x, p) - susy1d::eval_potential(pi - x, q)));
      }
    }
  }
  return worst;
}

/// psi~_n(pi - x; 1 - w) = -cos(n pi) psi~_n(x; w), and +cos(k pi) for the extra state.
inline double z2_eigenstates(long k, double omega, long n_max, const Grid& g) {
  const SusyParams p(k, omega);
  const auto q = p.mirrored();
  double worst = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    const double sign = n == k ? std::cos(static_cast<double>(k) * pi) : -std::cos(static_cast<double>(n) * pi);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g[j];
      worst = std::max(worst, std::abs(susy1d::partner_mode_at(n, pi - x, q) - sign * susy1d::partner_mode_at(n, x, p)));
    }
  }
  return worst;
}

inline double z2_eigenstates_suite() {
  const Grid g(2001);
  double worst = 0.0;
  for (long k : {3L, 10L}) {
    for (double w : z2_omegas()) worst = std::max(worst, z2_eigenstates(k, w, 30, g));
  }
  return worst;
}

/// max interior |V~ - 2 (eta)'_fd|
inline double potential_vs_eta(const SusyParams& p, const Grid& g) {
  const auto eta = susy1d::sample_eta(g, p);
  const auto d1 = differentiate(g, eta, 1);
  double worst = 0.0;
  for (std::size_t j = kBoundaryBand; j + kBoundaryBand < g.size(); ++j) {
    worst = std::max(worst, std::abs(susy1d::eval_potential(g[j], p) - 2.0 * d1[j]));
  }
  return worst;
}

/// max |eta'_fd - eta^2 - 2k cot(kx) eta| over interior nodes with sin(kx) != 0.
inline double riccati_link(const SusyParams& p, const Grid& g) {
  const auto eta = susy1d::sample_eta(g, p);
  const auto d1 = differentiate(g, eta, 1);
  const double k = static_cast<double>(p.k());
  double worst = 0.0;
  for (std::size_t j = kBoundaryBand; j + kBoundaryBand < g.size(); ++j) {
    const double s = std::sin(k * g[j]);
    if (std::abs(s) < 1e-8) continue;
    const double beta = k * std::cos(k * g[j]) / s;
    worst = std::max(worst, std::abs(d1[j] - eta[j] * eta[j] - 2.0 * beta * eta[j]));
  }
  return worst;
}

template <class F>
double over_susy_params(std::initializer_list<long> ks, std::initializer_list<double> ws, F&& f) {
  double worst = 0.0;
  for (long k : ks) {
    for (double w : ws) worst = std::max(worst, f(SusyParams(k, w)));
  }
  return worst;
}

inline double partner_orthonormality(const SusyParams& p, long n_max, const Grid& g) {
  const auto t = detail::real_table(n_max, g, [&](long n, double x) { return susy1d::partner_mode_at(n, x, p); });
  return detail::gram_deviation(t, g.spacing(), 1.0);
}

/// max_n schrodinger_residual(psi~_n, n^2), including the extra state at n = k.
inline double spectrum_preservation(const SusyParams& p, long n_max, const Grid& g) {
  double worst = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    const auto psi = susy1d::eval_partner_mode(n, g, p);
    worst = std::max(worst, susy1d::schrodinger_residual(psi, static_cast<double>(n * n), p));
  }
  return worst;
}

inline GcsParams figure_gcs() { return {100.0, 10.0, pi / 2.0}; }

inline double norm_conservation() {
  const Grid g;
  double worst = 0.0;
  for (const auto& basis : {Basis::original(), Basis::partner(SusyParams(100, 2.0))}) {
    const GcsEvolver ev(build_gcs(figure_gcs(), basis), g);
    for (int i = 0; i <= 20; ++i) {
      const double t = 0.02 * i / 20.0;
      worst = std::max(worst, std::abs(norm_squared(ev.at(t)) - 1.0));
    }
  }
  return worst;
}

inline double quasi_classical_tracking() {
  const Grid g;
  const auto p = figure_gcs();
  const GcsEvolver ev(build_gcs(p, Basis::original()), g);
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double t = 0.004 * i / 40.0;
    worst = std::max(worst, std::abs(observables(ev.at(t)).mean_x - classical_position(p, t)));
  }
  return worst;
}

inline double uncertainty_product() {
  return observables(build_gcs(figure_gcs(), Basis::original()), Grid(), 0.0).product;
}

inline double basis_distance(const GcsParams& gp, const SusyParams& sp, double t, const Grid& g) {
  return l2_distance(evaluate(build_gcs(gp, Basis::partner(sp)), g, t), evaluate(build_gcs(gp, Basis::original()), g, t));
}

inline double off_resonance_distance() { return basis_distance({30.0, 5.0, pi / 2.0}, SusyParams(100, 2.0), 0.0, Grid()); }

inline double coincident_ratio() {
  const Grid g;
  return basis_distance(figure_gcs(), SusyParams(100, 2.0), 0.0, g) / basis_distance({30.0, 5.0, pi / 2.0}, SusyParams(100, 2.0), 0.0, g);
}

/// Figure time frames: 60 equally spaced times on [0, 0.012].
inline std::vector<double> figure_frames() {
  std::vector<double> t(60);
  for (int i = 0; i < 60; ++i) t[static_cast<std::size_t>(i)] = 0.012 * i / 59.0;
  return t;
}

/// max over figure frames of the L-inf density deviation between SUSY and original GCS.
inline double coincident_density_deviation(double omega, const Grid& g) {
  const GcsEvolver susy(build_gcs(figure_gcs(), Basis::partner(SusyParams(100, omega))), g);
  const GcsEvolver orig(build_gcs(figure_gcs(), Basis::original()), g);
  double worst = 0.0;
  for (double t : figure_frames()) worst = std::max(worst, density_linf_deviation(susy.at(t), orig.at(t)));
  return worst;
}

/// Deviation with omega = -1 divided by deviation with omega = 2; below 1 means suppression.
inline double z2_suppression_ratio() {
  const Grid g;
  return coincident_density_deviation(-1.0, g) / coincident_density_deviation(2.0, g);
}

/**
 * Largest secondary density peak (outside 3 widths of <x>) relative to the
 * main peak, over frames before the packet reaches a wall, coincident case
 * with the given omega.
 */
inline double coincident_side_modes(double omega) {
  const Grid g;
  const auto p = figure_gcs();
  const GcsEvolver ev(build_gcs(p, Basis::partner(SusyParams(100, omega))), g);
  double best = 0.0;
  for (int i = 0; i <= 30; ++i) {
    const double t = 0.006 * i / 30.0;
    const auto psi = ev.at(t);
    const double center = observables(psi).mean_x;
    best = std::max(best, secondary_peak_ratio(psi, center, 3.0 * closed_form_params(p, t).s));
  }
  return best;
}

inline double permutation_closure() {
  const auto t = enumerate_levels(20000);
  double bad = 0.0;
  for (const auto& l : t.levels()) {
    for (const auto& mm : l.members) {
      if (std::find(l.members.begin(), l.members.end(), LevelMember{mm.m, mm.n}) == l.members.end()) bad += 1.0;
    }
  }
  return bad;
}

inline double completeness() {
  const std::int64_t e_max = 20000;
  const auto t = enumerate_levels(e_max);
  std::size_t total = 0;
  for (const auto& l : t.levels()) total += l.degeneracy();
  std::size_t brute = 0;
  for (long n = 1; n * n < e_max; ++n) {
    for (long m = 1; n * n + m * m <= e_max; ++m) ++brute;
  }
  return std::abs(static_cast<double>(total) - static_cast<double>(brute));
}

inline double angle_symmetry() {
  const auto t = enumerate_levels(20000);
  double worst = 0.0;
  for (const auto& l : t.levels()) {
    const std::size_t d = l.degeneracy();
    for (std::size_t i = 0; i < d; ++i) worst = std::max(worst, std::abs(l.angles[i] + l.angles[d - 1 - i] - pi / 2.0));
  }
  return worst;
}

struct Pair2d {
  long n, m;
  Susy2dParams p;
};

inline double separability() {
  const Grid g(kDefaultPoints2d);
  const std::vector<Pair2d> cases{
      {3, 4, {SusyParams(10, 2.0), SusyParams(10, 2.0)}},
      {10, 10, {SusyParams(10, 2.0), SusyParams(10, 2.0)}},
      {5, 7, {SusyParams(10, 2.0), SusyParams(20, -1.0)}},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const double r2 = susy2d::residual2d(c.n, c.m, c.p, g, g);
    const double rs = susy2d::separable_residual(c.n, c.m, c.p, g, g);
    worst = std::max(worst, std::abs(r2 - rs));
  }
  return worst;
}

/// Mutual overlaps of the E = 50 partner states with k1 = 5, k2 = 7 (two of them edge states).
inline double degenerate_orthogonality() {
  const Grid g(kDefaultPoints2d);
  const Susy2dParams p{SusyParams(5, 2.0), SusyParams(7, -1.0)};
  const auto table = enumerate_levels(50);
  const auto* level = table.find(50);
  std::vector<Field2d> states;
  for (const auto& mm : level->members) states.push_back(susy2d::eval_psi2d_tilde(mm.n, mm.m, g, g, p));
  double worst = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a; b < states.size(); ++b) {
      worst = std::max(worst, std::abs(inner(states[a], states[b]) - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

inline double residual2d_contract() {
  const Grid g(kDefaultPoints2d);
  const Susy2dParams p{SusyParams(10, 2.0), SusyParams(20, -1.0)};
  std::vector<std::pair<long, long>> pairs{{10, 20}, {10, 7}, {3, 20}};
  for (long n : {1L, 13L, 37L, 60L}) {
    for (long m : {1L, 13L, 37L, 60L}) pairs.emplace_back(n, m);
  }
  double worst = 0.0;
  for (const auto& [n, m] : pairs) worst = std::max(worst, susy2d::residual2d(n, m, p, g, g));
  return worst;
}

inline double gcs2d_factorization() {
  const Grid g(kDefaultPoints2d);
  const Gcs2dParams p{{30.0, 5.0, pi / 2.0}, {40.0, 4.0, pi / 3.0}};
  const auto frame = evolve_gcs2d(build_gcs2d(p), g, g, 0.001);
  const auto field = frame.field();
  std::vector<double> row(g.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) row[j] = std::norm(field(i, j));
    const double marginal = integrate(g, row);
    worst = std::max(worst, std::abs(marginal - std::norm(frame.psi_x[i])));
  }
  return worst;
}

inline const LevelTable& gecs_table() {
  static const LevelTable t = enumerate_at_least(201);
  return t;
}

inline double gecs_normalization_identity() {
  double worst = 0.0;
  for (complex z : {complex(1.0, 0.0), std::polar(3.0, pi / 4.0)}) {
    GecsParams p;
    p.z = z;
    p.nu_max = 200;
    worst = std::max(worst, std::abs(gecs_norm_identity(build_gecs(p, gecs_table())) - 1.0));
  }
  return worst;
}

/// gamma on level 50 (nu = 17): (1, 2i, 3)/sqrt(14) and a cyclic permutation of it.
inline std::pair<Field2d, Field2d> permuted_gecs_pair(const Grid& g) {
  const auto& table = gecs_table();
  const auto* level = table.find(50);
  const double s = std::sqrt(14.0);
  GecsParams a;
  a.z = complex(7.0, 0.0);
  a.gamma[level->nu] = {complex(1.0 / s, 0.0), complex(0.0, 2.0 / s), complex(3.0 / s, 0.0)};
  GecsParams b = a;
  b.gamma[level->nu] = {complex(3.0 / s, 0.0), complex(1.0 / s, 0.0), complex(0.0, 2.0 / s)};
  return {evaluate_gecs(build_gecs(a, table), g, g, 0.0), evaluate_gecs(build_gecs(b, table), g, g, 0.0)};
}

inline double permutation_norm_change() {
  const auto [a, b] = permuted_gecs_pair(Grid(401));
  return std::abs(norm_squared(a) - norm_squared(b));
}

inline double permutation_state_change() {
  const auto [a, b] = permuted_gecs_pair(Grid(401));
  Field2d d(a.gx, a.gy);
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] = a.values[i] - b.values[i];
  return std::sqrt(norm_squared(d));
}

inline double shifted_phase_periodicity() {
  const auto table = enumerate_levels(100);
  GecsParams p;
  p.z = std::polar(0.2, 0.3);
  p.nu_max = 6;
  const auto s = build_gecs(p, table);
  std::int64_t g = 0;
  for (std::size_t nu = 1; nu <= p.nu_max; ++nu) g = std::gcd(g, table[nu].shifted);
  const Grid grid(201);
  const double t = 0.3;
  const auto a = evaluate_gecs(s, grid, grid, t);
  const auto b = evaluate_gecs(s, grid, grid, t + 2.0 * pi / static_cast<double>(g));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

inline std::vector<Check> default_checks() {
  const Grid g;
  std::vector<Check> c;
  c.push_back({"numerics", "numerics.quadrature_exactness", -kInf, 1e-8, quadrature_exactness});
  c.push_back({"numerics", "numerics.differentiation_order", 16.0, kInf, differentiation_order});
  c.push_back({"numerics", "numerics.gaussian_weights_range", -kInf, 0.0, gaussian_weights_range});

  c.push_back({"well1d", "well1d.orthonormality", -kInf, 1e-8, well_orthonormality});
  c.push_back({"well1d", "well1d.schrodinger_residual", -kInf, 1e-6, well_schrodinger_residual});

  c.push_back({"susy1d", "susy1d.z2_potential", -kInf, 1e-11, z2_potential});
  c.push_back({"susy1d", "susy1d.z2_eigenstates", -kInf, 1e-10, z2_eigenstates_suite});
  c.push_back({"susy1d", "susy1d.potential_is_twice_eta_prime", -kInf, 1e-4, [g] {
                 return over_susy_params({1, 5, 10}, {2.0, -1.0}, [&](const SusyParams& p) { return potential_vs_eta(p, g); });
               }});
  c.push_back({"susy1d", "susy1d.riccati_link", -kInf, 1e-4, [g] {
                 return over_susy_params({1, 5, 10}, {2.0, -1.0}, [&](const SusyParams& p) { return riccati_link(p, g); });
               }});
  c.push_back({"susy1d", "susy1d.eta_ode_residual", -kInf, 1e-4, [g] {
                 return over_susy_params({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {2.0, -1.0},
                                         [&](const SusyParams& p) { return susy1d::eta_ode_residual(g, p); });
               }});
  c.push_back({"susy1d", "susy1d.partner_orthonormality", -kInf, 1e-6, [g] {
                 return over_susy_params({10, 100}, {2.0}, [&](const SusyParams& p) { return partner_orthonormality(p, 120, g); });
               }});
  // Residual divided by the k^2/100 contract multiplier for k > 10.
  c.push_back({"susy1d", "susy1d.spectrum_preservation", -kInf, 1e-4, [g] {
                 return over_susy_params({10, 100}, {2.0, -1.0}, [&](const SusyParams& p) {
                   return spectrum_preservation(p, 120, g) / susy1d::residual_scale(p);
                 });
               }});

  c.push_back({"gcs1d", "gcs1d.norm_conservation", -kInf, 1e-6, norm_conservation});
  c.push_back({"gcs1d", "gcs1d.quasi_classical_tracking", -kInf, 0.05, quasi_classical_tracking});
  c.push_back({"gcs1d", "gcs1d.uncertainty_saturation", 0.5, 0.55, uncertainty_product});
  c.push_back({"gcs1d", "gcs1d.off_resonance_agreement", -kInf, 1e-2, off_resonance_distance});
  c.push_back({"gcs1d", "gcs1d.coincident_discrepancy_ratio", 5.0, kInf, coincident_ratio});
  c.push_back({"gcs1d", "gcs1d.z2_suppression_ratio", -kInf, 1.0, z2_suppression_ratio});
  c.push_back({"gcs1d", "gcs1d.coincident_side_modes", 0.05, kInf, [] { return coincident_side_modes(2.0); }});

  c.push_back({"spectrum2d", "spectrum2d.permutation_closure", -kInf, 0.0, permutation_closure});
  c.push_back({"spectrum2d", "spectrum2d.completeness", -kInf, 0.0, completeness});
  c.push_back({"spectrum2d", "spectrum2d.angle_symmetry", -kInf, 1e-12, angle_symmetry});

  c.push_back({"susy2d", "susy2d.separability", -kInf, 1e-10, separability});
  c.push_back({"susy2d", "susy2d.degenerate_orthogonality", -kInf, 1e-6, degenerate_orthogonality});
  c.push_back({"susy2d", "susy2d.residual_contract", -kInf, 1e-4, residual2d_contract});

  c.push_back({"cs2d", "cs2d.gcs_factorization", -kInf, 1e-8, gcs2d_factorization});
  c.push_back({"cs2d", "cs2d.gecs_normalization", -kInf, 1e-12, gecs_normalization_identity});
  c.push_back({"cs2d", "cs2d.permutation_norm_invariance", -kInf, 1e-8, permutation_norm_change});
  c.push_back({"cs2d", "cs2d.permutation_changes_state", 1e-3, kInf, permutation_state_change});
  c.push_back({"cs2d", "cs2d.shifted_phase_periodicity", -kInf, 1e-8, shifted_phase_periodicity});
  return c;
}

/// Names of modules that own at least one check.
inline std::vector<std::string> modules() {
  return {"numerics", "well1d", "susy1d", "gcs1d", "spectrum2d", "susy2d", "cs2d"};
}

/**
 * Runs the checks whose module equals `selector` (or all for "all").
 * An override `key -> v` applies to every check whose name contains `key`
 * and replaces its finite bound (hi if finite, else lo).
 */
inline Report run(const std::string& selector, const std::map<std::string, double>& overrides = {}) {
  Report rep;
  for (auto& c : default_checks()) {
    if (selector != "all" && c.module != selector) continue;
    for (const auto& [key, v] : overrides) {
      if (c.name.find(key) == std::string::npos) continue;
      if (std::isfinite(c.hi)) {
        c.hi = v;
      } else {
        c.lo = v;
      }
    }
    CheckResult r{c.module, c.name, c.compute(), c.lo, c.hi, false};
    r.pass = r.value >= r.lo && r.value <= r.hi;
    rep.results.push_back(std::move(r));
  }
  return rep;
}

inline void write_text(std::ostream& os, const Report& rep) {
  for (const auto& r : rep.results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name << "  value=" << csv::num(r.value);
    if (std::isfinite(r.lo)) os << "  lo=" << csv::num(r.lo);
    if (std::isfinite(r.hi)) os << "  hi=" << csv::num(r.hi);
    os << '\n';
  }
  const auto failed = std::count_if(rep.results.begin(), rep.results.end(), [](const CheckResult& r) { return !r.pass; });
  os << rep.results.size() << " checks, " << failed << " failed\n";
}

inline void write_csv(std::ostream& os, const Report& rep) {
  csv::Writer w(os);
  w.row("module", "name", "value", "lo", "hi", "pass");
  for (const auto& r : rep.results) {
    w.row(r.module, r.name, r.value, std::isfinite(r.lo) ? csv::num(r.lo) : std::string("-inf"),
          std::isfinite(r.hi) ? csv::num(r.hi) : std::string("inf"), r.pass ? "1" : "0");
  }
}

}  // namespace susywell::checks
