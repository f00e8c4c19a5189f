#pragma once

/**
 * @file cs2d.hpp
 * @brief Coherent states of the square box and its separable SUSY partner.
 *
 * Two families:
 *  - product gaussian states, C_{n,m} = C_n C_m with one GcsParams per axis;
 *  - generalized coherent states over the ordered degenerate spectrum,
 *
 *      Psi(x, y, t) = N_Ge^{-1/2} sum_nu z^nu / sqrt(rho(nu)) e^{-i shifted_nu t} Phi^nu(x, y),
 *      Phi^nu = sum_mu gamma_{nu,mu} Psi^{nu,mu},
 *
 *    with gamma normalized per level (sum_mu |gamma_{nu,mu}|^2 = 1), so that
 *    N_Ge = sum_nu |z|^{2 nu} / rho(nu) does not depend on gamma.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "susywell/gcs1d.hpp"
#include "susywell/numerics.hpp"
#include "susywell/spectrum2d.hpp"
#include "susywell/susy2d.hpp"

namespace susywell {

// ---------------------------------------------------------------------------
// Product gaussian states
// ---------------------------------------------------------------------------

struct Gcs2dParams {
  GcsParams axis_x;
  GcsParams axis_y;
};

/// Basis choice per axis; a SUSY product basis uses Basis::partner on both.
struct Basis2d {
  Basis x = Basis::original();
  Basis y = Basis::original();

  static Basis2d original() { return {}; }
  static Basis2d partner(const Susy2dParams& p) { return {Basis::partner(p.px), Basis::partner(p.py)}; }
};

struct Gcs2dState {
  GcsState x;
  GcsState y;

  /// C_{n,m} = C_n C_m.
  complex coefficient(long n, long m) const { return x.coefficient(n) * y.coefficient(m); }

  /// Coefficient of (n, m) at time t.
  complex evolved_coefficient(long n, long m, double t) const {
    const double e = static_cast<double>(n) * n + static_cast<double>(m) * m;
    return coefficient(n, m) * std::polar(1.0, -e * t);
  }
};

inline Gcs2dState build_gcs2d(const Gcs2dParams& p, const Basis2d& basis = Basis2d::original()) {
  return {build_gcs(p.axis_x, basis.x), build_gcs(p.axis_y, basis.y)};
}

struct Gcs2dObservables {
  Observables x;
  Observables y;
};

struct Gcs2dFrame {
  SampledWave psi_x;
  SampledWave psi_y;
  Gcs2dObservables observables;

  /// The full amplitude psi_x(x) psi_y(y); only built on request.
  Field2d field() const { return outer(psi_x, psi_y); }
};

/// Time evolution of a product state; each axis keeps its own sampled basis.
class Gcs2dEvolver {
 public:
  Gcs2dEvolver(const Gcs2dState& s, const Grid& gx, const Grid& gy) : ex_(s.x, gx), ey_(s.y, gy) {}

  Gcs2dFrame at(double t) const {
    auto px = ex_.at(t);
    auto py = ey_.at(t);
    Gcs2dObservables o{observables(px), observables(py)};
    return {std::move(px), std::move(py), o};
  }

 private:
  GcsEvolver ex_;
  GcsEvolver ey_;
};

inline Gcs2dFrame evolve_gcs2d(const Gcs2dState& s, const Grid& gx, const Grid& gy, double t) {
  return Gcs2dEvolver(s, gx, gy).at(t);
}

// ---------------------------------------------------------------------------
// Generalized coherent states
// ---------------------------------------------------------------------------

/// Tail bound violated; `required_nu_max` estimates a sufficient truncation.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, std::size_t required) : std::runtime_error(what), required_nu_max(required) {}
  std::size_t required_nu_max;
};

struct GecsParams {
  complex z{0.0, 0.0};
  std::size_t nu_max = 200;
  /// gamma_{nu, mu}; levels absent from the map use 1/sqrt(d_nu).
  std::map<std::size_t, std::vector<complex>> gamma;
};

/// Selects a single member of every level (unit gamma on it).
enum class MemberPick { lowest_angle, highest_angle };

/**
 * gamma concentrated on one member per level. The remaining members get a
 * tiny nonzero weight so every gamma stays nonzero; the level is then
 * renormalized.
 */
inline std::map<std::size_t, std::vector<complex>> single_member_gamma(const LevelTable& table, std::size_t nu_max,
                                                                       MemberPick pick, double floor = 1e-8) {
  std::map<std::size_t, std::vector<complex>> g;
  for (std::size_t nu = 0; nu <= nu_max && nu < table.size(); ++nu) {
    const std::size_t d = table[nu].degeneracy();
    std::vector<complex> v(d, complex(floor, 0.0));
    v[pick == MemberPick::highest_angle ? d - 1 : 0] = 1.0;
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    for (auto& c : v) c /= std::sqrt(s);
    g[nu] = std::move(v);
  }
  return g;
}

struct GecsTerm {
  std::size_t nu;
  std::size_t mu;
  LevelMember member;
  std::int64_t shifted;
  complex coefficient;  ///< z^nu gamma_{nu,mu} / sqrt(rho(nu) N_Ge)
};

struct GecsState {
  GecsParams params;
  double normalization = 0.0;  ///< N_Ge
  double tail_bound = 0.0;     ///< upper bound on the neglected part of N_Ge
  std::vector<GecsTerm> terms;
  Basis2d basis;
};

namespace detail {

/// log(|z|^{2 nu} / rho(nu)); -inf for z = 0, nu > 0.
inline double log_weight(const LevelTable& table, double abs_z, std::size_t nu) {
  if (nu == 0) return 0.0;
  if (abs_z == 0.0) return -std::numeric_limits<double>::infinity();
  return 2.0 * static_cast<double>(nu) * std::log(abs_z) - table.log_moment(nu);
}

}  // namespace detail

/**
 * Partial sum of N_Ge to nu_max and a bound on the remainder.
 *
 * For nu > nu_max the shifted energies exceed E'_{nu_max}, so the remainder is
 * at most term(nu_max) * r / (1 - r) with r = |z|^2 / E'_{nu_max}.
 */
struct GecsNormalization {
  double sum = 0.0;
  double tail_bound = 0.0;
};

inline GecsNormalization gecs_normalization(const LevelTable& table, complex z, std::size_t nu_max) {
  if (nu_max >= table.size()) {
    throw std::out_of_range("gecs_normalization: nu_max = " + std::to_string(nu_max) + " needs a table with more than " +
                            std::to_string(nu_max) + " levels");
  }
  const double a = std::abs(z);
  GecsNormalization out;
  for (std::size_t nu = 0; nu <= nu_max; ++nu) out.sum += std::exp(detail::log_weight(table, a, nu));
  if (a == 0.0) return out;
  const double last = std::exp(detail::log_weight(table, a, nu_max));
  const double r = a * a / static_cast<double>(table[nu_max].shifted);
  out.tail_bound = r < 1.0 ? last * r / (1.0 - r) : std::numeric_limits<double>::infinity();
  return out;
}

/// Rough truncation needed for the tail bound, extrapolating the last table ratio.
inline std::size_t estimate_nu_max(const LevelTable& table, complex z, double rel_tol) {
  const double a2 = std::norm(z);
  const std::size_t top = table.size() - 1;
  double log_term = detail::log_weight(table, std::sqrt(a2), top);
  double e = static_cast<double>(table[top].shifted);
  // Shifted energies grow at least linearly in nu on average; use the table's mean slope.
  const double slope = e / static_cast<double>(top);
  std::size_t nu = top;
  while (nu < 100000000) {
    const double r = a2 / e;
    if (r < 1.0 && std::exp(log_term) * r / (1.0 - r) < rel_tol) return nu;
    ++nu;
    e += slope;
    log_term += std::log(a2) - std::log(e);
  }
  return nu;
}

inline constexpr double kGecsTailTolerance = 1e-12;

inline GecsState build_gecs(const GecsParams& p, const LevelTable& table, const Basis2d& basis = Basis2d::original()) {
  const auto norm = gecs_normalization(table, p.z, p.nu_max);
  if (!(norm.tail_bound < kGecsTailTolerance * norm.sum)) {
    const std::size_t need = estimate_nu_max(table, p.z, kGecsTailTolerance * norm.sum);
    throw TruncationError("build_gecs: truncation at nu_max = " + std::to_string(p.nu_max) +
                              " leaves a tail above 1e-12 of N_Ge; need nu_max >= ~" + std::to_string(need) +
                              " (and a level table that long)",
                          need);
  }
  GecsState s{p, norm.sum, norm.tail_bound, {}, basis};
  const double a = std::abs(p.z);
  const double arg = std::arg(p.z);
  for (std::size_t nu = 0; nu <= p.nu_max; ++nu) {
    const auto& level = table[nu];
    const double lw = detail::log_weight(table, a, nu);
    if (std::isinf(lw)) continue;  // z = 0 kills every level above the ground state
    const double mag = std::exp(0.5 * lw - 0.5 * std::log(norm.sum));
    const complex zfac = std::polar(mag, static_cast<double>(nu) * arg);
    std::vector<complex> gamma;
    if (auto it = p.gamma.find(nu); it != p.gamma.end()) {
      gamma = it->second;
      if (gamma.size() != level.degeneracy()) {
        throw std::invalid_argument("build_gecs: gamma for level " + std::to_string(nu) + " has " +
                                    std::to_string(gamma.size()) + " entries, level has " +
                                    std::to_string(level.degeneracy()));
      }
      double sum = 0.0;
      for (const auto& g : gamma) {
        if (g == complex{}) throw std::invalid_argument("build_gecs: gamma entries must be nonzero");
        sum += std::norm(g);
      }
      if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("build_gecs: gamma for level " + std::to_string(nu) + " is not unit-normalized");
      }
    } else {
      gamma.assign(level.degeneracy(), complex(1.0 / std::sqrt(static_cast<double>(level.degeneracy())), 0.0));
    }
    for (std::size_t mu = 0; mu < level.degeneracy(); ++mu) {
      s.terms.push_back({nu, mu, level.members[mu], level.shifted, zfac * gamma[mu]});
    }
  }
  return s;
}

/// sum_nu |z|^{2nu}/rho(nu) (sum_mu |gamma|^2) / N_Ge, from the built coefficients.
inline double gecs_norm_identity(const GecsState& s) {
  double acc = 0.0;
  for (const auto& t : s.terms) acc += std::norm(t.coefficient);
  return acc;
}

/**
 * Sum of coefficient * e^{-i shifted t} * phi_n(x) phi_m(y) on the product grid,
 * evaluated as Phi_x^T C Phi_y with one sampled 1D mode per distinct n and m.
 */
inline Field2d evaluate_gecs(const GecsState& s, const Grid& gx, const Grid& gy, double t) {
  long n_top = 1, m_top = 1;
  for (const auto& term : s.terms) {
    n_top = std::max(n_top, term.member.n);
    m_top = std::max(m_top, term.member.m);
  }
  const ModeMatrix mx(s.basis.x, {1, n_top}, gx);
  const ModeMatrix my(s.basis.y, {1, m_top}, gy);

  // partial[n][j] = sum_m c_{n,m} phi_m(y_j)
  std::vector<std::vector<complex>> partial(static_cast<std::size_t>(n_top));
  for (const auto& term : s.terms) {
    auto& acc = partial[static_cast<std::size_t>(term.member.n - 1)];
    if (acc.empty()) acc.assign(gy.size(), complex{});
    const complex c = term.coefficient * std::polar(1.0, -static_cast<double>(term.shifted) * t);
    const auto phi = my.mode(term.member.m);
    for (std::size_t j = 0; j < gy.size(); ++j) acc[j] += c * phi[j];
  }
  Field2d out(gx, gy);
  for (long n = 1; n <= n_top; ++n) {
    const auto& acc = partial[static_cast<std::size_t>(n - 1)];
    if (acc.empty()) continue;
    const auto phi = mx.mode(n);
    for (std::size_t i = 0; i < gx.size(); ++i) {
      complex* row = out.values.data() + i * gy.size();
      for (std::size_t j = 0; j < gy.size(); ++j) row[j] += phi[i] * acc[j];
    }
  }
  return out;
}

struct Moments2d {
  double norm = 0.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
};

/// Norm and position means of a 2D amplitude by iterated quadrature.
inline Moments2d position_moments(const Field2d& f) {
  Moments2d m;
  m.norm = norm_squared(f);
  m.mean_x = integrate2d(f.gx, f.gy, [&](std::size_t i, std::size_t j) { return f.gx[i] * std::norm(f(i, j)); }) / m.norm;
  m.mean_y = integrate2d(f.gx, f.gy, [&](std::size_t i, std::size_t j) { return f.gy[j] * std::norm(f(i, j)); }) / m.norm;
  return m;
}

}  // namespace susywell
