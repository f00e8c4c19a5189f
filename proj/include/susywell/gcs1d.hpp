#pragma once

/**
 * @file gcs1d.hpp
 * @brief Gaussian Klauder coherent states in the infinite well and its SUSY
 *        partners.
 *
 * A state is the superposition
 *
 *   Psi(x, t) = sum_n C_n e^{-i n^2 t} phi_n(x),
 *   C_n = exp(-(n - n0)^2 / (4 sigma0^2) - i n phi0) / sqrt(N_G),
 *
 * where phi_n is either sqrt(2/pi) sin(n x) or the partner eigenstate of
 * susy1d (the extra state standing in at n = k). The sum runs over the
 * window [max(1, ceil(n0 - 10 sigma0)), ceil(n0 + 10 sigma0)] and N_G is the
 * sum of |C_n|^2 numerators over that same window.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "susywell/numerics.hpp"
#include "susywell/susy1d.hpp"
#include "susywell/well1d.hpp"

namespace susywell {

struct GcsParams {
  double n0 = 0.0;
  double sigma0 = 1.0;
  double phi0 = 0.0;

  void validate() const {
    if (!(n0 >= 0.0)) throw std::invalid_argument("GcsParams: n0 must be >= 0");
    if (!(sigma0 > 0.0)) throw std::invalid_argument("GcsParams: sigma0 must be > 0");
    if (!std::isfinite(phi0)) throw std::invalid_argument("GcsParams: phi0 must be finite");
  }
};

/// Eigenbasis a coherent state is expanded in: the original well or a SUSY partner.
class Basis {
 public:
  static Basis original() { return Basis(); }
  static Basis partner(const SusyParams& p) { return Basis(p); }

  bool is_partner() const noexcept { return susy_.has_value(); }
  const SusyParams& susy() const { return susy_.value(); }

  double mode_at(long n, double x) const {
    return susy_ ? susy1d::partner_mode_at(n, x, *susy_) : well1d::psi_at(n, x);
  }

 private:
  Basis() = default;
  explicit Basis(const SusyParams& p) : susy_(p) {}
  std::optional<SusyParams> susy_;
};

/// Inclusive range of quantum numbers kept in a truncated series.
struct Window {
  long lo = 1;
  long hi = 0;
  long size() const noexcept { return hi - lo + 1; }
};

inline Window default_window(const GcsParams& p) {
  return {std::max(1L, static_cast<long>(std::ceil(p.n0 - 10.0 * p.sigma0))),
          static_cast<long>(std::ceil(p.n0 + 10.0 * p.sigma0))};
}

struct GcsState {
  GcsParams params;
  Basis basis = Basis::original();
  Window window;
  std::vector<complex> coefficients;  ///< C_n for n = window.lo..window.hi
  double normalization = 0.0;         ///< N_G over the window

  complex coefficient(long n) const {
    if (n < window.lo || n > window.hi) return {0.0, 0.0};
    return coefficients[static_cast<std::size_t>(n - window.lo)];
  }
};

inline GcsState build_gcs(const GcsParams& params, const Basis& basis,
                          std::optional<Window> window_override = std::nullopt) {
  params.validate();
  const Window w = window_override.value_or(default_window(params));
  if (w.hi < w.lo || w.lo < 1) {
    throw std::invalid_argument("build_gcs: empty window [" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]");
  }
  // |C_n|^2 = exp(-(n-n0)^2 / (2 sigma0^2)) / N_G.
  const auto g = stable_gaussian_weights(params.n0, params.sigma0, w.lo, w.hi);
  GcsState s{params, basis, w, {}, g.normalization()};
  s.coefficients.reserve(static_cast<std::size_t>(w.size()));
  for (long n = w.lo; n <= w.hi; ++n) {
    const double mag = std::sqrt(g.weight(n) / g.sum);
    s.coefficients.push_back(std::polar(mag, -static_cast<double>(n) * params.phi0));
  }
  return s;
}

/// Basis functions of a window sampled on a grid, stored mode-major.
class ModeMatrix {
 public:
  ModeMatrix(const Basis& basis, const Window& window, const Grid& grid)
      : window_(window), grid_(grid), data_(static_cast<std::size_t>(window.size()) * grid.size()) {
    for (long n = window.lo; n <= window.hi; ++n) {
      double* row = data_.data() + static_cast<std::size_t>(n - window.lo) * grid.size();
      for (std::size_t j = 0; j < grid.size(); ++j) row[j] = basis.mode_at(n, grid[j]);
    }
  }

  const Grid& grid() const noexcept { return grid_; }
  const Window& window() const noexcept { return window_; }
  std::span<const double> mode(long n) const {
    return {data_.data() + static_cast<std::size_t>(n - window_.lo) * grid_.size(), grid_.size()};
  }

  /// sum_n amplitudes[n - lo] * phi_n(x_j)
  SampledWave combine(std::span<const complex> amplitudes) const {
    SampledWave out(grid_);
    for (long n = window_.lo; n <= window_.hi; ++n) {
      const complex a = amplitudes[static_cast<std::size_t>(n - window_.lo)];
      const auto row = mode(n);
      for (std::size_t j = 0; j < grid_.size(); ++j) out[j] += a * row[j];
    }
    return out;
  }

 private:
  Window window_;
  Grid grid_;
  std::vector<double> data_;
};

/// e^{-i n^2 t} evolution phases for the modes of `w`.
inline std::vector<complex> evolved_coefficients(const GcsState& s, double t) {
  std::vector<complex> a(s.coefficients.size());
  for (long n = s.window.lo; n <= s.window.hi; ++n) {
    const std::size_t i = static_cast<std::size_t>(n - s.window.lo);
    a[i] = s.coefficients[i] * std::polar(1.0, -static_cast<double>(n) * static_cast<double>(n) * t);
  }
  return a;
}

/// Reusable evaluator: samples the basis once, then each time costs one weighted sum.
class GcsEvolver {
 public:
  GcsEvolver(GcsState state, const Grid& grid) : state_(std::move(state)), modes_(state_.basis, state_.window, grid) {}

  SampledWave at(double t) const { return modes_.combine(evolved_coefficients(state_, t)); }
  const GcsState& state() const noexcept { return state_; }
  const Grid& grid() const noexcept { return modes_.grid(); }

 private:
  GcsState state_;
  ModeMatrix modes_;
};

inline SampledWave evaluate(const GcsState& state, const Grid& grid, double t) {
  return GcsEvolver(state, grid).at(t);
}

// ---------------------------------------------------------------------------
// Observables
// ---------------------------------------------------------------------------

struct Observables {
  double norm = 0.0;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double product = 0.0;         ///< Delta x * Delta p
  double p_imag_residue = 0.0;  ///< Im <p>, zero up to discretization error
};

/**
 * Position and momentum moments of a sampled state.
 *
 * <p^2> is taken as <Psi'|Psi'>, so the momentum variance is never negative
 * by construction. Throws std::domain_error if the norm is off by > 1e-4.
 */
inline Observables observables(const SampledWave& psi) {
  const Grid& g = psi.grid;
  const std::size_t n = psi.size();
  const auto dpsi = differentiate(psi, 1);
  std::vector<double> dens(n), xd(n), x2d(n), dp2(n);
  std::vector<complex> pd(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = g[j];
    dens[j] = std::norm(psi[j]);
    xd[j] = x * dens[j];
    x2d[j] = x * x * dens[j];
    pd[j] = std::conj(psi[j]) * complex(0.0, -1.0) * dpsi[j];
    dp2[j] = std::norm(dpsi[j]);
  }
  const double h = g.spacing();
  Observables o;
  o.norm = integrate<double>(std::span<const double>(dens), h);
  if (std::abs(o.norm - 1.0) > 1e-4) {
    throw std::domain_error("observables: state is not normalized (norm = " + std::to_string(o.norm) + ")");
  }
  o.mean_x = integrate<double>(std::span<const double>(xd), h);
  const complex mp = integrate<complex>(std::span<const complex>(pd), h);
  o.mean_p = mp.real();
  o.p_imag_residue = mp.imag();
  o.var_x = std::max(0.0, integrate<double>(std::span<const double>(x2d), h) - o.mean_x * o.mean_x);
  o.var_p = std::max(0.0, integrate<double>(std::span<const double>(dp2), h) - o.mean_p * o.mean_p);
  o.product = std::sqrt(o.var_x * o.var_p);
  return o;
}

inline Observables observables(const GcsState& state, const Grid& grid, double t) {
  return observables(evaluate(state, grid, t));
}

// ---------------------------------------------------------------------------
// Closed-form gaussian packet
// ---------------------------------------------------------------------------

struct ClosedFormParams {
  double X = 0.0;    ///< packet center phi0 + 2 n0 t (unreflected)
  double P = 0.0;    ///< momentum n0
  double s = 0.0;    ///< width
  double tau = 0.0;  ///< spreading time 1 / (4 sigma0^2)
};

inline ClosedFormParams closed_form_params(const GcsParams& p, double t) {
  ClosedFormParams c;
  c.tau = 1.0 / (4.0 * p.sigma0 * p.sigma0);
  c.P = p.n0;
  c.X = p.phi0 + 2.0 * p.n0 * t;
  const double sigma2 = c.tau / (4.0 * (c.tau * c.tau + t * t));
  c.s = 1.0 / (2.0 * std::sqrt(sigma2));
  return c;
}

/// Regime conditions under which the closed form is expected to hold ("much greater" = factor 5).
struct ValidityFlags {
  bool n0_above_sigma0 = false;  ///< n0 >= 5 sigma0
  bool sigma0_large = false;     ///< sigma0 >= 5
  bool away_from_left = false;   ///< X >= 5 s
  bool away_from_right = false;  ///< pi - X >= 5 s
  bool short_time = false;       ///< t <= tau / 5

  bool all() const noexcept {
    return n0_above_sigma0 && sigma0_large && away_from_left && away_from_right && short_time;
  }
};

inline ValidityFlags validity_flags(const GcsParams& p, double t) {
  const auto c = closed_form_params(p, t);
  ValidityFlags f;
  f.n0_above_sigma0 = p.n0 >= 5.0 * p.sigma0;
  f.sigma0_large = p.sigma0 >= 5.0;
  f.away_from_left = c.X >= 5.0 * c.s;
  f.away_from_right = pi - c.X >= 5.0 * c.s;
  f.short_time = t <= c.tau / 5.0;
  return f;
}

struct ClosedForm {
  SampledWave wave;
  ClosedFormParams params;
  ValidityFlags flags;
};

/// (2 pi s^2)^{-1/4} exp(-(x - X)^2 / (4 s^2) + i P x), global phase fixed to zero.
inline ClosedForm closed_form(const GcsParams& p, const Grid& grid, double t) {
  p.validate();
  const auto c = closed_form_params(p, t);
  const double amp = std::pow(2.0 * pi * c.s * c.s, -0.25);
  auto wave = sample(grid, [&](double x) {
    const double d = x - c.X;
    return amp * std::exp(complex(-d * d / (4.0 * c.s * c.s), c.P * x));
  });
  return {std::move(wave), c, validity_flags(p, t)};
}

// ---------------------------------------------------------------------------
// Classical motion
// ---------------------------------------------------------------------------

/// Free motion phi0 + 2 n0 t folded into [0, pi] by elastic reflections.
inline double classical_position(const GcsParams& p, double t) {
  double y = std::fmod(p.phi0 + 2.0 * p.n0 * t, 2.0 * pi);
  if (y < 0.0) y += 2.0 * pi;
  return y > pi ? 2.0 * pi - y : y;
}

/// (t, X_cl) at steps + 1 equally spaced times in [0, t_max].
inline std::vector<std::pair<double, double>> classical_trace(const GcsParams& p, double t_max, int steps) {
  if (!(t_max > 0.0)) throw std::invalid_argument("classical_trace: t_max must be > 0");
  if (steps < 1) throw std::invalid_argument("classical_trace: steps must be >= 1");
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(steps);
    out.emplace_back(t, classical_position(p, t));
  }
  return out;
}

/// Time of the first wall hit for a packet starting inside the well.
inline double first_wall_time(const GcsParams& p) {
  if (p.n0 <= 0.0) return std::numeric_limits<double>::infinity();
  const double x0 = classical_position(p, 0.0);
  return (pi - x0) / (2.0 * p.n0);
}

// ---------------------------------------------------------------------------
// Density comparisons
// ---------------------------------------------------------------------------

inline std::vector<double> density(const SampledWave& psi) {
  std::vector<double> d(psi.size());
  for (std::size_t j = 0; j < psi.size(); ++j) d[j] = std::norm(psi[j]);
  return d;
}

/// max_j | |a_j|^2 - |b_j|^2 |
inline double density_linf_deviation(const SampledWave& a, const SampledWave& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(std::norm(a[j]) - std::norm(b[j])));
  return worst;
}

/**
 * Height of the tallest local density maximum lying more than `exclusion`
 * away from `center`, relative to the global maximum. Zero if none exists.
 */
inline double secondary_peak_ratio(const SampledWave& psi, double center, double exclusion) {
  const auto d = density(psi);
  const double top = *std::max_element(d.begin(), d.end());
  double best = 0.0;
  for (std::size_t j = 1; j + 1 < d.size(); ++j) {
    if (std::abs(psi.grid[j] - center) <= exclusion) continue;
    if (d[j] > d[j - 1] && d[j] >= d[j + 1]) best = std::max(best, d[j]);
  }
  return top > 0.0 ? best / top : 0.0;
}

}  // namespace susywell
