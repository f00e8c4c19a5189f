#pragma once

/**
 * @file susy1d.hpp
 * @brief Confluent second-order SUSY partners of the infinite well.
 *
 * For a level k (factorization energy eps = k^2) and a shift omega outside
 * [0, 1] the partner Hamiltonian is H~ = -d^2/dx^2 + V~(x; k, omega) with
 *
 *   eta(x)  = 4k sin^2(kx) / D(x),      D(x) = sin(2kx) + 2k(pi*omega - x),
 *   V~(x)   = 2 eta'(x),
 *
 * and shares the spectrum n^2, n >= 1, of the original well. Eigenstates for
 * n != k come from the closed form of (eps - E_n)^{-1} Q psi_n; the level k is
 * carried by the extra state annihilated by Q^dagger.
 *
 * Useful identity: D'(x) = -4k sin^2(kx), hence
 *   eta' = (4k^2 sin(2kx) D + 16 k^2 sin^4(kx)) / D^2.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "susywell/numerics.hpp"
#include "susywell/well1d.hpp"

namespace susywell {

/// Denominator D vanished (only reachable through an invalid omega).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters (k, omega) of a nonsingular confluent SUSY partner.
class SusyParams {
 public:
  SusyParams(long k, double omega) : k_(k), omega_(omega) {
    if (k_ < 1) throw std::invalid_argument("SusyParams: k must be a positive integer, got " + std::to_string(k_));
    if (!(omega_ < 0.0 || omega_ > 1.0)) {
      throw std::invalid_argument("SusyParams: omega must lie in (-inf, 0) U (1, inf), got " +
                                  std::to_string(omega_));
    }
  }

  long k() const noexcept { return k_; }
  double omega() const noexcept { return omega_; }
  /// Factorization energy eps = k^2.
  std::int64_t epsilon() const noexcept { return static_cast<std::int64_t>(k_) * k_; }

  /// Image under the Z2 action omega -> 1 - omega.
  SusyParams mirrored() const { return SusyParams(k_, 1.0 - omega_); }

  friend bool operator==(const SusyParams&, const SusyParams&) = default;

 private:
  long k_;
  double omega_;
};

struct SusyMode {
  long n;
  std::int64_t energy;
  bool is_missing_state;
};

namespace susy1d {

inline SusyMode mode(long n, const SusyParams& p) {
  return {n, well1d::energy(n), n == p.k()};
}

inline double denominator(double x, const SusyParams& p) {
  const double k = static_cast<double>(p.k());
  const double d = std::sin(2.0 * k * x) + 2.0 * k * (pi * p.omega() - x);
  if (std::abs(d) < 1e-14) throw SingularityError("susy1d: vanishing denominator at x = " + std::to_string(x));
  return d;
}

inline double eval_eta(double x, const SusyParams& p) {
  const double k = static_cast<double>(p.k());
  const double s = std::sin(k * x);
  return 4.0 * k * s * s / denominator(x, p);
}

/// Analytic eta' by the quotient rule.
inline double eval_eta_prime(double x, const SusyParams& p) {
  const double k = static_cast<double>(p.k());
  const double s = std::sin(k * x);
  const double d = denominator(x, p);
  return (4.0 * k * k * std::sin(2.0 * k * x) * d + 16.0 * k * k * s * s * s * s) / (d * d);
}

inline double eval_potential(double x, const SusyParams& p) {
  const double k = static_cast<double>(p.k());
  const double s = std::sin(k * x);
  const double c = std::cos(k * x);
  const double d = denominator(x, p);
  return 32.0 * k * k * s * (s + k * (pi * p.omega() - x) * c) / (d * d);
}

inline std::vector<double> sample_eta(const Grid& grid, const SusyParams& p) {
  std::vector<double> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) v[j] = eval_eta(grid[j], p);
  return v;
}

inline std::vector<double> sample_potential(const Grid& grid, const SusyParams& p) {
  std::vector<double> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) v[j] = eval_potential(grid[j], p);
  return v;
}

/// Closed-form partner eigenstate for n != k at a single point.
inline double psi_tilde_at(long n, double x, const SusyParams& p) {
  const double k = static_cast<double>(p.k());
  const double nn = static_cast<double>(n);
  const double s = std::sin(k * x);
  const double d = denominator(x, p);
  const double n2 = nn * nn, k2 = k * k;
  const double num = std::sin(nn * x) * (std::sin(2.0 * k * x) * (n2 + k2) + 2.0 * k * (pi * p.omega() - x) * (n2 - k2)) -
                     4.0 * nn * k * std::cos(nn * x) * s * s;
  return well1d::kAmplitude * num / ((n2 - k2) * d);
}

/// The extra partner state at energy k^2.
inline double missing_state_at(double x, const SusyParams& p) {
  const double k = static_cast<double>(p.k());
  const double w = p.omega();
  return well1d::kAmplitude * std::sin(k * x) * 2.0 * pi * k * std::sqrt(w * (w - 1.0)) / denominator(x, p);
}

inline SampledWave eval_psi_tilde(long n, const Grid& grid, const SusyParams& p) {
  well1d::require_level(n);
  if (n == p.k()) {
    throw std::invalid_argument("eval_psi_tilde: n equals k; use eval_missing_state for that level");
  }
  return sample(grid, [&](double x) { return psi_tilde_at(n, x, p); });
}

inline SampledWave eval_missing_state(const Grid& grid, const SusyParams& p) {
  return sample(grid, [&](double x) { return missing_state_at(x, p); });
}

/// Partner eigenstate for any n >= 1: the closed form, or the extra state when n == k.
inline SampledWave eval_partner_mode(long n, const Grid& grid, const SusyParams& p) {
  return n == p.k() ? eval_missing_state(grid, p) : eval_psi_tilde(n, grid, p);
}

inline double partner_mode_at(long n, double x, const SusyParams& p) {
  return n == p.k() ? missing_state_at(x, p) : psi_tilde_at(n, x, p);
}

/**
 * Applies Q (or Q^dagger when `adjoint`) to sampled data:
 *   Q f        = f'' + eta f' + (eps + (eta^2 - eta')/2) f
 *   Q^dagger f = f'' - eta f' + (eps + (eta^2 - 3 eta')/2) f
 * Derivatives of f are finite differences; eta and eta' are analytic.
 */
inline SampledWave apply_supercharge(const SampledWave& f, const SusyParams& p, bool adjoint) {
  const auto d1 = differentiate(f, 1);
  const auto d2 = differentiate(f, 2);
  const double eps = static_cast<double>(p.epsilon());
  SampledWave out(f.grid);
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = f.grid[j];
    const double eta = eval_eta(x, p);
    const double etap = eval_eta_prime(x, p);
    const double sign = adjoint ? -1.0 : 1.0;
    const double c = adjoint ? 3.0 : 1.0;
    out[j] = d2[j] + sign * eta * d1[j] + (eps + 0.5 * (eta * eta - c * etap)) * f[j];
  }
  return out;
}

/**
 * Pointwise residual of 2 eta eta'' - eta'^2 - 4 eta^2 eta' + eta^4 + 4 eps eta^2
 * for arbitrary samples of eta, with finite-difference derivatives. Returns
 * the max over nodes outside the boundary bands.
 */
inline double confluent_residual(const Grid& grid, std::span<const double> eta, double eps) {
  const auto e1 = differentiate(grid, eta, 1);
  const auto e2 = differentiate(grid, eta, 2);
  double worst = 0.0;
  for (std::size_t j = kBoundaryBand; j + kBoundaryBand < grid.size(); ++j) {
    const double e = eta[j];
    const double r = 2.0 * e * e2[j] - e1[j] * e1[j] - 4.0 * e * e * e1[j] + e * e * e * e + 4.0 * eps * e * e;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

inline double eta_ode_residual(const Grid& grid, const SusyParams& p) {
  const auto eta = sample_eta(grid, p);
  return confluent_residual(grid, eta, static_cast<double>(p.epsilon()));
}

/// ||-f'' + V~ f - E f||_inf / (E ||f||_inf) over nodes outside the boundary bands.
inline double schrodinger_residual(const SampledWave& f, double energy, const SusyParams& p) {
  const auto d2 = differentiate(f, 2);
  double worst = 0.0;
  for (std::size_t j = kBoundaryBand; j + kBoundaryBand < f.size(); ++j) {
    const complex r = -d2[j] + (eval_potential(f.grid[j], p) - energy) * f[j];
    worst = std::max(worst, std::abs(r));
  }
  return worst / (energy * f.max_abs());
}

/// Residual contract multiplier: k^2/100 for k > 10, otherwise 1.
inline double residual_scale(const SusyParams& p) {
  const double k = static_cast<double>(p.k());
  return p.k() > 10 ? k * k / 100.0 : 1.0;
}

}  // namespace susy1d
}  // namespace susywell
