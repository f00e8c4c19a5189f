#pragma once

// Infinite square well on [0, pi] in units hbar = 1, M = 1/2:
// psi_n(x) = sqrt(2/pi) sin(n x), E_n = n^2.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "susywell/numerics.hpp"

namespace susywell::well1d {

inline const double kAmplitude = std::sqrt(2.0 / pi);

struct WellMode {
  long n;
  std::int64_t energy;  // exact n^2
};

inline void require_level(long n) {
  if (n < 1) throw std::domain_error("well1d: quantum number must be >= 1, got " + std::to_string(n));
}

inline std::int64_t energy(long n) {
  require_level(n);
  return static_cast<std::int64_t>(n) * n;
}

inline WellMode mode(long n) { return {n, energy(n)}; }

inline double psi_at(long n, double x) { return kAmplitude * std::sin(static_cast<double>(n) * x); }

inline SampledWave eval_psi(long n, const Grid& grid) {
  require_level(n);
  return sample(grid, [n](double x) { return psi_at(n, x); });
}

}  // namespace susywell::well1d
