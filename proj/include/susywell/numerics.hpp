#pragma once

/**
 * @file numerics.hpp
 * @brief Uniform grids on [0, pi], composite Simpson quadrature, high-order
 *        finite differences and overflow-safe gaussian weight sequences.
 *
 * Every routine here is pure: results depend only on the arguments and the
 * summation order is fixed, so repeated calls are bit-identical.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace susywell {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Default number of nodes on [0, pi]; resolves n ~ 120 with > 80 points per wavelength.
inline constexpr std::size_t kDefaultPoints = 20001;

/// Width of the stencil used by differentiate(); also the minimal grid size.
inline constexpr std::size_t kStencilWidth = 9;

/// Points at each end of the grid that use one-sided stencils.
inline constexpr std::size_t kBoundaryBand = kStencilWidth / 2;

/**
 * Uniform nodes x_j = j * h on [0, pi], h = pi / (N - 1).
 *
 * The last node is pinned to pi exactly.
 */
class Grid {
 public:
  explicit Grid(std::size_t points = kDefaultPoints) : points_(points) {
    if (points_ < kStencilWidth) {
      throw std::invalid_argument("Grid: need at least " + std::to_string(kStencilWidth) +
                                  " points, got " + std::to_string(points_));
    }
    spacing_ = pi / static_cast<double>(points_ - 1);
  }

  std::size_t size() const noexcept { return points_; }
  double spacing() const noexcept { return spacing_; }
  static constexpr double lower() noexcept { return 0.0; }
  static constexpr double upper() noexcept { return pi; }

  double operator[](std::size_t j) const noexcept {
    return j + 1 == points_ ? pi : static_cast<double>(j) * spacing_;
  }

  std::vector<double> nodes() const {
    std::vector<double> xs(points_);
    for (std::size_t j = 0; j < points_; ++j) xs[j] = (*this)[j];
    return xs;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t points_;
  double spacing_;
};

/// Complex amplitudes sampled on a Grid.
struct SampledWave {
  Grid grid;
  std::vector<complex> values;

  SampledWave() : grid(kStencilWidth), values(kStencilWidth) {}
  explicit SampledWave(const Grid& g) : grid(g), values(g.size()) {}
  SampledWave(const Grid& g, std::vector<complex> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size()) {
      throw std::invalid_argument("SampledWave: value count does not match grid");
    }
  }

  std::size_t size() const noexcept { return values.size(); }
  complex& operator[](std::size_t j) noexcept { return values[j]; }
  const complex& operator[](std::size_t j) const noexcept { return values[j]; }

  /// Largest |value|.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

/// Samples a real or complex callable on every node of `grid`.
template <class F>
SampledWave sample(const Grid& grid, F&& f) {
  SampledWave w(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) w[j] = complex(f(grid[j]));
  return w;
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

/**
 * Composite Simpson rule over [0, pi] for uniformly spaced samples.
 *
 * Throws std::invalid_argument when the number of samples is even, since the
 * rule needs an even number of intervals.
 */
template <class T>
T integrate(std::span<const T> samples, double spacing) {
  const std::size_t n = samples.size();
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("integrate: composite Simpson needs an odd sample count >= 3, got " +
                                std::to_string(n));
  }
  T odd{}, even{};
  for (std::size_t j = 1; j + 1 < n; j += 2) odd += samples[j];
  for (std::size_t j = 2; j + 1 < n; j += 2) even += samples[j];
  return (samples.front() + samples.back() + 4.0 * odd + 2.0 * even) * (spacing / 3.0);
}

inline double integrate(const Grid& grid, std::span<const double> samples) {
  if (samples.size() != grid.size()) throw std::invalid_argument("integrate: size mismatch");
  return integrate<double>(samples, grid.spacing());
}

inline complex integrate(const SampledWave& f) {
  return integrate<complex>(std::span<const complex>(f.values), f.grid.spacing());
}

/// <a|b> = integral of conj(a) * b.
inline complex inner(const SampledWave& a, const SampledWave& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("inner: grids differ");
  std::vector<complex> prod(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) prod[j] = std::conj(a[j]) * b[j];
  return integrate<complex>(std::span<const complex>(prod), a.grid.spacing());
}

/// Real inner product for real-valued sample vectors on the same grid.
inline double inner_real(std::span<const double> a, std::span<const double> b, double spacing) {
  if (a.size() != b.size()) throw std::invalid_argument("inner_real: size mismatch");
  const std::size_t n = a.size();
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("inner_real: composite Simpson needs an odd sample count");
  }
  double odd = 0.0, even = 0.0;
  for (std::size_t j = 1; j + 1 < n; j += 2) odd += a[j] * b[j];
  for (std::size_t j = 2; j + 1 < n; j += 2) even += a[j] * b[j];
  return (a.front() * b.front() + a.back() * b.back() + 4.0 * odd + 2.0 * even) * (spacing / 3.0);
}

/// Integral of |f|^2.
inline double norm_squared(const SampledWave& f) {
  std::vector<double> dens(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) dens[j] = std::norm(f[j]);
  return integrate<double>(std::span<const double>(dens), f.grid.spacing());
}

/// ||a - b|| in L2([0, pi]).
inline double l2_distance(const SampledWave& a, const SampledWave& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("l2_distance: grids differ");
  std::vector<double> dens(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) dens[j] = std::norm(a[j] - b[j]);
  return std::sqrt(std::max(0.0, integrate<double>(std::span<const double>(dens), a.grid.spacing())));
}

/// min over theta of ||a - e^{i theta} b||.
inline double phase_insensitive_distance(const SampledWave& a, const SampledWave& b) {
  const double d2 = norm_squared(a) + norm_squared(b) - 2.0 * std::abs(inner(a, b));
  return std::sqrt(std::max(0.0, d2));
}

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

namespace detail {

/// Fornberg's recursion: weights of derivative `order` at 0 for nodes `offsets` (unit spacing).
template <std::size_t W>
std::array<double, W> fornberg_weights(const std::array<double, W>& offsets, int order) {
  std::array<std::array<double, W>, 3> c{};  // c[d][j], d <= 2
  double c1 = 1.0;
  double c4 = offsets[0];
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < W; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = offsets[i] - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c[order];
}

/// Weight tables for the 9-point stencil; row r is for a node r places from the stencil start.
struct StencilTable {
  std::array<std::array<double, kStencilWidth>, kStencilWidth> rows{};

  explicit StencilTable(int order) {
    for (std::size_t r = 0; r < kStencilWidth; ++r) {
      std::array<double, kStencilWidth> offsets{};
      for (std::size_t j = 0; j < kStencilWidth; ++j) {
        offsets[j] = static_cast<double>(j) - static_cast<double>(r);
      }
      rows[r] = fornberg_weights(offsets, order);
    }
  }
};

inline const StencilTable& stencil(int order) {
  static const StencilTable first(1);
  static const StencilTable second(2);
  return order == 1 ? first : second;
}

}  // namespace detail

/**
 * Finite-difference derivative of order 1 or 2.
 *
 * Interior nodes use the centered 9-point stencil (8th order); the first and
 * last four nodes use one-sided 9-point windows. The result shares the grid.
 */
template <class T>
std::vector<T> differentiate(std::span<const T> f, double spacing, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("differentiate: order must be 1 or 2");
  const std::size_t n = f.size();
  if (n < kStencilWidth) throw std::invalid_argument("differentiate: need at least 9 samples");
  const auto& table = detail::stencil(order);
  const double scale = order == 1 ? 1.0 / spacing : 1.0 / (spacing * spacing);
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = i < kBoundaryBand ? 0 : i - kBoundaryBand;
    start = std::min(start, n - kStencilWidth);
    const auto& w = table.rows[i - start];
    T acc{};
    for (std::size_t j = 0; j < kStencilWidth; ++j) acc += w[j] * f[start + j];
    out[i] = acc * scale;
  }
  return out;
}

inline SampledWave differentiate(const SampledWave& f, int order) {
  return SampledWave(f.grid, differentiate<complex>(std::span<const complex>(f.values), f.grid.spacing(), order));
}

inline std::vector<double> differentiate(const Grid& grid, std::span<const double> f, int order) {
  if (f.size() != grid.size()) throw std::invalid_argument("differentiate: size mismatch");
  return differentiate<double>(f, grid.spacing(), order);
}

// ---------------------------------------------------------------------------
// Gaussian weights
// ---------------------------------------------------------------------------

/**
 * Weights w_n = exp(-(n - center)^2 / (2 width^2)) for n = lo..hi.
 *
 * The largest exponent in the window is subtracted before exponentiation, so
 * the stored weights lie in [0, 1] with maximum exactly 1. The true weights
 * are `weights[i] * exp(log_scale)`; `log_scale` is 0 whenever an integer
 * center lies inside the window.
 */
struct GaussianWeights {
  long lo = 1;
  long hi = 0;
  std::vector<double> weights;
  double sum = 0.0;        ///< sum of the stored (scaled) weights
  double log_scale = 0.0;  ///< log of the factor removed from every weight

  double weight(long n) const { return weights.at(static_cast<std::size_t>(n - lo)); }
  /// Unscaled normalization sum.
  double normalization() const { return sum * std::exp(log_scale); }
};

inline GaussianWeights stable_gaussian_weights(double center, double width, long lo, long hi) {
  if (!(width > 0.0)) throw std::invalid_argument("stable_gaussian_weights: width must be positive");
  if (lo < 1) throw std::invalid_argument("stable_gaussian_weights: lo must be >= 1");
  if (hi < lo) throw std::invalid_argument("stable_gaussian_weights: empty window (hi < lo)");
  const double inv = 1.0 / (2.0 * width * width);
  const auto exponent = [&](long n) {
    const double d = static_cast<double>(n) - center;
    return -d * d * inv;
  };
  // Nearest in-window integer to the center carries the maximal exponent.
  const long nearest = std::clamp(static_cast<long>(std::llround(center)), lo, hi);
  const double top = exponent(nearest);

  GaussianWeights g;
  g.lo = lo;
  g.hi = hi;
  g.log_scale = top;
  g.weights.resize(static_cast<std::size_t>(hi - lo + 1));
  for (long n = lo; n <= hi; ++n) {
    const double w = std::exp(exponent(n) - top);
    g.weights[static_cast<std::size_t>(n - lo)] = w;
    g.sum += w;
  }
  return g;
}

}  // namespace susywell
