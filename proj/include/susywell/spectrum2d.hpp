#pragma once

// Ordered spectrum E = n^2 + m^2 (n, m >= 1) of the square box with every
// degenerate pair listed, plus the running products rho(nu) of shifted
// energies used by the generalized coherent states.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace susywell {

struct LevelMember {
  long n;
  long m;
  friend bool operator==(const LevelMember&, const LevelMember&) = default;
};

struct EnergyLevel {
  std::size_t nu = 0;
  std::int64_t energy = 0;
  std::int64_t shifted = 0;          ///< E_nu - E_0
  std::vector<LevelMember> members;  ///< sorted by increasing angle atan2(n, m)
  std::vector<double> angles;

  std::size_t degeneracy() const noexcept { return members.size(); }
};

struct PolarPoint {
  double rho;
  double theta;
};

class LevelTable {
 public:
  LevelTable() = default;
  explicit LevelTable(std::vector<EnergyLevel> levels) : levels_(std::move(levels)) {
    log_moments_.resize(levels_.size());
    double acc = 0.0;
    for (std::size_t nu = 0; nu < levels_.size(); ++nu) {
      if (nu > 0) acc += std::log(static_cast<double>(levels_[nu].shifted));
      log_moments_[nu] = acc;
    }
  }

  std::size_t size() const noexcept { return levels_.size(); }
  const EnergyLevel& operator[](std::size_t nu) const { return levels_.at(nu); }
  const std::vector<EnergyLevel>& levels() const noexcept { return levels_; }

  /// Level with the given energy, if present.
  const EnergyLevel* find(std::int64_t energy) const {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), energy,
                               [](const EnergyLevel& l, std::int64_t e) { return l.energy < e; });
    return it != levels_.end() && it->energy == energy ? &*it : nullptr;
  }

  double log_moment(std::size_t nu) const { return log_moments_.at(nu); }

 private:
  std::vector<EnergyLevel> levels_;
  std::vector<double> log_moments_;
};

/// rho(nu) = prod_{i=1..nu} (E_i - E_0); rho(0) = 1. Computed in log space throughout.
struct Moment {
  double log_value;
  /// Linear value, absent when it would exceed 1e300.
  std::optional<double> value;
};

inline constexpr double kMomentOverflow = 1e300;

inline Moment moments(const LevelTable& table, std::size_t nu) {
  if (nu >= table.size()) {
    throw std::out_of_range("moments: nu = " + std::to_string(nu) + " beyond table of " +
                            std::to_string(table.size()) + " levels");
  }
  const double lv = table.log_moment(nu);
  Moment m{lv, std::nullopt};
  if (lv < std::log(kMomentOverflow)) {
    double prod = 1.0;
    for (std::size_t i = 1; i <= nu; ++i) prod *= static_cast<double>(table[i].shifted);
    m.value = prod;
  }
  return m;
}

inline std::vector<PolarPoint> polar(const EnergyLevel& level) {
  const double rho = std::sqrt(static_cast<double>(level.energy));
  std::vector<PolarPoint> out;
  out.reserve(level.members.size());
  for (double th : level.angles) out.push_back({rho, th});
  return out;
}

/// Every level with energy <= e_max, by exhaustive scan of n, m in [1, floor(sqrt(e_max))].
inline LevelTable enumerate_levels(std::int64_t e_max) {
  if (e_max < 2) throw std::invalid_argument("enumerate_levels: E_max must be >= 2 (empty spectrum)");
  long top = static_cast<long>(std::sqrt(static_cast<double>(e_max)));
  while (static_cast<std::int64_t>(top + 1) * (top + 1) <= e_max) ++top;
  while (static_cast<std::int64_t>(top) * top > e_max) --top;

  std::map<std::int64_t, std::vector<LevelMember>> groups;
  for (long n = 1; n <= top; ++n) {
    for (long m = 1; m <= top; ++m) {
      const std::int64_t e = static_cast<std::int64_t>(n) * n + static_cast<std::int64_t>(m) * m;
      if (e <= e_max) groups[e].push_back({n, m});
    }
  }

  std::vector<EnergyLevel> levels;
  levels.reserve(groups.size());
  const std::int64_t e0 = groups.begin()->first;
  for (auto& [e, members] : groups) {
    EnergyLevel lvl;
    lvl.nu = levels.size();
    lvl.energy = e;
    lvl.shifted = e - e0;
    // Increasing theta = increasing n with n^2 + m^2 fixed.
    std::sort(members.begin(), members.end(), [](const LevelMember& a, const LevelMember& b) { return a.n < b.n; });
    lvl.members = std::move(members);
    for (const auto& mm : lvl.members) {
      lvl.angles.push_back(std::atan2(static_cast<double>(mm.n), static_cast<double>(mm.m)));
    }
    levels.push_back(std::move(lvl));
  }
  return LevelTable(std::move(levels));
}

/**
 * Smallest table (grown by doubling E_max) that holds at least `count` levels
 * and is complete up to the energy of its last level.
 */
inline LevelTable enumerate_at_least(std::size_t count) {
  std::int64_t e_max = 64;
  for (;;) {
    auto t = enumerate_levels(e_max);
    if (t.size() >= count) return t;
    e_max *= 2;
  }
}

}  // namespace susywell
