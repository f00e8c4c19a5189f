#include <gtest/gtest.h>

#include <cmath>

#include "susywell/well1d.hpp"

using namespace susywell;

TEST(Well1d, GroundModeAtCenter) {
  const Grid g;
  const auto psi = well1d::eval_psi(1, g);
  EXPECT_NEAR(psi[10000].real(), std::sqrt(2.0 / pi), 1e-15);
  EXPECT_NEAR(psi[10000].real(), 0.79788, 1e-5);
}

TEST(Well1d, SecondModeHasNodeAtCenter) {
  const auto psi = well1d::eval_psi(2, Grid());
  EXPECT_NEAR(std::abs(psi[10000]), 0.0, 1e-15);
}

TEST(Well1d, NormalizedAndVanishingAtWalls) {
  const auto psi = well1d::eval_psi(3, Grid());
  EXPECT_NEAR(norm_squared(psi), 1.0, 1e-10);
  EXPECT_LT(std::abs(psi[0]), 1e-12);
  EXPECT_LT(std::abs(psi[psi.size() - 1]), 1e-12);
}

TEST(Well1d, Energies) {
  EXPECT_EQ(well1d::energy(1), 1);
  EXPECT_EQ(well1d::energy(7), 49);
  EXPECT_EQ(well1d::energy(100), 10000);
  EXPECT_EQ(well1d::mode(12).energy, 144);
}

TEST(Well1d, RejectsNonPositiveLevels) {
  EXPECT_THROW(well1d::eval_psi(0, Grid(11)), std::domain_error);
  EXPECT_THROW(well1d::eval_psi(-2, Grid(11)), std::domain_error);
  EXPECT_THROW(well1d::energy(0), std::domain_error);
}

TEST(Well1d, Orthonormality) {
  const Grid g;
  std::vector<std::vector<double>> t;
  for (long n = 1; n <= 150; ++n) {
    std::vector<double> row(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) row[j] = well1d::psi_at(n, g[j]);
    t.push_back(std::move(row));
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a; b < t.size(); ++b) {
      worst = std::max(worst, std::abs(inner_real(t[a], t[b], g.spacing()) - (a == b ? 1.0 : 0.0)));
    }
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(Well1d, SchrodingerResidual) {
  const Grid g;
  for (long n = 1; n <= 120; ++n) {
    const auto psi = well1d::eval_psi(n, g);
    const auto d2 = differentiate(psi, 2);
    const double e = static_cast<double>(n * n);
    double worst = 0.0;
    for (std::size_t j = kBoundaryBand; j + kBoundaryBand < g.size(); ++j) worst = std::max(worst, std::abs(-d2[j] - e * psi[j]));
    ASSERT_LT(worst / e, 1e-6) << "n = " << n;
  }
}
