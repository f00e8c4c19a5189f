#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "susywell/numerics.hpp"

using namespace susywell;

namespace {

std::vector<double> samples(const Grid& g, double (*f)(double)) {
  std::vector<double> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = f(g[j]);
  return v;
}

}  // namespace

TEST(Grid, NodesSpanZeroToPiExactly) {
  const Grid g(20001);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_EQ(g[g.size() - 1], pi);
  EXPECT_DOUBLE_EQ(g.spacing(), pi / 20000.0);
  EXPECT_DOUBLE_EQ(g[10000], pi / 2.0);
}

TEST(Grid, RejectsFewerThanNinePoints) {
  EXPECT_THROW(Grid(8), std::invalid_argument);
  EXPECT_NO_THROW(Grid(9));
}

TEST(SampledWave, SizeMustMatchGrid) {
  EXPECT_THROW(SampledWave(Grid(11), std::vector<complex>(10)), std::invalid_argument);
}

TEST(Integrate, NormalizedGroundMode) {
  const Grid g;
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = 2.0 / pi * std::sin(g[j]) * std::sin(g[j]);
  EXPECT_NEAR(integrate(g, f), 1.0, 1e-10);
}

TEST(Integrate, ConstantGivesPi) {
  const Grid g;
  const std::vector<double> one(g.size(), 1.0);
  EXPECT_NEAR(integrate(g, one), pi, 1e-12);
}

TEST(Integrate, DistinctModesAreOrthogonal) {
  const Grid g;
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = 2.0 / pi * std::sin(3.0 * g[j]) * std::sin(5.0 * g[j]);
  EXPECT_NEAR(integrate(g, f), 0.0, 1e-10);
}

TEST(Integrate, EvenSampleCountIsAnError) {
  const Grid g(20000);
  const std::vector<double> one(g.size(), 1.0);
  EXPECT_THROW(integrate(g, one), std::invalid_argument);
}

TEST(Integrate, ExactForCubicsAndFourthOrderOnQuartics) {
  // Simpson integrates cubics exactly; the x^4 error must shrink 16x per halving.
  const auto err = [](std::size_t n) {
    const Grid g(n);
    std::vector<double> f(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) f[j] = std::pow(g[j], 4);
    return std::abs(integrate(g, f) - std::pow(pi, 5) / 5.0);
  };
  const Grid g(101);
  std::vector<double> cubic(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) cubic[j] = std::pow(g[j], 3) - 2.0 * g[j];
  EXPECT_NEAR(integrate(g, cubic), std::pow(pi, 4) / 4.0 - pi * pi, 1e-11);
  EXPECT_NEAR(err(41) / err(81), 16.0, 0.2);
}

TEST(Differentiate, SecondDerivativeOfSine) {
  // 1e-8 over every node holds at N = 2001. At N = 20001 the sample rounding
  // (~1e-16) amplified by 1/h^2 ~ 4e7 leaves a ~1e-7 floor.
  {
    const Grid g(2001);
    const auto d2 = differentiate(g, samples(g, [](double x) { return std::sin(x); }), 2);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) worst = std::max(worst, std::abs(d2[j] + std::sin(g[j])));
    EXPECT_LT(worst, 1e-8);
  }
  {
    const Grid g;
    const auto d2 = differentiate(g, samples(g, [](double x) { return std::sin(x); }), 2);
    double worst = 0.0;
    for (std::size_t j = kBoundaryBand; j + kBoundaryBand < g.size(); ++j) {
      worst = std::max(worst, std::abs(d2[j] + std::sin(g[j])));
    }
    EXPECT_LT(worst, 1e-7);
  }
}

TEST(Differentiate, FirstDerivativeOfPlaneWave) {
  const Grid g;
  const auto f = sample(g, [](double x) { return std::exp(complex(0.0, 5.0 * x)); });
  const auto d1 = differentiate(f, 1);
  for (std::size_t j = 0; j < g.size(); ++j) {
    ASSERT_LT(std::abs(d1[j] - complex(0.0, 5.0) * f[j]), 1e-7) << "at node " << j;
  }
}

TEST(Differentiate, ConstantHasZeroDerivative) {
  const Grid g(101);
  const std::vector<double> c(g.size(), 3.25);
  for (double v : differentiate(g, c, 1)) EXPECT_NEAR(v, 0.0, 1e-10);
  for (double v : differentiate(g, c, 2)) EXPECT_NEAR(v, 0.0, 1e-7);
}

TEST(Differentiate, StencilsAreExactOnLowDegreePolynomials) {
  // 9-point stencils reproduce derivatives of degree <= 8 polynomials up to rounding.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const Grid g(41);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<double, 8> a{};
    for (auto& v : a) v = coef(rng);
    std::vector<double> f(g.size()), exact1(g.size()), exact2(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g[j];
      for (std::size_t p = 0; p < a.size(); ++p) {
        f[j] += a[p] * std::pow(x, static_cast<double>(p));
        if (p >= 1) exact1[j] += a[p] * static_cast<double>(p) * std::pow(x, static_cast<double>(p - 1));
        if (p >= 2) exact2[j] += a[p] * static_cast<double>(p * (p - 1)) * std::pow(x, static_cast<double>(p - 2));
      }
    }
    const auto d1 = differentiate(g, f, 1);
    const auto d2 = differentiate(g, f, 2);
    for (std::size_t j = 0; j < g.size(); ++j) {
      EXPECT_NEAR(d1[j], exact1[j], 1e-8 * (1.0 + std::abs(exact1[j])));
      EXPECT_NEAR(d2[j], exact2[j], 1e-6 * (1.0 + std::abs(exact2[j])));
    }
  }
}

TEST(Differentiate, RejectsBadOrder) {
  const Grid g(11);
  const std::vector<double> c(g.size(), 1.0);
  EXPECT_THROW(differentiate(g, c, 3), std::invalid_argument);
}

TEST(Differentiate, ConvergenceOrderUnderRefinement) {
  for (long n : {1L, 4L, 17L, 60L, 120L}) {
    const auto residual = [n](std::size_t pts) {
      const Grid g(pts);
      std::vector<double> f(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) f[j] = std::sin(static_cast<double>(n) * g[j]);
      const auto d2 = differentiate(g, f, 2);
      double worst = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) worst = std::max(worst, std::abs(d2[j] + n * n * f[j]));
      return worst;
    };
    const std::size_t base = std::max<std::size_t>(33, static_cast<std::size_t>(16 * n + 1));
    EXPECT_GE(residual(base) / residual(2 * base - 1), 16.0) << "n = " << n;
  }
}

TEST(GaussianWeights, SumMatchesDirectSummation) {
  double direct = 0.0;
  for (long n = 1; n <= 200; ++n) direct += std::exp(-(n - 100.0) * (n - 100.0) / 200.0);
  const auto w = stable_gaussian_weights(100.0, 10.0, 1, 200);
  EXPECT_NEAR(w.normalization(), direct, 1e-12);
  EXPECT_NEAR(w.normalization(), 25.0663, 1e-3);
  EXPECT_EQ(w.log_scale, 0.0);
}

TEST(GaussianWeights, NarrowWidthSelectsOneLevel) {
  const auto w = stable_gaussian_weights(1.0, 0.1, 1, 20);
  EXPECT_EQ(w.weight(1), 1.0);
  for (long n = 2; n <= 20; ++n) EXPECT_LT(w.weight(n), 1e-20);
}

TEST(GaussianWeights, SymmetricAboutIntegerCenter) {
  const auto w = stable_gaussian_weights(5.0, 2.0, 1, 9);
  for (long j = 1; j <= 4; ++j) EXPECT_EQ(w.weight(5 - j), w.weight(5 + j));
}

TEST(GaussianWeights, FarCenterStaysRepresentable) {
  // All raw weights underflow here; the shifted ones keep max = 1.
  const auto w = stable_gaussian_weights(5000.0, 100.0, 1, 10);
  EXPECT_EQ(std::exp(-4990.0 * 4990.0 / 20000.0), 0.0);
  EXPECT_EQ(w.weight(10), 1.0);
  // Exponents near -1245 are subtracted, so rounding is about 1245 * eps.
  EXPECT_NEAR(w.weight(9), std::exp(-9981.0 / 20000.0), 1e-12);
  EXPECT_GT(w.sum, 1.5);
  EXPECT_NEAR(w.log_scale, -4990.0 * 4990.0 / 20000.0, 1e-9);
}

TEST(GaussianWeights, RangeProperty) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> center(0.0, 300.0), width(0.05, 40.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = center(rng), s = width(rng);
    const auto w = stable_gaussian_weights(c, s, 1, 350);
    double top = 0.0;
    for (double v : w.weights) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
      top = std::max(top, v);
    }
    EXPECT_EQ(top, 1.0);
  }
}

TEST(GaussianWeights, Errors) {
  EXPECT_THROW(stable_gaussian_weights(1.0, 1.0, 5, 4), std::invalid_argument);
  EXPECT_THROW(stable_gaussian_weights(1.0, 0.0, 1, 4), std::invalid_argument);
  EXPECT_THROW(stable_gaussian_weights(1.0, 1.0, 0, 4), std::invalid_argument);
}
