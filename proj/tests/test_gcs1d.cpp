#include <gtest/gtest.h>

#include <cmath>

#include "susywell/gcs1d.hpp"

using namespace susywell;

namespace {

const GcsParams kFigure{100.0, 10.0, pi / 2.0};

double direct_normalization(double n0, double sigma0, long lo, long hi) {
  double s = 0.0;
  for (long n = lo; n <= hi; ++n) s += std::exp(-(n - n0) * (n - n0) / (2.0 * sigma0 * sigma0));
  return s;
}

}  // namespace

TEST(GcsParams, Validation) {
  EXPECT_THROW((GcsParams{100.0, 0.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((GcsParams{100.0, -1.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((GcsParams{-5.0, 1.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW(kFigure.validate());
}

TEST(BuildGcs, DefaultWindow) {
  const auto w = default_window(kFigure);
  EXPECT_EQ(w.lo, 1);
  EXPECT_EQ(w.hi, 200);
  const auto w2 = default_window({30.0, 2.5, 0.0});
  EXPECT_EQ(w2.lo, 5);
  EXPECT_EQ(w2.hi, 55);
}

TEST(BuildGcs, PeakCoefficientMatchesDirectSum) {
  const auto s = build_gcs(kFigure, Basis::original());
  const double ng = direct_normalization(100.0, 10.0, 1, 200);
  EXPECT_NEAR(s.normalization, ng, 1e-10);
  EXPECT_NEAR(s.normalization, 25.0663, 1e-3);
  EXPECT_NEAR(std::norm(s.coefficient(100)), 1.0 / ng, 1e-14);
  EXPECT_NEAR(std::norm(s.coefficient(100)), 0.039894, 1e-6);
}

TEST(BuildGcs, CoefficientsAreUnitNormWithLinearPhase) {
  for (const GcsParams& p : {kFigure, GcsParams{30.0, 5.0, 0.7}, GcsParams{3.0, 2.0, 1.0}}) {
    const auto s = build_gcs(p, Basis::original());
    double total = 0.0;
    for (const auto& c : s.coefficients) total += std::norm(c);
    EXPECT_NEAR(total, 1.0, 1e-13);
    for (long n = s.window.lo; n <= s.window.hi; ++n) {
      const complex c = s.coefficient(n);
      if (std::abs(c) < 1e-100) continue;
      EXPECT_NEAR(std::arg(c * std::polar(1.0, static_cast<double>(n) * p.phi0)), 0.0, 1e-9);
    }
    EXPECT_EQ(s.coefficient(s.window.hi + 1), complex(0.0, 0.0));
  }
}

TEST(BuildGcs, RejectsEmptyWindow) {
  EXPECT_THROW(build_gcs(kFigure, Basis::original(), Window{5, 4}), std::invalid_argument);
  EXPECT_THROW(build_gcs(kFigure, Basis::original(), Window{0, 4}), std::invalid_argument);
}

TEST(BuildGcs, RemoteCenterStillNormalizes) {
  const auto s = build_gcs({4000.0, 1.0, 0.0}, Basis::original(), Window{1, 20});
  double total = 0.0;
  for (const auto& c : s.coefficients) total += std::norm(c);
  EXPECT_NEAR(total, 1.0, 1e-13);
  EXPECT_NEAR(std::norm(s.coefficient(20)), 1.0, 1e-12);
}

TEST(Evolution, NormConserved) {
  const Grid g;
  for (const auto& basis : {Basis::original(), Basis::partner(SusyParams(100, 2.0))}) {
    const GcsEvolver ev(build_gcs(kFigure, basis), g);
    for (int i = 0; i <= 12; ++i) {
      EXPECT_NEAR(norm_squared(ev.at(0.001 * i)), 1.0, 1e-6);
    }
  }
}

TEST(Evolution, ObservablesAtStart) {
  const auto o = observables(build_gcs(kFigure, Basis::original()), Grid(), 0.0);
  EXPECT_NEAR(o.mean_x, pi / 2.0, 1e-6);
  EXPECT_NEAR(o.mean_p, 100.0, 1e-6);
  EXPECT_NEAR(o.product, 0.5, 1e-4);
  EXPECT_LT(std::abs(o.p_imag_residue), 1e-8);
}

TEST(Evolution, TracksClassicalMotionBeforeWall) {
  const Grid g;
  const GcsEvolver ev(build_gcs(kFigure, Basis::original()), g);
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.004 * i / 20.0;
    const auto o = observables(ev.at(t));
    EXPECT_LT(std::abs(o.mean_x - classical_position(kFigure, t)), 0.05) << "t=" << t;
    // Free gaussian spreading: Delta x Delta p = sqrt(1 + (t / tau)^2) / 2.
    const double tau = closed_form_params(kFigure, 0.0).tau;
    EXPECT_NEAR(o.product, 0.5 * std::sqrt(1.0 + (t / tau) * (t / tau)), 0.01 * o.product) << "t=" << t;
  }
}

TEST(Evolution, ObservablesRejectUnnormalizedState) {
  const Grid g(101);
  SampledWave f(g);
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = 2.0 * well1d::psi_at(1, g[j]);
  EXPECT_THROW(observables(f), std::domain_error);
}

TEST(Evolution, PeriodicRevival) {
  // E_n = n^2 are integers, so every coefficient returns after t = 2 pi.
  const auto s = build_gcs({10.0, 2.0, 1.0}, Basis::original());
  const auto c0 = evolved_coefficients(s, 0.0);
  const auto c1 = evolved_coefficients(s, 2.0 * pi);
  for (std::size_t i = 0; i < c0.size(); ++i) EXPECT_LT(std::abs(c0[i] - c1[i]), 1e-12);
}

TEST(ClosedForm, WidthGrowsBySqrtTwoAtTau) {
  const auto c0 = closed_form_params(kFigure, 0.0);
  const auto c1 = closed_form_params(kFigure, c0.tau);
  EXPECT_DOUBLE_EQ(c0.tau, 1.0 / 400.0);
  EXPECT_NEAR(c0.s, 1.0 / (2.0 * kFigure.sigma0), 1e-15);
  EXPECT_NEAR(c1.s / c0.s, std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(c1.X, pi / 2.0 + 200.0 * c0.tau);
  EXPECT_EQ(c1.P, 100.0);
}

TEST(ClosedForm, NormalizedWhenValid) {
  const auto cf = closed_form(kFigure, Grid(), 0.0);
  EXPECT_TRUE(cf.flags.all());
  EXPECT_NEAR(norm_squared(cf.wave), 1.0, 1e-10);
}

TEST(ClosedForm, ValidityFlags) {
  EXPECT_FALSE(validity_flags({10.0, 10.0, pi / 2.0}, 0.0).n0_above_sigma0);
  EXPECT_FALSE(validity_flags({100.0, 2.0, pi / 2.0}, 0.0).sigma0_large);
  EXPECT_FALSE(validity_flags({100.0, 10.0, 0.1}, 0.0).away_from_left);
  EXPECT_FALSE(validity_flags({100.0, 10.0, pi / 2.0}, 0.0025).short_time);
  EXPECT_TRUE(validity_flags(kFigure, 0.0005).all());
}

TEST(ClosedForm, AgreesWithSeriesInValidRegime) {
  const Grid g;
  const auto s = build_gcs(kFigure, Basis::original());
  const double tau = closed_form_params(kFigure, 0.0).tau;
  for (double t : {0.0, tau / 5.0}) {
    const auto series = evaluate(s, g, t);
    const auto cf = closed_form(kFigure, g, t);
    EXPECT_LT(phase_insensitive_distance(series, cf.wave), t == 0.0 ? 0.05 : 0.1) << "t=" << t;
  }
}

TEST(Classical, FirstWallHitAndPeriod) {
  const double t_hit = first_wall_time(kFigure);
  EXPECT_NEAR(t_hit, (pi / 2.0) / 200.0, 1e-15);
  EXPECT_NEAR(classical_position(kFigure, t_hit), pi, 1e-12);
  EXPECT_LT(classical_position(kFigure, t_hit + 1e-4), pi);
  EXPECT_NEAR(classical_position(kFigure, pi / 100.0), pi / 2.0, 1e-12);
  EXPECT_GT(classical_position(kFigure, pi / 100.0 + 1e-4), pi / 2.0);
}

TEST(Classical, TraceStaysInsideWell) {
  const auto tr = classical_trace(kFigure, 0.1, 1000);
  ASSERT_EQ(tr.size(), 1001U);
  for (const auto& [t, x] : tr) {
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, pi);
  }
  EXPECT_THROW(classical_trace(kFigure, 0.0, 10), std::invalid_argument);
}

TEST(SusyBasis, OffResonanceMatchesOriginal) {
  const Grid g;
  const GcsParams p{30.0, 5.0, pi / 2.0};
  const auto a = evaluate(build_gcs(p, Basis::original()), g, 0.0);
  const auto b = evaluate(build_gcs(p, Basis::partner(SusyParams(100, 2.0))), g, 0.0);
  EXPECT_LT(l2_distance(a, b), 1e-2);
}

TEST(SusyBasis, CoincidentCaseDeviatesMore) {
  const Grid g;
  const auto orig = evaluate(build_gcs(kFigure, Basis::original()), g, 0.0);
  const auto susy = evaluate(build_gcs(kFigure, Basis::partner(SusyParams(100, 2.0))), g, 0.0);
  const GcsParams off{30.0, 5.0, pi / 2.0};
  const double d_off = l2_distance(evaluate(build_gcs(off, Basis::original()), g, 0.0),
                                   evaluate(build_gcs(off, Basis::partner(SusyParams(100, 2.0))), g, 0.0));
  EXPECT_GT(l2_distance(orig, susy) / d_off, 5.0);
}

TEST(Density, SecondaryPeakRatio) {
  const Grid g(2001);
  SampledWave f(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g[j];
    f[j] = std::exp(-(x - 1.0) * (x - 1.0) / 0.01) + 0.5 * std::exp(-(x - 2.5) * (x - 2.5) / 0.01);
  }
  EXPECT_NEAR(secondary_peak_ratio(f, 1.0, 0.5), 0.25, 1e-4);
  EXPECT_NEAR(secondary_peak_ratio(f, 1.0, 2.0), 0.0, 1e-15);
}
