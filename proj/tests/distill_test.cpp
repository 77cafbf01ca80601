// Copyright 2026 The relent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relent/distill.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "relent/errors.hpp"

namespace relent {
namespace {

using testing::quartic_eigenvalue_oracle;
using testing::spectrum_distance;

GaussianWavepacket packet(double w_over_2m) { return GaussianWavepacket(2.0 * w_over_2m, 1.0); }

WignerCoefficient n_at(double w_over_2m, double alpha) {
  return wigner_coefficient(BoostFrame(packet(w_over_2m), alpha));
}

TEST(PptVerdict, MaximallyMixed) {
  const DistillVerdict v = ppt_verdict(werner_state(WernerParam(0.25)));
  EXPECT_NEAR(v.min_pt_eigenvalue, 0.25, 1e-15);
  EXPECT_FALSE(v.entangled);
  EXPECT_FALSE(v.distillable);
  EXPECT_FALSE(v.boundary);
}

TEST(PptVerdict, Singlet) {
  const DensityMatrix4 s = bell_state(BellKind::PsiMinus);
  const DistillVerdict v = ppt_verdict(s);
  EXPECT_NEAR(v.min_pt_eigenvalue, -0.5, 1e-14);
  EXPECT_NEAR(v.min_pt_eigenvalue, quartic_eigenvalue_oracle(partial_transpose(s.matrix(), Subsystem::B))[0], 1e-10);
  EXPECT_TRUE(v.entangled);
  EXPECT_TRUE(v.distillable);
}

TEST(PptVerdict, WernerHalfIsBoundary) {
  const DistillVerdict v = ppt_verdict(werner_state(WernerParam(0.5)));
  EXPECT_NEAR(v.min_pt_eigenvalue, 0.0, 1e-15);
  EXPECT_FALSE(v.distillable);
  EXPECT_TRUE(v.boundary);
}

TEST(WernerPtSpectrum, SingletAtRest) {
  const PTSpectrum s = werner_pt_spectrum(WernerParam(1.0), WignerCoefficient(1.0));
  EXPECT_DOUBLE_EQ(s.x1, 0.5);
  EXPECT_DOUBLE_EQ(s.x2, -0.5);
  EXPECT_DOUBLE_EQ(s.x3, 0.5);
  EXPECT_DOUBLE_EQ(s.x4, 0.5);
}

TEST(WernerPtSpectrum, MaximallyMixed) {
  for (double n : {0.0, 0.5, 1.0}) {
    const PTSpectrum s = werner_pt_spectrum(WernerParam(0.25), WignerCoefficient(n));
    EXPECT_EQ(s.sorted(), (RealSpectrum4{0.25, 0.25, 0.25, 0.25}));
  }
}

TEST(WernerPtSpectrum, PointSixAtPointNine) {
  const PTSpectrum s = werner_pt_spectrum(WernerParam(0.6), WignerCoefficient(0.9));
  EXPECT_NEAR(s.x2, -0.055666666666666666667, 1e-15);
  const Mat4 pt = partial_transpose(boosted_werner_closed_form(WernerParam(0.6), WignerCoefficient(0.9)).matrix(),
                                    Subsystem::B);
  EXPECT_NEAR(quartic_eigenvalue_oracle(pt)[0], s.x2, 1e-10);
  EXPECT_NEAR(eigenvalues_hermitian(pt)[0], s.x2, 1e-12);
}

TEST(WernerPtSpectrum, MatchesNumericOnGrid) {
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j) {
      const WernerParam f(i / 49.0);
      const WignerCoefficient n(j / 49.0);
      const PTSpectrum s = werner_pt_spectrum(f, n);
      EXPECT_NEAR(s.sum(), 1.0, 1e-12);
      const RealSpectrum4 numeric =
          eigenvalues_hermitian(partial_transpose(boosted_werner_closed_form(f, n).matrix(), Subsystem::B));
      EXPECT_LE(spectrum_distance(numeric, s.sorted()), 1e-10);
    }
}

TEST(WernerPtSpectrum, PositiveEigenvalues) {
  for (int i = 1; i <= 50; ++i)
    for (int j = 1; j < 50; ++j) {
      const PTSpectrum s = werner_pt_spectrum(WernerParam(i / 50.0), WignerCoefficient(j / 50.0));
      EXPECT_GT(s.x1, 0.0);
      EXPECT_EQ(s.x1, s.x4);
      EXPECT_GE(s.x3, 0.0);
    }
}

TEST(DistillThreshold, Values) {
  EXPECT_EQ(distill_threshold(WignerCoefficient(1.0)), 0.5);
  EXPECT_EQ(distill_threshold(WignerCoefficient(0.0)), 1.0);
  // 2.9801 / 5.9204
  EXPECT_NEAR(distill_threshold(WignerCoefficient(0.99)), 0.50336125937436659685, 1e-15);
}

TEST(DistillThreshold, StrictlyDecreasingWithinBounds) {
  double previous = 1.0 + 1e-9;
  for (int k = 0; k <= 1000; ++k) {
    const double t = distill_threshold(WignerCoefficient(k / 1000.0));
    EXPECT_LT(t, previous);
    EXPECT_GE(t, 0.5);
    EXPECT_LE(t, 1.0);
    previous = t;
  }
}

TEST(DistillThreshold, SignEquivalenceWithX2) {
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j <= 100; ++j) {
      const double f = i / 200.0;
      const WignerCoefficient n(j / 100.0);
      const double threshold = distill_threshold(n);
      if (std::abs(f - threshold) < 1e-12) continue;
      EXPECT_EQ(werner_pt_spectrum(WernerParam(f), n).x2 < 0.0, f > threshold) << "F=" << f << " n=" << n.value();
    }
}

TEST(ThresholdCrossing, InvertsThreshold) {
  // 40-digit reference: 2 atanh(sqrt(1 - sqrt((2-2F)/(4F-1))) / 0.1)
  EXPECT_NEAR(*threshold_crossing_rapidity(WernerParam(0.502), 0.1), 2.0538437360443448515, 1e-12);
  EXPECT_NEAR(*threshold_crossing_rapidity(WernerParam(0.5005), 0.1), 0.81666664815723148573, 1e-12);
  for (double f : {0.501, 0.502, 0.503}) {
    const double alpha = *threshold_crossing_rapidity(WernerParam(f), 0.1);
    EXPECT_NEAR(distill_threshold(n_at(0.1, alpha)), f, 1e-13);
  }
  EXPECT_FALSE(threshold_crossing_rapidity(WernerParam(0.5), 0.1));
  EXPECT_FALSE(threshold_crossing_rapidity(WernerParam(0.51), 0.1));  // above the plateau
  EXPECT_FALSE(threshold_crossing_rapidity(WernerParam(1.0), 0.1));
}

TEST(Negativity, KnownValues) {
  EXPECT_NEAR(negativity(bell_state(BellKind::PsiMinus)), 0.5, 1e-14);
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_EQ(negativity(random_product_density(seed)), 0.0);
  for (double f : {0.55, 0.7, 0.9, 1.0})
    EXPECT_NEAR(negativity(werner_state(WernerParam(f))), (2.0 * f - 1.0) / 2.0, 1e-14);
}

TEST(Negativity, WernerMonotoneInCoefficient) {
  for (double f : {0.51, 0.6, 0.8, 1.0}) {
    double previous = -1.0;
    for (int k = 1; k <= 100; ++k) {
      const WignerCoefficient n(k / 100.0);
      const double neg = negativity(boosted_werner_closed_form(WernerParam(f), n));
      const double closed = std::max(0.0, (4.0 * f - 1.0) * n.value() * n.value() / 6.0 - (1.0 - f) / 3.0);
      EXPECT_NEAR(neg, closed, 1e-12);
      if (closed > 1e-12) EXPECT_GT(neg, previous);
      previous = neg;
    }
  }
}

TEST(FrameSet, Validation) {
  EXPECT_THROW(FrameSet({}), EmptyFrameSet);
  EXPECT_THROW(FrameSet({BoostFrame(packet(0.1), 1.0), BoostFrame(packet(0.1), 1.0)}), OutOfRange);
  const FrameSet grid = FrameSet::uniform(packet(0.1), 0.0, 3.0, 7);
  ASSERT_EQ(grid.size(), 7u);
  EXPECT_TRUE(grid.includes_rest_frame());
  EXPECT_EQ(grid.frames().back().rapidity(), 3.0);
  EXPECT_DOUBLE_EQ(grid.frames()[1].rapidity(), 0.5);
  EXPECT_FALSE(FrameSet::uniform(packet(0.1), 1.0, 2.0, 3).includes_rest_frame());
}

TEST(ClassifyFrames, StronglyEntangledWernerIsWeakOnly) {
  const FrameSet frames = FrameSet::uniform(packet(0.1), 0.0, 3.0, 7);
  const IsoClassification c = classify_frames(WernerParam(0.7), frames);
  EXPECT_TRUE(c.wie);
  EXPECT_TRUE(c.wid);
  EXPECT_FALSE(c.sie);
  EXPECT_FALSE(c.sid);
  EXPECT_EQ(c.measure_name, "negativity");
  ASSERT_EQ(c.negativity_trace.size(), 7u);
  for (std::size_t k = 0; k < 7; ++k) {
    const double alpha = c.negativity_trace[k].first;
    const double x2 = werner_pt_spectrum(WernerParam(0.7), n_at(0.1, alpha)).x2;
    EXPECT_NEAR(c.negativity_trace[k].second, -x2, 1e-12);
  }
}

TEST(ClassifyFrames, SeparableWerner) {
  const IsoClassification c = classify_frames(WernerParam(0.3), FrameSet::uniform(packet(0.1), 0.0, 3.0, 7));
  EXPECT_FALSE(c.wie);
  EXPECT_FALSE(c.wid);
  EXPECT_FALSE(c.sie);
  EXPECT_FALSE(c.sid);
}

TEST(ClassifyFrames, RelativityOfDistillabilityWindow) {
  const FrameSet frames = FrameSet::uniform(packet(0.1), 0.0, 3.0, 7);
  const IsoClassification c = classify_frames(WernerParam(0.502), frames);
  EXPECT_FALSE(c.wie);
  EXPECT_FALSE(c.wid);
  EXPECT_GT(c.negativity_trace.front().second, 0.0);
  EXPECT_EQ(c.negativity_trace.back().second, 0.0);
  EXPECT_NEAR(distill_threshold(n_at(0.1, 3.0)), 0.50274970499628019545, 1e-15);
}

TEST(ClassifyFrames, AboveThePlateauStaysDistillable) {
  const FrameSet frames = FrameSet::uniform(packet(0.1), 0.0, 10.0, 201);
  EXPECT_TRUE(classify_frames(WernerParam(0.51), frames).wid);
  const IsoClassification c = classify_frames(WernerParam(0.5005), frames);
  EXPECT_FALSE(c.wid);
  const double crossing = *threshold_crossing_rapidity(WernerParam(0.5005), 0.1);
  for (const auto& [alpha, neg] : c.negativity_trace) {
    if (alpha < crossing - 1e-9) EXPECT_GT(neg, 0.0) << alpha;
    if (alpha > crossing + 1e-9) EXPECT_EQ(neg, 0.0) << alpha;
  }
}

TEST(ClassifyFrames, SingleFrameIsTriviallyStrong) {
  const FrameSet rest({BoostFrame(packet(0.1), 0.0)});
  const IsoClassification c = classify_frames(WernerParam(0.9), rest);
  EXPECT_TRUE(c.sie);
  EXPECT_TRUE(c.sid);
}

TEST(ClassifyFrames, GeneralDensityAndErrors) {
  const FrameSet frames = FrameSet::uniform(packet(0.1), 0.0, 2.0, 5);
  const IsoClassification c = classify_frames(bell_state(BellKind::PhiPlus), frames);
  EXPECT_TRUE(c.wie);
  EXPECT_FALSE(c.sie);
  EXPECT_THROW(classify_frames(WernerParam(0.9), frames, 0.0), OutOfRange);
}

TEST(ClassifyFrames, HierarchyHoldsOnRandomInputs) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int run = 0; run < 100; ++run) {
    const double w = 0.01 + 0.4 * unit(rng);
    const double a0 = unit(rng);
    const FrameSet frames = FrameSet::uniform(packet(w), a0, a0 + 0.1 + 5 * unit(rng), 2 + run % 9);
    const double tol = std::pow(10.0, -12 + 10 * unit(rng));
    const StateFamily family = run % 2 ? StateFamily(WernerParam(unit(rng)))
                                       : StateFamily(random_density(static_cast<std::uint64_t>(run)));
    const IsoClassification c = classify_frames(family, frames, tol);
    EXPECT_TRUE(!c.sid || c.sie);
    EXPECT_TRUE(!c.sid || c.wid);
    EXPECT_TRUE(!c.sie || c.wie);
    EXPECT_TRUE(!c.wid || c.wie);
  }
}

TEST(StrongInvarianceScan, SeparableHasNoVariation) {
  const std::vector<WignerCoefficient> grid{WignerCoefficient(1.0), WignerCoefficient(0.9), WignerCoefficient(0.5)};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const InvarianceReport r = strong_invariance_scan(random_product_density(seed), grid);
    EXPECT_EQ(r.variation, 0.0);
    EXPECT_EQ(r.max_negativity, 0.0);
  }
}

TEST(StrongInvarianceScan, SingletDecreasesWithCoefficient) {
  const std::vector<WignerCoefficient> grid{WignerCoefficient(1.0), WignerCoefficient(0.99), WignerCoefficient(0.95)};
  const InvarianceReport r = strong_invariance_scan(bell_state(BellKind::PsiMinus), grid);
  ASSERT_EQ(r.negativities.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(r.negativities[k], std::pow(grid[k].value(), 2) / 2.0, 1e-14);
  EXPECT_GT(r.negativities[0], r.negativities[1]);
  EXPECT_GT(r.negativities[1], r.negativities[2]);
  EXPECT_NEAR(r.variation, (1.0 - 0.95 * 0.95) / 2.0, 1e-14);
}

TEST(StrongInvarianceScan, RandomEntangledStatesVary) {
  const std::vector<WignerCoefficient> grid{WignerCoefficient(1.0), WignerCoefficient(0.995)};
  int found = 0;
  for (std::uint64_t seed = 0; found < 100; ++seed) {
    const DensityMatrix4 rho = random_density(seed);
    if (!ppt_verdict(rho).entangled) continue;
    ++found;
    EXPECT_GT(strong_invariance_scan(rho, grid).variation, 1e-8) << "seed " << seed;
  }
}

TEST(StrongInvarianceScan, RejectsBadGrid) {
  const DensityMatrix4 rho = bell_state(BellKind::PsiMinus);
  EXPECT_THROW(strong_invariance_scan(rho, {}), OutOfRange);
  const std::vector<WignerCoefficient> zero{WignerCoefficient(0.0)};
  EXPECT_THROW(strong_invariance_scan(rho, zero), OutOfRange);
}

}  // namespace
}  // namespace relent
