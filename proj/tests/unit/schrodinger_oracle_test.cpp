#include "fourpi/schrodinger_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fourpi/errors.hpp"
#include "fourpi/phase.hpp"
#include "square_barrier_solve.hpp"
#include "test_support.hpp"

namespace {

using namespace fourpi::oracle;
using fourpi::magnetic::FieldProfile;
using fourpi::magnetic::NeutronKinematics;
using fourpi::magnetic::SpinSign;
using fourpi::testing::complex_gap;
using fourpi::testing::grid;

SegmentedProfile random_profile(unsigned seed, int n, double v_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> width(0.05, 0.4);
  std::uniform_real_distribution<double> height(-v_max, v_max);
  std::vector<double> x{-1.0};
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    x.push_back(x.back() + width(rng));
    v.push_back(height(rng));
  }
  return SegmentedProfile::make(x, v);
}

TEST(SegmentedProfile, Validation) {
  EXPECT_THROW(SegmentedProfile::make({0.0}, {}), fourpi::DomainError);
  EXPECT_THROW(SegmentedProfile::make({0.0, 1.0}, {1.0, 2.0}),
               fourpi::DomainError);
  EXPECT_THROW(SegmentedProfile::make({0.0, 0.0}, {1.0}), fourpi::DomainError);
  const auto p = SegmentedProfile::make({-1.0, 0.0, 2.0}, {3.0, -1.0});
  EXPECT_EQ(p.potential_at(-1.5), 0.0);
  EXPECT_EQ(p.potential_at(-0.5), 3.0);
  EXPECT_EQ(p.potential_at(1.0), -1.0);
  EXPECT_EQ(p.potential_at(2.0), 0.0);
  const auto r = p.reversed();
  EXPECT_EQ(r.breakpoints(), (std::vector<double>{-2.0, 0.0, 1.0}));
  EXPECT_EQ(r.potential_values(), (std::vector<double>{-1.0, 3.0}));
}

TEST(Discretize, SquareProfileIsExact) {
  const auto sq = FieldProfile::square(3.0, 1.5);
  const auto one = discretize_profile(sq, SpinSign::kUp, 1);
  EXPECT_EQ(one.breakpoints(), (std::vector<double>{-1.5, 1.5}));
  EXPECT_EQ(one.potential_values(), (std::vector<double>{1.5}));
  const auto seven = discretize_profile(sq, SpinSign::kDown, 7);
  ASSERT_EQ(seven.segments(), 7u);
  for (const double v : seven.potential_values()) EXPECT_EQ(v, -1.5);
  EXPECT_EQ(seven.breakpoints().front(), -1.5);
  EXPECT_EQ(seven.breakpoints().back(), 1.5);
}

TEST(Discretize, SolverIndependentOfRefinement) {
  const auto sq = FieldProfile::square(3.0, 1.5);
  const auto ref = transfer_matrix_transmission(
      discretize_profile(sq, SpinSign::kUp, 1), 4.0);
  for (const std::size_t n : {2u, 7u, 64u}) {
    const auto r = transfer_matrix_transmission(
        discretize_profile(sq, SpinSign::kUp, n), 4.0);
    EXPECT_LT(complex_gap(r.t, ref.t), 1e-13) << n;
    EXPECT_LT(complex_gap(r.r, ref.r), 1e-13) << n;
  }
}

TEST(Discretize, SupNormBound) {
  const auto p = FieldProfile::smooth(2.0, 1.0, 0.7);
  const double height = 1.0;  // hbar omega / 2
  for (const std::size_t n : {5u, 40u, 333u}) {
    const auto seg = discretize_profile(p, SpinSign::kUp, n);
    const double width = 2.0 * p.support_half_width() / static_cast<double>(n);
    const double bound = height * p.max_weight_slope() * width / 2.0;
    double worst = 0.0;
    for (const double x : grid(-2.0, 2.0, 40001)) {
      worst = std::max(worst, std::abs(seg.potential_at(x) - height * p.weight(x)));
    }
    EXPECT_LE(worst, bound * (1.0 + 1e-12)) << n;
  }
}

TEST(Oracle, FreeSpace) {
  const auto p = SegmentedProfile::make({-2.0, 0.5, 3.0}, {0.0, 0.0});
  const auto r = transfer_matrix_transmission(p, 1.7);
  EXPECT_LT(complex_gap(r.t, 1.0), 1e-15);
  EXPECT_LT(std::abs(r.r), 1e-15);
  EXPECT_NEAR(r.phase, 0.0, 1e-14);
}

TEST(Oracle, SingleStepAgainstDirectSolve) {
  for (const double v : {-3.0, 0.4, 1.9, 2.5, 6.0}) {
    for (const double a : {0.3, 1.0, 2.0}) {
      const auto p = SegmentedProfile::make({-a, a}, {v});
      const auto r = transfer_matrix_transmission(p, 2.0);
      const auto ref = fourpi::testing::solve_square_step(2.0, v, a);
      EXPECT_LT(complex_gap(r.t, ref.t), 1e-12) << v << " " << a;
      EXPECT_LT(complex_gap(r.r, ref.r), 1e-12) << v << " " << a;
    }
  }
}

TEST(Oracle, MassAndHbarScaling) {
  // Only 2 m / hbar^2 enters.
  const auto p = SegmentedProfile::make({-1.0, 0.0, 1.0}, {0.5, -0.2});
  const auto base = transfer_matrix_transmission(p, 1.3, 1.0, 1.0);
  const auto scaled = transfer_matrix_transmission(p, 1.3, 4.0, 2.0);
  EXPECT_LT(complex_gap(base.t, scaled.t), 1e-14);
  EXPECT_LT(complex_gap(base.r, scaled.r), 1e-14);
}

TEST(Oracle, FluxConservationAboveAllSegments) {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const auto p = random_profile(seed, 30, 1.0);
    for (const double e : {1.01, 2.0, 9.0}) {
      const auto r = transfer_matrix_transmission(p, e);
      ASSERT_NEAR(std::norm(r.t) + std::norm(r.r), 1.0, 1e-10) << seed;
    }
  }
}

TEST(Oracle, FluxConservationWithEvanescentSegments) {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const auto p = random_profile(seed, 30, 4.0);
    const auto r = transfer_matrix_transmission(p, 1.5);
    ASSERT_NEAR(std::norm(r.t) + std::norm(r.r), 1.0, 1e-10) << seed;
  }
}

TEST(Oracle, Reciprocity) {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const auto p = random_profile(seed, 25, 4.0);
    for (const double e : {0.7, 1.5, 5.0}) {
      const auto left = transfer_matrix_transmission(p, e);
      const auto right = transfer_matrix_transmission(p.reversed(), e);
      ASSERT_LT(complex_gap(left.t, right.t), 1e-12 * (1.0 + std::abs(left.t)))
          << seed << " " << e;
    }
  }
}

TEST(Oracle, ThickBarrierDoesNotOverflow) {
  const auto p = SegmentedProfile::make({-500.0, 500.0}, {10.0});
  const auto r = transfer_matrix_transmission(p, 1.0);
  EXPECT_TRUE(std::isfinite(r.r.real()) && std::isfinite(r.r.imag()));
  EXPECT_NEAR(std::abs(r.r), 1.0, 1e-12);
  EXPECT_EQ(std::abs(r.t), 0.0);
}

TEST(Oracle, PhaseIsUnwrappedArgument) {
  const auto profile = FieldProfile::square(0.0, 1.0);
  const auto kin = NeutronKinematics::from_energy(50.0);
  for (const double omega : grid(0.0, 90.0, 31)) {
    const auto seg =
        discretize_profile(profile.with_omega(omega), SpinSign::kUp, 5);
    const auto r = transfer_matrix_transmission(seg, kin.energy());
    EXPECT_NEAR(fourpi::wrap_to_pi(r.phase - std::arg(r.t)), 0.0, 1e-12);
  }
  // Deep in the field the barrier adds many turns of phase lag.
  const auto deep = transfer_matrix_transmission(
      discretize_profile(profile.with_omega(90.0), SpinSign::kUp, 5), 50.0);
  EXPECT_LT(deep.phase, -2.0 * fourpi::kPi);
}

TEST(Oracle, SmoothProfileConvergesAtLeastFirstOrder) {
  const auto profile = FieldProfile::smooth(20.0, 1.0, 1.0);
  const double e = 50.0;
  const double ref =
      transfer_matrix_transmission(
          discretize_profile(profile, SpinSign::kUp, 10000), e)
          .phase;
  std::vector<double> widths;
  std::vector<double> errors;
  for (const std::size_t n : {64u, 128u, 256u, 512u}) {
    const double phase =
        transfer_matrix_transmission(discretize_profile(profile, SpinSign::kUp, n), e)
            .phase;
    widths.push_back(1.0 / static_cast<double>(n));
    errors.push_back(std::abs(phase - ref));
  }
  EXPECT_GE(fourpi::testing::fitted_order(widths, errors), 1.0);
}

TEST(Oracle, Errors) {
  const auto p = SegmentedProfile::make({-1.0, 1.0}, {2.0});
  EXPECT_THROW(transfer_matrix_transmission(p, 0.0), fourpi::DomainError);
  EXPECT_THROW(transfer_matrix_transmission(p, -1.0), fourpi::DomainError);
  EXPECT_THROW(transfer_matrix_transmission(p, 2.0), fourpi::ThresholdError);
  EXPECT_THROW(discretize_profile(FieldProfile::square(1.0, 1.0), SpinSign::kUp, 0),
               fourpi::DomainError);
}

}  // namespace
