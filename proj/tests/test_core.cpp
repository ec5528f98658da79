// Copyright 2026 The trajkit Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "trajkit/core.hpp"

using namespace trajkit;

namespace {

Trajectory line_1d(std::vector<double> x, TimeGrid grid = {}) { return make_trajectory({std::move(x)}, grid); }

}  // namespace

TEST(SampleMatrix, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(SampleMatrix(0, 2), invalid_argument);
  EXPECT_THROW(SampleMatrix(2, 0), invalid_argument);
  EXPECT_THROW(SampleMatrix({1.0, NAN}, 1, 2), invalid_argument);
  EXPECT_THROW(SampleMatrix::from_rows({{1.0, 2.0}, {3.0}}), invalid_argument);
}

TEST(SampleMatrix, AxisAccessorsNormAndDelta) {
  auto m = SampleMatrix::from_rows({{3.0, 4.0}, {6.0, 8.0}, {6.0, 8.0}});
  EXPECT_EQ(m.x(), (std::vector<double>{3, 6, 6}));
  EXPECT_EQ(m.y(), (std::vector<double>{4, 8, 8}));
  EXPECT_THROW(m.z(), invalid_argument);
  EXPECT_EQ(m.norm(), (std::vector<double>{5, 10, 10}));
  auto d = m.delta();
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d(0, 0), 3.0);
  EXPECT_EQ(d(1, 1), 0.0);
  EXPECT_THROW(SampleMatrix(1, 2).delta(), invalid_argument);
}

TEST(TimeGrid, UniformMaterializesAndDefaults) {
  EXPECT_EQ(TimeGrid{}.materialize(3), (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(TimeGrid::uniform(0.5, 2.0).materialize(3), (std::vector<double>{2, 2.5, 3}));
  EXPECT_THROW(TimeGrid::uniform(0.0), invalid_argument);
  EXPECT_THROW(TimeGrid::explicit_times({0.0, 1.0, 1.0}), invalid_argument);
}

TEST(MakeTrajectory, PaperListing) {
  auto traj = make_trajectory({{0, 1.0, 0.63, -0.37}, {0, 0, 0.98, 1.24}});
  EXPECT_EQ(traj.dim(), 2u);
  EXPECT_EQ(traj.size(), 4u);
  EXPECT_EQ(traj.t(), (std::vector<double>{0, 1, 2, 3}));
  EXPECT_EQ(traj.v().size(), 4u);
  EXPECT_EQ(traj.a().dim(), 2u);
}

TEST(MakeTrajectory, SingleSampleHasNoKinematics) {
  auto traj = make_trajectory_from_points({{0.0, 0.0}});
  EXPECT_EQ(traj.size(), 1u);
  EXPECT_EQ(traj.t(), (std::vector<double>{0}));
  EXPECT_THROW(traj.v(), kinematics_undefined);
  EXPECT_THROW(traj.a(), kinematics_undefined);
}

TEST(MakeTrajectory, Errors) {
  EXPECT_THROW(make_trajectory({{0, 1, 2}}, TimeGrid::explicit_times({0, 2, 1})), invalid_argument);
  EXPECT_THROW(make_trajectory({{0, 1, 2}, {0, 1}}), invalid_argument);
  EXPECT_THROW(make_trajectory({}), invalid_argument);
  EXPECT_THROW(make_trajectory({{0, 1, 2}}, TimeGrid::explicit_times({0, 1})), invalid_argument);
}

TEST(Differentiate, LinearDataIsExact) {
  auto v = line_1d({0, 1, 2, 3}).v();
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(v(i, 0), 1.0);
}

TEST(Differentiate, CentralExactForQuadraticInterior) {
  auto v = line_1d({0, 1, 4}).v();
  EXPECT_DOUBLE_EQ(v(1, 0), 2.0);
  EXPECT_DOUBLE_EQ(v(0, 0), 1.0);  // forward at the first sample
  EXPECT_DOUBLE_EQ(v(2, 0), 3.0);  // backward at the last
}

TEST(Differentiate, ForwardAndBackwardVariants) {
  auto traj = line_1d({0, 1, 4, 9});
  auto fwd = differentiate(traj, DiffMethod::linear(FiniteDifference::forward));
  auto bwd = differentiate(traj, DiffMethod::linear(FiniteDifference::backward));
  EXPECT_EQ(fwd.axis(0), (std::vector<double>{1, 3, 5, 5}));
  EXPECT_EQ(bwd.axis(0), (std::vector<double>{1, 1, 3, 5}));
}

TEST(Differentiate, FornbergNonUniformMatchesOracle) {
  std::vector<double> t{0, 0.5, 1.7, 2.0};
  std::vector<double> x;
  for (double ti : t) x.push_back(std::sin(ti));
  auto traj = make_trajectory({x}, TimeGrid::explicit_times(t), DiffMethod::fornberg(3));
  auto v = traj.v();
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t s = fornberg_stencil_start(i, t.size(), 3);
    std::vector<double> nodes(t.begin() + s, t.begin() + s + 3);
    auto w = oracle::lagrange_derivative_weights(nodes, t[i]);
    double expected = 0.0;
    for (std::size_t j = 0; j < 3; ++j) expected += w[j] * x[s + j];
    EXPECT_NEAR(v(i, 0), expected, 1e-12);
    // At a node, f' - p' = f'''(xi) / 3! * prod_{l != i} (t_i - t_l), and |sin'''| <= 1.
    double bound = 1.0 / 6.0;
    for (double node : nodes)
      if (node != t[i]) bound *= std::abs(t[i] - node);
    EXPECT_LE(std::abs(v(i, 0) - std::cos(t[i])), bound + 1e-12);
  }
}

TEST(Differentiate, FornbergWeightsMatchVandermonde) {
  std::vector<double> nodes{-0.3, 0.1, 0.35, 0.9, 1.4};
  auto w = fornberg_weights(nodes, 0.2, 2);
  for (int order = 0; order <= 2; ++order) {
    auto ref = oracle::vandermonde_weights(nodes, 0.2, order);
    for (std::size_t j = 0; j < nodes.size(); ++j) EXPECT_NEAR(w[order][j], ref[j], 1e-10);
  }
}

TEST(Differentiate, TooFewSamples) {
  EXPECT_THROW(make_trajectory({{0, 1}}, std::nullopt, DiffMethod::fornberg(3)).v(), kinematics_undefined);
  EXPECT_THROW(DiffMethod::fornberg(4), invalid_argument);
}

TEST(Differentiate, AccelerationIsDerivativeOfVelocity) {
  auto traj = line_1d({0, 1, 4, 9, 16});
  auto a = traj.a();
  auto again = differentiate(traj.v(), traj.t(), traj.diff_method());
  EXPECT_EQ(a, again);
  EXPECT_DOUBLE_EQ(a(2, 0), 2.0);
}

TEST(Combine, LedMinusPivot) {
  auto led = make_trajectory_from_points({{1, 1}, {2, 1}});
  auto pivot = make_trajectory_from_points({{0.5, 0.5}, {0.5, 0.5}});
  auto centered = led - pivot;
  EXPECT_EQ(centered.r(), SampleMatrix::from_rows({{0.5, 0.5}, {1.5, 0.5}}));
  EXPECT_EQ(centered.time_grid(), led.time_grid());
}

TEST(Combine, Identities) {
  auto a = make_trajectory({{1, -2, 3.5}, {0.25, 4, -1}});
  auto zero = make_trajectory({{0, 0, 0}, {0, 0, 0}});
  auto ones = make_trajectory({{1, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(a + zero, a);
  EXPECT_EQ(a * ones, a);
  EXPECT_EQ((a - a).r(), zero.r());
}

TEST(Combine, Mismatches) {
  auto a = make_trajectory({{1, 2, 3}});
  EXPECT_THROW(a + make_trajectory({{1, 2, 3}, {1, 2, 3}}), invalid_argument);
  EXPECT_THROW(a + make_trajectory({{1, 2}}), grid_mismatch);
  EXPECT_THROW(a + make_trajectory({{1, 2, 3}}, TimeGrid::uniform(2.0)), grid_mismatch);
  // Round-off between grids is tolerated.
  EXPECT_NO_THROW(a + make_trajectory({{1, 2, 3}}, TimeGrid::explicit_times({0, 1 + 1e-12, 2})));
}

TEST(ShiftScale, ReferToInitialPosition) {
  auto wheel = make_trajectory_from_points({{0.3, -0.2}, {0.5, 0.1}, {0.7, 0.6}});
  auto start = wheel.r().row(0);
  std::vector<double> r0(start.begin(), start.end());
  auto rel = wheel - std::span<const double>(r0);
  EXPECT_EQ(rel.r()(0, 0), 0.0);
  EXPECT_EQ(rel.r()(0, 1), 0.0);
  EXPECT_NEAR(rel.r()(2, 1), 0.8, 1e-15);
}

TEST(ShiftScale, IdentityAndLinearity) {
  auto traj = line_1d({1, 2});
  EXPECT_EQ(shift_scale(traj, std::vector<double>{0.0}, std::vector<double>{1.0}), traj);
  auto doubled = scale(traj, 2.0);
  EXPECT_EQ(doubled.r().axis(0), (std::vector<double>{2, 4}));
  EXPECT_DOUBLE_EQ(doubled.v()(0, 0), 2.0 * traj.v()(0, 0));
  EXPECT_THROW(shift(make_trajectory({{1, 2}, {3, 4}}), std::vector<double>{1, 2, 3}), invalid_argument);
}

TEST(ShiftScale, AxisSubset) {
  auto traj = make_trajectory({{1, 2}, {3, 4}});
  std::vector<std::size_t> axes{1};
  auto out = shift_scale(traj, std::vector<double>{10.0}, std::vector<double>{2.0}, axes);
  EXPECT_EQ(out.r().axis(0), (std::vector<double>{1, 2}));
  EXPECT_EQ(out.r().axis(1), (std::vector<double>{16, 18}));
}

TEST(Rotate, PlanarAndSpatial) {
  auto p = make_trajectory_from_points({{1, 0}});
  auto q = rotate_2d(p, std::numbers::pi / 2);
  EXPECT_NEAR(q.r()(0, 0), 0.0, 1e-12);
  EXPECT_NEAR(q.r()(0, 1), 1.0, 1e-12);
  auto traj = make_trajectory({{1, 2, 5}, {-1, 0.5, 3}});
  EXPECT_EQ(rotate_2d(traj, 0.0), traj);
  auto r3 = rotate_3d(make_trajectory_from_points({{1, 0, 0}}), {0, 0, 1}, std::numbers::pi);
  EXPECT_NEAR(r3.r()(0, 0), -1.0, 1e-12);
  EXPECT_NEAR(r3.r()(0, 1), 0.0, 1e-12);
  EXPECT_NEAR(r3.r()(0, 2), 0.0, 1e-12);
}

TEST(Rotate, PivotAndErrors) {
  auto p = rotate_2d(make_trajectory_from_points({{2, 1}}), std::numbers::pi, {1, 1});
  EXPECT_NEAR(p.r()(0, 0), 0.0, 1e-12);
  EXPECT_NEAR(p.r()(0, 1), 1.0, 1e-12);
  EXPECT_THROW(rotate_2d(make_trajectory({{1}}), 1.0), invalid_argument);
  EXPECT_THROW(rotate_3d(make_trajectory_from_points({{1, 0, 0}}), {0, 0, 0}, 1.0), invalid_argument);
  EXPECT_THROW(rotate_3d(make_trajectory_from_points({{1, 0}}), {0, 0, 1}, 1.0), invalid_argument);
}

TEST(PolarOffset, Examples) {
  auto p = make_trajectory_from_points({{1, 0}});
  auto a = add_polar_offset(p, 1.0, 0.0);
  EXPECT_NEAR(a.r()(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(a.r()(0, 1), 0.0, 1e-15);
  auto b = add_polar_offset(p, 0.0, std::numbers::pi / 2);
  EXPECT_NEAR(b.r()(0, 0), 0.0, 1e-15);
  EXPECT_NEAR(b.r()(0, 1), 1.0, 1e-15);
  EXPECT_THROW(add_polar_offset(p, -2.0, 0.0), invalid_argument);
  EXPECT_THROW(add_polar_offset(make_trajectory({{1}}), 1.0, 0.0), invalid_argument);
}

TEST(PolarOffset, WheelRadiusGrowsByOffset) {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 50; ++i) pts.push_back({0.2 * std::cos(0.1 * i), 0.2 * std::sin(0.1 * i) + 0.01 * i});
  auto led = make_trajectory_from_points(pts);
  auto wheel = add_polar_offset(led, 0.039, 0.0);
  auto rl = led.r().norm(), rw = wheel.r().norm();
  for (std::size_t i = 0; i < rl.size(); ++i) EXPECT_NEAR(rw[i], rl[i] + 0.039, 1e-14);
}
