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

#include "properties.hpp"

#define EXPECT_HOLDS(outcome)                        \
  do {                                               \
    auto o_ = (outcome);                             \
    EXPECT_GE(o_.cases, 50u);                        \
    EXPECT_TRUE(o_.ok()) << props::describe(o_);     \
  } while (0)

TEST(Property, VacfAndMsdMatchDirectLoops) { EXPECT_HOLDS(props::vacf_msd_oracle(200, 101)); }
TEST(Property, FornbergMatchesLagrangeWeights) { EXPECT_HOLDS(props::fornberg_oracle(200, 102)); }
TEST(Property, CorrelationsInvariantUnderRigidMotion) { EXPECT_HOLDS(props::rigid_motion_invariance(100, 103)); }
TEST(Property, RotationsAreIsometries) { EXPECT_HOLDS(props::core_rotation_invariance(100, 104)); }
TEST(Property, MardiaAffineInvariance) { EXPECT_HOLDS(props::mardia_affine_invariance(100, 105)); }
TEST(Property, NormalizedHistogramsIntegrateToOne) { EXPECT_HOLDS(props::histogram_normalization(100, 106)); }
TEST(Property, ParsevalIdentity) { EXPECT_HOLDS(props::parseval(100, 107)); }
TEST(Property, DifferentiationLinearAndPolynomialExact) { EXPECT_HOLDS(props::differentiation_properties(100, 108)); }
TEST(Property, AdditionCommutesAndAssociates) { EXPECT_HOLDS(props::algebra_properties(100, 109)); }
TEST(Property, GeneratorsReproducibleAndWellFormed) { EXPECT_HOLDS(props::generator_properties(60, 110)); }
TEST(Property, TransformsPreserveInputsAndAnchors) { EXPECT_HOLDS(props::transform_properties(100, 111)); }
TEST(Property, AffineFitInvertsNoiselessData) { EXPECT_HOLDS(props::affine_round_trip(200, 112)); }
TEST(Property, CameraPathSplitsCompose) { EXPECT_HOLDS(props::camera_path_properties(100, 113)); }
TEST(Property, SerializationRoundTrips) { EXPECT_HOLDS(props::serialization_round_trip(100, 114)); }
