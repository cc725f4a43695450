// Copyright 2026 The Polarcascade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polarcascade/angle.h"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"

using namespace polarcascade;

constexpr double kPi = std::numbers::pi;

TEST(angle, from_degrees_examples) {
    EXPECT_EQ(angle_from_degrees(90).radians(), kPi / 2);
    EXPECT_EQ(angle_from_degrees(180).radians(), 0.0);
    // 225 mod 180 = 45.
    EXPECT_EQ(angle_from_degrees(225).radians(), kPi / 4);
    EXPECT_EQ(angle_from_degrees(-90).radians(), kPi / 2);
    EXPECT_EQ(angle_from_degrees(0).radians(), 0.0);
    EXPECT_EQ(angle_from_degrees(-0.0).radians(), 0.0);
    EXPECT_FALSE(std::signbit(angle_from_degrees(-180).radians()));
}

TEST(angle, rejects_non_finite) {
    EXPECT_THROW(angle_from_degrees(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    EXPECT_THROW(angle_from_degrees(std::numeric_limits<double>::infinity()), std::domain_error);
    EXPECT_THROW(Angle::from_radians(-std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(angle, canonical_range_property) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> wide(-1e6, 1e6);
    for (int i = 0; i < 5000; ++i) {
        double x = wide(rng);
        for (Angle a : {Angle::from_radians(x), Angle::from_degrees(x)}) {
            ASSERT_GE(a.radians(), 0.0);
            ASSERT_LT(a.radians(), kPi);
        }
    }
    // Largest double below pi and values that round onto the period.
    EXPECT_LT(Angle::from_radians(std::nextafter(kPi, 0.0)).radians(), kPi);
    EXPECT_EQ(Angle::from_radians(-1e-300).radians(), 0.0);
    EXPECT_LT(Angle::from_degrees(-1e-300).radians(), kPi);
}

TEST(angle, degrees_period_is_half_turn) {
    for (double d : {0.0, 12.5, 45.0, 90.0, 133.0, 179.0}) {
        EXPECT_EQ(Angle::from_degrees(d), Angle::from_degrees(d + 180));
        EXPECT_EQ(Angle::from_degrees(d), Angle::from_degrees(d - 540));
        EXPECT_NEAR(Angle::from_degrees(d).degrees(), d, 1e-12);
    }
}

TEST(angle, exact_cos_sin_quarter_turns) {
    auto q = exact_cos_sin(kPi / 2);
    EXPECT_EQ(q.cos, 0.0);
    EXPECT_EQ(q.sin, 1.0);
    auto h = exact_cos_sin(-kPi / 2);
    EXPECT_EQ(h.cos, 0.0);
    EXPECT_EQ(h.sin, -1.0);
    auto p = exact_cos_sin(kPi);
    EXPECT_EQ(p.cos, -1.0);
    EXPECT_EQ(p.sin, 0.0);
    auto d = exact_cos_sin(kPi / 4);
    EXPECT_NEAR(d.cos, std::sqrt(0.5), 2e-16);
    EXPECT_NEAR(d.sin, std::sqrt(0.5), 2e-16);
}
