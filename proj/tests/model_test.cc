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

#include "polarcascade/model.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace polarcascade;

namespace {

Polarizer at(double deg) {
    return Polarizer{Angle::from_degrees(deg)};
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// <a| rho |a> by explicit matrix-vector product.
double sandwich(const DensityMatrix2 &rho, double a0, double a1) {
    double a[2] = {a0, a1};
    double total = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            total += a[i] * rho(i, j) * a[j];
        }
    }
    return total;
}

void expect_matrix_near(const DensityMatrix2 &got, const DensityMatrix2::Rows &want, double tol) {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            EXPECT_NEAR(got(i, j), want[i][j], tol) << "entry " << i << "," << j;
        }
    }
}

}  // namespace

TEST(malus_factor, perpendicular_and_diagonal) {
    EXPECT_EQ(malus_factor(Angle::from_degrees(0), Angle::from_degrees(90)), 0.0);
    EXPECT_NEAR(malus_factor(Angle::from_degrees(0), Angle::from_degrees(45)), 0.5, 1e-15);
    for (double d : {0.0, 17.0, 45.0, 90.0, 179.5}) {
        EXPECT_EQ(malus_factor(Angle::from_degrees(d), Angle::from_degrees(d)), 1.0);
    }
}

TEST(classical_transmit, paper_cases) {
    auto a = classical_transmit(ClassicalBeam::unpolarized(1.0), at(0));
    EXPECT_EQ(a, ClassicalBeam::linear(Angle::from_degrees(0), 0.5));

    auto c = classical_transmit(ClassicalBeam::linear(Angle::from_degrees(0), 0.5), at(90));
    EXPECT_EQ(c.plane(), Angle::from_degrees(90));
    EXPECT_EQ(c.intensity(), 0.0);

    auto b = classical_transmit(ClassicalBeam::linear(Angle::from_degrees(0), 0.5), at(45));
    EXPECT_EQ(b.plane(), Angle::from_degrees(45));
    EXPECT_NEAR(b.intensity(), 0.25, 1e-15);
}

TEST(classical_beam, rejects_negative_intensity) {
    EXPECT_THROW(ClassicalBeam::unpolarized(-1), std::domain_error);
    EXPECT_THROW(ClassicalBeam::linear(Angle{}, std::nan("")), std::domain_error);
    EXPECT_TRUE(ClassicalBeam::unpolarized(0).is_unpolarized());
    EXPECT_FALSE(ClassicalBeam::unpolarized(2).plane().has_value());
}

TEST(ket, basis_states) {
    EXPECT_EQ(ket(Angle::from_degrees(0)), PolarizationKet(1, 0));
    EXPECT_EQ(ket(Angle::from_degrees(90)), PolarizationKet(0, 1));
    auto d = ket(Angle::from_degrees(45));
    EXPECT_NEAR(d.amp_h(), kInvSqrt2, 2e-16);
    EXPECT_NEAR(d.amp_v(), kInvSqrt2, 2e-16);
}

TEST(ket, rejects_unnormalized) {
    EXPECT_THROW(PolarizationKet(1, 1), std::domain_error);
    EXPECT_THROW(PolarizationKet(0, 0), std::domain_error);
    EXPECT_NO_THROW(PolarizationKet(-1, 0));
}

TEST(inner_product, paper_brackets) {
    auto h = ket(Angle::from_degrees(0));
    auto v = ket(Angle::from_degrees(90));
    auto d = ket(Angle::from_degrees(45));
    EXPECT_EQ(inner_product(v, h), 0.0);
    EXPECT_EQ(inner_product(h, h), 1.0);
    EXPECT_NEAR(inner_product(d, h), kInvSqrt2, 2e-16);
}

TEST(pass_probability, paper_cases) {
    auto h = ket(Angle::from_degrees(0));
    auto d = ket(Angle::from_degrees(45));
    EXPECT_EQ(pass_probability(h, at(90)), 0.0);
    EXPECT_NEAR(pass_probability(h, at(45)), 0.5, 1e-15);
    EXPECT_NEAR(pass_probability(d, at(90)), 0.5, 1e-15);
}

TEST(project, collapses_onto_axis) {
    auto h = ket(Angle::from_degrees(0));
    auto d = ket(Angle::from_degrees(45));
    EXPECT_EQ(project(h, at(45)), d);
    EXPECT_EQ(project(d, at(90)), PolarizationKet(0, 1));
    EXPECT_THROW(project(h, at(90)), ZeroProbabilityProjection);
}

TEST(density_matrix, validation) {
    EXPECT_THROW(DensityMatrix2({{{0.5, 0.1}, {0.0, 0.5}}}), std::domain_error);  // asymmetric
    EXPECT_THROW(DensityMatrix2({{{0.6, 0.0}, {0.0, 0.6}}}), std::domain_error);  // trace
    EXPECT_THROW(DensityMatrix2({{{1.5, 0.0}, {0.0, -0.5}}}), std::domain_error); // negative eigenvalue
    EXPECT_THROW(DensityMatrix2({{{0.5, 0.6}, {0.6, 0.5}}}), std::domain_error);  // eigenvalues 1.1, -0.1
    EXPECT_NO_THROW(DensityMatrix2({{{0.5, 0.5}, {0.5, 0.5}}}));
}

TEST(density_pass_probability, examples) {
    auto mixed = DensityMatrix2::maximally_mixed();
    for (double d : {0.0, 30.0, 45.0, 90.0, 123.4}) {
        EXPECT_NEAR(density_pass_probability(mixed, at(d)), 0.5, 1e-15) << d;
    }
    auto hh = DensityMatrix2::pure(ket(Angle::from_degrees(0)));
    EXPECT_NEAR(density_pass_probability(hh, at(45)), 0.5, 1e-15);
    EXPECT_EQ(density_pass_probability(hh, at(90)), 0.0);
}

TEST(density_project, examples) {
    expect_matrix_near(density_project(DensityMatrix2::maximally_mixed(), at(0)), {{{1, 0}, {0, 0}}}, 0);
    auto hh = DensityMatrix2::pure(ket(Angle::from_degrees(0)));
    expect_matrix_near(density_project(hh, at(45)), {{{0.5, 0.5}, {0.5, 0.5}}}, 1e-15);
    auto dd = DensityMatrix2::pure(ket(Angle::from_degrees(45)));
    expect_matrix_near(density_project(dd, at(90)), {{{0, 0}, {0, 1}}}, 0);
    EXPECT_THROW(density_project(hh, at(90)), ZeroProbabilityProjection);
}

class CoreModelProperties : public ::testing::Test {
   protected:
    std::mt19937_64 rng{20260101};
    std::uniform_real_distribution<double> deg{0.0, 180.0};
    std::uniform_real_distribution<double> any{-1e4, 1e4};
};

TEST_F(CoreModelProperties, ket_normalization) {
    for (int i = 0; i < 2000; ++i) {
        auto k = ket(Angle::from_degrees(any(rng)));
        ASSERT_NEAR(k.amp_h() * k.amp_h() + k.amp_v() * k.amp_v(), 1.0, kExactTolerance);
    }
}

TEST_F(CoreModelProperties, malus_equals_born_rule) {
    for (int i = 0; i < 2000; ++i) {
        Angle theta = Angle::from_degrees(deg(rng));
        Angle phi = Angle::from_degrees(deg(rng));
        double m = malus_factor(theta, phi);
        ASSERT_NEAR(m, pass_probability(ket(theta), Polarizer{phi}), kExactTolerance);
        ASSERT_GE(m, 0.0);
        ASSERT_LE(m, 1.0);
        // Independent closed form of the angle between plane and axis.
        double c = std::cos(phi.radians() - theta.radians());
        ASSERT_NEAR(m, c * c, kExactTolerance);
    }
}

TEST_F(CoreModelProperties, period_and_sign_invariance) {
    for (int i = 0; i < 2000; ++i) {
        double t = deg(rng), p = deg(rng);
        Angle theta = Angle::from_degrees(t);
        // p on a 1/64 degree grid so p + 180 is exact.
        double grid = std::round(p * 64) / 64;
        ASSERT_EQ(malus_factor(theta, Angle::from_degrees(grid)), malus_factor(theta, Angle::from_degrees(grid + 180)));
        ASSERT_NEAR(malus_factor(theta, Angle::from_degrees(p)), malus_factor(theta, Angle::from_degrees(p + 180)),
                    kExactTolerance);
        auto s = ket(Angle::from_degrees(any(rng)));
        Polarizer f{Angle::from_degrees(p)};
        ASSERT_EQ(pass_probability(s, f), pass_probability(-s, f));
        double prob = pass_probability(s, f);
        ASSERT_GE(prob, 0.0);
        ASSERT_LE(prob, 1.0);
    }
}

TEST_F(CoreModelProperties, projection_idempotent) {
    for (int i = 0; i < 2000; ++i) {
        auto s = ket(Angle::from_degrees(deg(rng)));
        Polarizer f{Angle::from_degrees(deg(rng))};
        if (pass_probability(s, f) < kProjectionFloor) {
            continue;
        }
        ASSERT_NEAR(pass_probability(project(s, f), f), 1.0, kExactTolerance);
    }
}

TEST_F(CoreModelProperties, classical_loss_is_monotone) {
    std::uniform_real_distribution<double> intensity{0.0, 100.0};
    for (int i = 0; i < 2000; ++i) {
        double I = intensity(rng);
        auto beam = i % 3 == 0 ? ClassicalBeam::unpolarized(I) : ClassicalBeam::linear(Angle::from_degrees(deg(rng)), I);
        auto out = classical_transmit(beam, Polarizer{Angle::from_degrees(deg(rng))});
        ASSERT_LE(out.intensity(), beam.intensity());
        ASSERT_GE(out.intensity(), 0.0);
    }
}

TEST_F(CoreModelProperties, density_matches_pure_state) {
    for (int i = 0; i < 2000; ++i) {
        auto s = ket(Angle::from_degrees(any(rng)));
        Polarizer f{Angle::from_degrees(deg(rng))};
        auto rho = DensityMatrix2::pure(s);
        double via_density = density_pass_probability(rho, f);
        ASSERT_NEAR(via_density, pass_probability(s, f), kExactTolerance);
        ASSERT_NEAR(via_density, sandwich(rho, std::cos(f.axis.radians()), std::sin(f.axis.radians())),
                    kExactTolerance);
    }
}
