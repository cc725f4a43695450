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
#include <string>

namespace polarcascade {

namespace {

void require_intensity(double intensity) {
    if (!std::isfinite(intensity) || intensity < 0) {
        throw std::domain_error("beam intensity must be finite and >= 0, got " + std::to_string(intensity));
    }
}

// Probabilities are squares of real numbers that may round a hair past 1.
double clamp_unit(double p) {
    return p > 1.0 ? 1.0 : p;
}

}  // namespace

FilterStack stack_from_degrees(const std::vector<double> &degrees) {
    FilterStack stack;
    stack.reserve(degrees.size());
    for (double d : degrees) {
        stack.push_back(Polarizer{Angle::from_degrees(d)});
    }
    return stack;
}

ClassicalBeam ClassicalBeam::unpolarized(double intensity) {
    require_intensity(intensity);
    return ClassicalBeam(std::nullopt, intensity);
}

ClassicalBeam ClassicalBeam::linear(Angle plane, double intensity) {
    require_intensity(intensity);
    return ClassicalBeam(plane, intensity);
}

PolarizationKet::PolarizationKet(double amp_h, double amp_v) : amp_h_(amp_h), amp_v_(amp_v) {
    double norm2 = amp_h * amp_h + amp_v * amp_v;
    if (!(std::abs(norm2 - 1.0) <= kExactTolerance)) {
        throw std::domain_error("polarization ket is not normalized (squared norm " + std::to_string(norm2) + ")");
    }
}

DensityMatrix2::DensityMatrix2(const Rows &m) : m_(m) {
    for (const auto &row : m) {
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw std::domain_error("density matrix has a non-finite entry");
            }
        }
    }
    if (std::abs(m[0][1] - m[1][0]) > kExactTolerance) {
        throw std::domain_error("density matrix is not symmetric");
    }
    double trace = m[0][0] + m[1][1];
    if (std::abs(trace - 1.0) > kExactTolerance) {
        throw std::domain_error("density matrix trace is not 1");
    }
    // Eigenvalues of a symmetric 2x2: trace/2 +- sqrt(((a - d)/2)^2 + b^2).
    double half_gap = std::hypot((m[0][0] - m[1][1]) / 2, (m[0][1] + m[1][0]) / 2);
    if (trace / 2 - half_gap < -kExactTolerance) {
        throw std::domain_error("density matrix is not positive semidefinite");
    }
}

DensityMatrix2 DensityMatrix2::maximally_mixed() {
    return DensityMatrix2(Rows{{{0.5, 0.0}, {0.0, 0.5}}});
}

DensityMatrix2 DensityMatrix2::pure(const PolarizationKet &s) {
    double h = s.amp_h();
    double v = s.amp_v();
    return DensityMatrix2(Rows{{{h * h, h * v}, {v * h, v * v}}});
}

double malus_factor(Angle plane, Angle axis) {
    double c = exact_cos_sin(axis.radians() - plane.radians()).cos;
    return clamp_unit(c * c);
}

ClassicalBeam classical_transmit(const ClassicalBeam &beam, const Polarizer &p) {
    if (beam.is_unpolarized()) {
        return ClassicalBeam::linear(p.axis, beam.intensity() / 2);
    }
    return ClassicalBeam::linear(p.axis, beam.intensity() * malus_factor(*beam.plane(), p.axis));
}

PolarizationKet ket(Angle axis) {
    auto [c, s] = exact_cos_sin(axis.radians());
    return PolarizationKet(c, s);
}

double inner_product(const PolarizationKet &a, const PolarizationKet &b) {
    return a.amp_h() * b.amp_h() + a.amp_v() * b.amp_v();
}

double pass_probability(const PolarizationKet &state, const Polarizer &p) {
    double overlap = inner_product(ket(p.axis), state);
    // |overlap| is the sine of the angular distance from perpendicular.
    if (std::abs(overlap) < kQuarterTurnResolution) {
        return 0.0;
    }
    return clamp_unit(overlap * overlap);
}

PolarizationKet project(const PolarizationKet &state, const Polarizer &p) {
    if (pass_probability(state, p) < kProjectionFloor) {
        throw ZeroProbabilityProjection("cannot project a state orthogonal to the filter axis");
    }
    return ket(p.axis);
}

double density_pass_probability(const DensityMatrix2 &rho, const Polarizer &p) {
    auto [c, s] = exact_cos_sin(p.axis.radians());
    double p_pass = c * (rho(0, 0) * c + rho(0, 1) * s) + s * (rho(1, 0) * c + rho(1, 1) * s);
    if (p_pass < kQuarterTurnResolution * kQuarterTurnResolution) {
        p_pass = 0;
    }
    return clamp_unit(p_pass);
}

DensityMatrix2 density_project(const DensityMatrix2 &rho, const Polarizer &p) {
    if (density_pass_probability(rho, p) < kProjectionFloor) {
        throw ZeroProbabilityProjection("cannot project a density matrix with zero weight on the filter axis");
    }
    return DensityMatrix2::pure(ket(p.axis));
}

}  // namespace polarcascade
