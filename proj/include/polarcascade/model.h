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

#ifndef POLARCASCADE_MODEL_H
#define POLARCASCADE_MODEL_H

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polarcascade/angle.h"

namespace polarcascade {

/// Tolerance for exact-math invariants (normalization, symmetry, trace).
inline constexpr double kExactTolerance = 1e-12;

/// Probabilities below this are treated as orthogonal for projection.
inline constexpr double kProjectionFloor = 1e-15;

/// Raised when collapsing a state onto a filter it cannot pass.
struct ZeroProbabilityProjection : std::domain_error {
    using std::domain_error::domain_error;
};

/// Ideal linear polarizer: full transmission along the axis, full extinction across it.
struct Polarizer {
    Angle axis;

    friend bool operator==(const Polarizer &, const Polarizer &) = default;
};

/// Ordered stack of polarizers; light traverses them front to back.
using FilterStack = std::vector<Polarizer>;

FilterStack stack_from_degrees(const std::vector<double> &degrees);

/// Classical light: unpolarized, or linearly polarized along `plane`.
class ClassicalBeam {
   public:
    static ClassicalBeam unpolarized(double intensity);
    static ClassicalBeam linear(Angle plane, double intensity);

    bool is_unpolarized() const {
        return !plane_.has_value();
    }
    /// Empty for unpolarized light.
    std::optional<Angle> plane() const {
        return plane_;
    }
    double intensity() const {
        return intensity_;
    }

    friend bool operator==(const ClassicalBeam &, const ClassicalBeam &) = default;

   private:
    ClassicalBeam(std::optional<Angle> plane, double intensity) : plane_(plane), intensity_(intensity) {
    }

    std::optional<Angle> plane_;
    double intensity_;
};

/// Pure polarization state with real amplitudes over |H> = (1, 0), |V> = (0, 1).
///
/// A ket and its negation describe the same physical state.
class PolarizationKet {
   public:
    /// Throws std::domain_error unless amp_h^2 + amp_v^2 = 1 within kExactTolerance.
    PolarizationKet(double amp_h, double amp_v);

    double amp_h() const {
        return amp_h_;
    }
    double amp_v() const {
        return amp_v_;
    }
    PolarizationKet operator-() const {
        return PolarizationKet(-amp_h_, -amp_v_);
    }

    friend bool operator==(const PolarizationKet &, const PolarizationKet &) = default;

   private:
    double amp_h_;
    double amp_v_;
};

/// Mixed photon state: real symmetric 2x2, unit trace, positive semidefinite.
class DensityMatrix2 {
   public:
    using Rows = std::array<std::array<double, 2>, 2>;

    /// Throws std::domain_error when the matrix is not a valid density matrix.
    explicit DensityMatrix2(const Rows &m);

    /// I/2, the fully unpolarized state.
    static DensityMatrix2 maximally_mixed();
    /// |s><s|.
    static DensityMatrix2 pure(const PolarizationKet &s);

    double operator()(int row, int col) const {
        return m_[row][col];
    }
    const Rows &rows() const {
        return m_;
    }

   private:
    Rows m_;
};

double malus_factor(Angle plane, Angle axis);
ClassicalBeam classical_transmit(const ClassicalBeam &beam, const Polarizer &p);

PolarizationKet ket(Angle axis);
double inner_product(const PolarizationKet &a, const PolarizationKet &b);
double pass_probability(const PolarizationKet &state, const Polarizer &p);
/// Collapse onto the filter axis. Returns ket(p.axis) verbatim.
PolarizationKet project(const PolarizationKet &state, const Polarizer &p);

double density_pass_probability(const DensityMatrix2 &rho, const Polarizer &p);
DensityMatrix2 density_project(const DensityMatrix2 &rho, const Polarizer &p);

}  // namespace polarcascade

#endif
