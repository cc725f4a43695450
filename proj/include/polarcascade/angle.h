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

#ifndef POLARCASCADE_ANGLE_H
#define POLARCASCADE_ANGLE_H

#include <numbers>

namespace polarcascade {

/// Orientation of a polarizer axis or a polarization plane.
///
/// An axis at theta is physically the same as one at theta + pi, so the stored
/// value is always reduced into [0, pi). Construction from a non-finite value
/// throws std::domain_error.
class Angle {
   public:
    constexpr Angle() = default;

    static Angle from_radians(double radians);
    static Angle from_degrees(double degrees);

    constexpr double radians() const {
        return radians_;
    }
    double degrees() const {
        return radians_ * (180.0 / std::numbers::pi);
    }

    friend constexpr bool operator==(Angle, Angle) = default;

   private:
    explicit constexpr Angle(double canonical) : radians_(canonical) {
    }

    double radians_ = 0.0;
};

/// Free-function spelling used at the command-line boundary.
Angle angle_from_degrees(double degrees);

/// Cosine and sine that are exactly zero when the argument lies within
/// kQuarterTurnResolution of an odd multiple of pi/2.
struct CosSin {
    double cos;
    double sin;
};
inline constexpr double kQuarterTurnResolution = 1e-15;
CosSin exact_cos_sin(double radians);

}  // namespace polarcascade

#endif
