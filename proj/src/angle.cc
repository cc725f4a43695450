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
#include <stdexcept>
#include <string>

namespace polarcascade {

namespace {

double reduce_half_turn(double value, double period) {
    double r = std::fmod(value, period);
    if (r < 0) {
        r += period;
    }
    // fmod is exact, but the += above can round up to the period itself.
    if (r >= period) {
        r = 0;
    }
    return r;
}

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string("non-finite angle in ") + what);
    }
}

}  // namespace

Angle Angle::from_radians(double radians) {
    require_finite(radians, "radians");
    double r = reduce_half_turn(radians, std::numbers::pi);
    return Angle(r == 0 ? 0.0 : r);
}

Angle Angle::from_degrees(double degrees) {
    require_finite(degrees, "degrees");
    double d = reduce_half_turn(degrees, 180.0);
    double r = (d / 180.0) * std::numbers::pi;
    if (r >= std::numbers::pi) {
        r = 0;
    }
    return Angle(r == 0 ? 0.0 : r);
}

Angle angle_from_degrees(double degrees) {
    return Angle::from_degrees(degrees);
}

CosSin exact_cos_sin(double radians) {
    double c = std::cos(radians);
    double s = std::sin(radians);
    if (std::abs(c) < kQuarterTurnResolution) {
        c = 0;
        s = s < 0 ? -1.0 : 1.0;
    } else if (std::abs(s) < kQuarterTurnResolution) {
        s = 0;
        c = c < 0 ? -1.0 : 1.0;
    }
    return {c, s};
}

}  // namespace polarcascade
