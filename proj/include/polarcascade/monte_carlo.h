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

#ifndef POLARCASCADE_MONTE_CARLO_H
#define POLARCASCADE_MONTE_CARLO_H

#include <cstdint>
#include <vector>

#include "polarcascade/engines.h"

namespace polarcascade {

/// Photon-by-photon simulation parameters. Throws std::invalid_argument on
/// construction when photon_count is 0.
class MonteCarloConfig {
   public:
    MonteCarloConfig(uint64_t photon_count, uint64_t seed, QuantumInput input, FilterStack stack);

    uint64_t photon_count() const {
        return photon_count_;
    }
    uint64_t seed() const {
        return seed_;
    }
    const QuantumInput &input() const {
        return input_;
    }
    const FilterStack &stack() const {
        return stack_;
    }

   private:
    uint64_t photon_count_;
    uint64_t seed_;
    QuantumInput input_;
    FilterStack stack_;
};

struct ConfidenceInterval {
    double lo = 0.0;
    double hi = 1.0;
    friend bool operator==(const ConfidenceInterval &, const ConfidenceInterval &) = default;
};

struct MonteCarloReport {
    FilterStack stack;
    uint64_t photon_count = 0;
    /// Photons still alive after each filter; non-increasing.
    std::vector<uint64_t> per_stage_survivor_counts;
    uint64_t transmitted_count = 0;
    double estimate = 0.0;
    double standard_error = 0.0;
    ConfidenceInterval confidence_interval_95;
    uint64_t seed = 0;

    friend bool operator==(const MonteCarloReport &, const MonteCarloReport &) = default;
};

/// 95% Wilson score interval for `successes` out of `trials` (trials > 0).
ConfidenceInterval wilson_interval_95(uint64_t successes, uint64_t trials);

/// Samples photons through the stack. Photon i draws only from its own
/// Philox stream keyed by (seed, i), so the report is bit-identical for any
/// `workers` value. workers = 0 picks the hardware concurrency.
MonteCarloReport run_monte_carlo(const MonteCarloConfig &config, unsigned workers = 1);

}  // namespace polarcascade

#endif
