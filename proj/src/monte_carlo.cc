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

#include "polarcascade/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "polarcascade/philox.h"

namespace polarcascade {

namespace {

// Two-sided 95% standard normal quantile.
constexpr double kZ95 = 1.959963984540054;

// Survivors after each filter for photons [begin, end).
std::vector<uint64_t> simulate_range(const MonteCarloConfig &config, const std::vector<PolarizationKet> &axis_kets,
                                     uint64_t begin, uint64_t end) {
    const auto &stack = config.stack();
    std::vector<uint64_t> survivors(stack.size(), 0);
    const auto *pure = std::get_if<PureKetInput>(&config.input());
    const PolarizationKet pure_state = pure != nullptr ? ket(pure->plane) : ket(Angle{});

    for (uint64_t i = begin; i < end; ++i) {
        PhotonStream rng(config.seed(), i);
        PolarizationKet state = pure_state;
        if (pure == nullptr) {
            state = ket(Angle::from_radians(rng.uniform() * std::numbers::pi));
        }
        for (size_t k = 0; k < stack.size(); ++k) {
            double u = rng.uniform();
            if (!(u < pass_probability(state, stack[k]))) {
                break;
            }
            ++survivors[k];
            state = axis_kets[k];
        }
    }
    return survivors;
}

}  // namespace

MonteCarloConfig::MonteCarloConfig(uint64_t photon_count, uint64_t seed, QuantumInput input, FilterStack stack)
    : photon_count_(photon_count), seed_(seed), input_(std::move(input)), stack_(std::move(stack)) {
    if (photon_count_ == 0) {
        throw std::invalid_argument("Monte Carlo run needs at least one photon");
    }
}

ConfidenceInterval wilson_interval_95(uint64_t successes, uint64_t trials) {
    if (trials == 0 || successes > trials) {
        throw std::invalid_argument("Wilson interval needs 0 <= successes <= trials and trials > 0");
    }
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = kZ95 * kZ95;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = kZ95 / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    ConfidenceInterval ci{center - half, center + half};
    // The bounds bracket p exactly in real arithmetic; rounding can nudge them
    // across at p = 0 or p = 1.
    ci.lo = std::clamp(std::min(ci.lo, p), 0.0, 1.0);
    ci.hi = std::clamp(std::max(ci.hi, p), 0.0, 1.0);
    return ci;
}

MonteCarloReport run_monte_carlo(const MonteCarloConfig &config, unsigned workers) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    const uint64_t n = config.photon_count();
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, n));

    std::vector<PolarizationKet> axis_kets;
    axis_kets.reserve(config.stack().size());
    for (const auto &p : config.stack()) {
        axis_kets.push_back(ket(p.axis));
    }

    std::vector<std::vector<uint64_t>> partials(workers);
    auto chunk_begin = [&](unsigned w) { return n / workers * w + std::min<uint64_t>(w, n % workers); };
    if (workers == 1) {
        partials[0] = simulate_range(config, axis_kets, 0, n);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] { partials[w] = simulate_range(config, axis_kets, chunk_begin(w), chunk_begin(w + 1)); });
        }
    }

    MonteCarloReport report;
    report.stack = config.stack();
    report.photon_count = n;
    report.seed = config.seed();
    report.per_stage_survivor_counts.assign(config.stack().size(), 0);
    for (const auto &part : partials) {
        for (size_t k = 0; k < part.size(); ++k) {
            report.per_stage_survivor_counts[k] += part[k];
        }
    }
    report.transmitted_count = config.stack().empty() ? n : report.per_stage_survivor_counts.back();
    double nd = static_cast<double>(n);
    report.estimate = static_cast<double>(report.transmitted_count) / nd;
    report.standard_error = std::sqrt(report.estimate * (1 - report.estimate) / nd);
    report.confidence_interval_95 = wilson_interval_95(report.transmitted_count, n);
    return report;
}

}  // namespace polarcascade
