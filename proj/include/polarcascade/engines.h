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

#ifndef POLARCASCADE_ENGINES_H
#define POLARCASCADE_ENGINES_H

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "polarcascade/model.h"

namespace polarcascade {

struct UnpolarizedInput {
    double intensity = 1.0;
    friend bool operator==(const UnpolarizedInput &, const UnpolarizedInput &) = default;
};
struct LinearInput {
    Angle plane;
    double intensity = 1.0;
    friend bool operator==(const LinearInput &, const LinearInput &) = default;
};
struct PureKetInput {
    Angle plane;
    friend bool operator==(const PureKetInput &, const PureKetInput &) = default;
};

/// What was fed into the first filter of a cascade.
using InputDescription = std::variant<UnpolarizedInput, LinearInput, PureKetInput>;

/// Inputs the quantum engines accept. Unpolarized intensity is ignored.
using QuantumInput = std::variant<UnpolarizedInput, PureKetInput>;

struct StageRecord {
    int stage_index = 1;  // 1-based
    Angle axis;
    std::optional<double> classical_intensity_after;
    std::optional<double> stage_pass_probability;
    std::optional<double> cumulative_probability;

    friend bool operator==(const StageRecord &, const StageRecord &) = default;
};

struct CascadeTrace {
    InputDescription input;
    std::vector<StageRecord> stages;
    double final_transmitted_fraction = 1.0;

    /// The filters the trace was run through, in order.
    FilterStack stack() const;
};

/// Malus-law intensity cascade. An unpolarized beam loses half at the first filter.
CascadeTrace run_classical(const ClassicalBeam &input, const FilterStack &stack);

/// Exact Born-rule cascade.
///
/// Pure inputs alternate pass_probability and project. Unpolarized input is
/// evolved from the density matrix I/2 through the first filter, then as the
/// resulting pure state. Once a stage probability is exactly 0 every later
/// cumulative probability is 0 and no projection is attempted.
CascadeTrace run_quantum_exact(const QuantumInput &input, const FilterStack &stack);

struct ComparisonError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ComparisonReport {
    std::vector<double> stage_differences;
    double final_difference = 0.0;
    double max_difference = 0.0;
    double tolerance = 0.0;
    bool passed = true;
};

/// Compares classical transmitted fractions against quantum cumulative
/// probabilities stage by stage. Throws ComparisonError when the traces were
/// run on different stacks or on incompatible inputs.
ComparisonReport compare(const CascadeTrace &classical, const CascadeTrace &quantum, double tolerance);

/// Filters stepping from `start` to `end` in `n` equal increments, the first
/// one a full step past `start` and the last one exactly at `end`.
FilterStack staircase_stack(int n, Angle start, Angle end);

/// Exact quantum transmission of PureKet(start) through staircase_stack(n, start, end).
/// Throws std::invalid_argument for n < 1.
CascadeTrace staircase_transmission(int n, Angle start, Angle end);

}  // namespace polarcascade

#endif
