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

#include "polarcascade/engines.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace polarcascade {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

InputDescription describe(const QuantumInput &input) {
    return std::visit([](const auto &in) -> InputDescription { return in; }, input);
}

const char *kind_name(const InputDescription &input) {
    return std::visit(
        overloaded{
            [](const UnpolarizedInput &) { return "unpolarized"; },
            [](const LinearInput &) { return "linear"; },
            [](const PureKetInput &) { return "pure-ket"; },
        },
        input);
}

// Classical and quantum descriptions of the same physical input.
bool same_input(const InputDescription &classical, const InputDescription &quantum) {
    if (std::holds_alternative<UnpolarizedInput>(classical)) {
        return std::holds_alternative<UnpolarizedInput>(quantum);
    }
    const auto *lin = std::get_if<LinearInput>(&classical);
    const auto *pure = std::get_if<PureKetInput>(&quantum);
    return lin != nullptr && pure != nullptr && lin->plane == pure->plane;
}

}  // namespace

FilterStack CascadeTrace::stack() const {
    FilterStack out;
    out.reserve(stages.size());
    for (const auto &s : stages) {
        out.push_back(Polarizer{s.axis});
    }
    return out;
}

CascadeTrace run_classical(const ClassicalBeam &input, const FilterStack &stack) {
    CascadeTrace trace;
    if (input.is_unpolarized()) {
        trace.input = UnpolarizedInput{input.intensity()};
    } else {
        trace.input = LinearInput{*input.plane(), input.intensity()};
    }
    trace.stages.reserve(stack.size());

    ClassicalBeam beam = input;
    int index = 1;
    for (const auto &p : stack) {
        beam = classical_transmit(beam, p);
        StageRecord rec;
        rec.stage_index = index++;
        rec.axis = p.axis;
        rec.classical_intensity_after = beam.intensity();
        trace.stages.push_back(rec);
    }
    if (stack.empty()) {
        trace.final_transmitted_fraction = 1.0;
    } else if (input.intensity() == 0) {
        trace.final_transmitted_fraction = 0.0;
    } else {
        trace.final_transmitted_fraction = beam.intensity() / input.intensity();
    }
    return trace;
}

CascadeTrace run_quantum_exact(const QuantumInput &input, const FilterStack &stack) {
    CascadeTrace trace;
    trace.input = describe(input);
    trace.stages.reserve(stack.size());

    std::optional<PolarizationKet> state;
    if (const auto *pure = std::get_if<PureKetInput>(&input)) {
        state = ket(pure->plane);
    }

    double cumulative = 1.0;
    bool extinguished = false;
    int index = 1;
    for (const auto &p : stack) {
        StageRecord rec;
        rec.stage_index = index++;
        rec.axis = p.axis;
        if (extinguished) {
            // No surviving state to measure, so no conditional probability.
            rec.cumulative_probability = 0.0;
            trace.stages.push_back(rec);
            continue;
        }

        double prob;
        if (state.has_value()) {
            prob = pass_probability(*state, p);
        } else {
            // Still the mixed input; only reached at the first filter.
            DensityMatrix2 rho = DensityMatrix2::maximally_mixed();
            prob = density_pass_probability(rho, p);
        }

        cumulative *= prob;
        rec.stage_pass_probability = prob;
        rec.cumulative_probability = cumulative;
        trace.stages.push_back(rec);

        if (prob == 0.0) {
            extinguished = true;
            cumulative = 0.0;
            continue;
        }
        // Post-measurement state is the filter axis. project() refuses
        // probabilities under its floor, which can still be positive here.
        state = ket(p.axis);
    }
    trace.final_transmitted_fraction = stack.empty() ? 1.0 : cumulative;
    return trace;
}

ComparisonReport compare(const CascadeTrace &classical, const CascadeTrace &quantum, double tolerance) {
    if (!same_input(classical.input, quantum.input)) {
        throw ComparisonError(std::string("input mismatch: classical ") + kind_name(classical.input) + " vs quantum " +
                              kind_name(quantum.input));
    }
    if (classical.stack() != quantum.stack()) {
        throw ComparisonError("stack mismatch: classical and quantum traces were run on different filters");
    }

    double input_intensity = std::visit(
        overloaded{
            [](const UnpolarizedInput &in) { return in.intensity; },
            [](const LinearInput &in) { return in.intensity; },
            [](const PureKetInput &) { return 1.0; },
        },
        classical.input);

    ComparisonReport report;
    report.tolerance = tolerance;
    for (size_t k = 0; k < classical.stages.size(); ++k) {
        const auto &c = classical.stages[k];
        const auto &q = quantum.stages[k];
        if (!c.classical_intensity_after || !q.cumulative_probability) {
            throw ComparisonError("stage " + std::to_string(k + 1) + " lacks a classical intensity or quantum probability");
        }
        double fraction = input_intensity == 0 ? 0.0 : *c.classical_intensity_after / input_intensity;
        double diff = std::abs(fraction - *q.cumulative_probability);
        report.stage_differences.push_back(diff);
        report.max_difference = std::max(report.max_difference, diff);
    }
    report.final_difference = std::abs(classical.final_transmitted_fraction - quantum.final_transmitted_fraction);
    report.max_difference = std::max(report.max_difference, report.final_difference);
    report.passed = report.max_difference <= tolerance;
    return report;
}

FilterStack staircase_stack(int n, Angle start, Angle end) {
    if (n < 1) {
        throw std::invalid_argument("staircase needs at least one filter, got n = " + std::to_string(n));
    }
    double step = (end.radians() - start.radians()) / n;
    FilterStack stack;
    stack.reserve(static_cast<size_t>(n));
    for (int k = 1; k < n; ++k) {
        stack.push_back(Polarizer{Angle::from_radians(start.radians() + k * step)});
    }
    stack.push_back(Polarizer{end});
    return stack;
}

CascadeTrace staircase_transmission(int n, Angle start, Angle end) {
    return run_quantum_exact(PureKetInput{start}, staircase_stack(n, start, end));
}

}  // namespace polarcascade
