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

#ifndef POLARCASCADE_CLI_H
#define POLARCASCADE_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polarcascade/engines.h"
#include "polarcascade/monte_carlo.h"

namespace polarcascade {

enum class Mode { classical, quantum, mc, compare };
enum class OutputFormat { tsv, text };

/// One experiment as described on the command line.
struct ExperimentSpec {
    /// Empty for unpolarized input, otherwise the linear input plane in degrees.
    std::optional<double> linear_input_deg;
    double intensity = 1.0;
    std::vector<double> filters_deg;
    Mode mode = Mode::classical;
    uint64_t photons = 1'000'000;
    uint64_t seed = 42;
    double tolerance = 1e-9;
    OutputFormat format = OutputFormat::tsv;
    /// Monte Carlo threads; 0 means hardware concurrency. Does not affect output.
    unsigned workers = 0;

    friend bool operator==(const ExperimentSpec &, const ExperimentSpec &) = default;
};

/// Bad command line or unreadable input. what() names the offending token.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int compare_failed = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Parses a stack file: one angle in degrees per line, `#` starts a comment,
/// blank lines are skipped.
std::vector<double> parse_stack_text(std::string_view text);

/// Parses flag tokens (without the program name). When `--stack-file` is
/// given, `stack_file_text` supplies its contents if present, otherwise the
/// file is read from disk. `--filters` takes precedence over the file.
ExperimentSpec parse_spec(std::span<const std::string> tokens,
                          std::optional<std::string_view> stack_file_text = std::nullopt);

/// Flag tokens that parse_spec maps back to `spec`.
std::vector<std::string> canonical_flags(const ExperimentSpec &spec);

/// 12 significant digits, trailing zeros dropped, locale independent.
std::string format_number(double value);

std::string render_trace(const CascadeTrace &trace, OutputFormat format);
std::string render_trace(const MonteCarloReport &report, OutputFormat format);
/// Side-by-side classical intensities and quantum probabilities with the verdict.
std::string render_comparison(const CascadeTrace &classical, const CascadeTrace &quantum,
                              const ComparisonReport &report, OutputFormat format);

/// Parses, runs and renders. Returns the process exit code.
int run_cli(std::span<const std::string> tokens, std::ostream &out, std::ostream &err);

}  // namespace polarcascade

#endif
