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

#include "polarcascade/cli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace polarcascade {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view kSpace = " \t\r\n";
    size_t b = s.find_first_not_of(kSpace);
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(kSpace);
    return s.substr(b, e - b + 1);
}

std::string in_quotes(std::string_view s) {
    return "'" + std::string(s) + "'";
}

double parse_real(std::string_view token, std::string_view what) {
    std::string_view t = trim(token);
    double value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) {
        throw UsageError("malformed " + std::string(what) + " " + in_quotes(token));
    }
    return value;
}

uint64_t parse_unsigned(std::string_view token, std::string_view what) {
    std::string_view t = trim(token);
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw UsageError("malformed " + std::string(what) + " " + in_quotes(token));
    }
    return value;
}

std::vector<double> parse_angle_list(std::string_view list) {
    std::vector<double> out;
    if (trim(list).empty()) {
        return out;
    }
    size_t start = 0;
    while (true) {
        size_t comma = list.find(',', start);
        std::string_view item = list.substr(start, comma == std::string_view::npos ? comma : comma - start);
        out.push_back(parse_real(item, "angle"));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read stack file " + in_quotes(path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char *mode_name(Mode m) {
    switch (m) {
        case Mode::classical:
            return "classical";
        case Mode::quantum:
            return "quantum";
        case Mode::mc:
            return "mc";
        case Mode::compare:
            return "compare";
    }
    return "?";
}

// Shortest string that parses back to exactly `value`.
std::string exact_number(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string cell(const std::optional<double> &v) {
    return v ? format_number(*v) : "-";
}

std::string describe_input(const InputDescription &input) {
    if (const auto *u = std::get_if<UnpolarizedInput>(&input)) {
        return "unpolarized input, intensity " + format_number(u->intensity);
    }
    if (const auto *l = std::get_if<LinearInput>(&input)) {
        return "linear input at " + format_number(l->plane.degrees()) + " deg, intensity " + format_number(l->intensity);
    }
    return "pure state at " + format_number(std::get<PureKetInput>(input).plane.degrees()) + " deg";
}

constexpr std::string_view kTsvHeader = "stage\taxis_deg\tclassical_intensity\tstage_prob\tcumulative_prob\n";

struct Row {
    std::string stage, axis, intensity, stage_prob, cumulative;
};

void write_rows(std::ostringstream &out, const std::vector<Row> &rows, OutputFormat format) {
    if (format == OutputFormat::tsv) {
        out << kTsvHeader;
        for (const auto &r : rows) {
            out << r.stage << '\t' << r.axis << '\t' << r.intensity << '\t' << r.stage_prob << '\t' << r.cumulative
                << '\n';
        }
        return;
    }
    out << std::left << std::setw(7) << "stage" << std::setw(16) << "axis (deg)" << std::setw(20) << "intensity"
        << std::setw(20) << "stage prob" << "cumulative prob\n";
    for (const auto &r : rows) {
        out << std::setw(7) << r.stage << std::setw(16) << r.axis << std::setw(20) << r.intensity << std::setw(20)
            << r.stage_prob << r.cumulative << '\n';
    }
}

}  // namespace

std::vector<double> parse_stack_text(std::string_view text) {
    std::vector<double> out;
    size_t line_start = 0;
    while (line_start <= text.size()) {
        size_t nl = text.find('\n', line_start);
        std::string_view line = text.substr(line_start, nl == std::string_view::npos ? nl : nl - line_start);
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (!trim(line).empty()) {
            out.push_back(parse_real(line, "angle in stack file"));
        }
        if (nl == std::string_view::npos) {
            break;
        }
        line_start = nl + 1;
    }
    return out;
}

ExperimentSpec parse_spec(std::span<const std::string> tokens, std::optional<std::string_view> stack_file_text) {
    CLI::App app{"Light transmission through ideal linear polarizer stacks", "polarcascade"};
    std::string filters, stack_file, input, intensity, mode, photons, seed, tolerance, format, workers;
    auto *filters_opt = app.add_option("--filters", filters, "Comma-separated filter axes in degrees");
    auto *stack_opt = app.add_option("--stack-file", stack_file, "File with one filter axis (degrees) per line");
    auto *input_opt = app.add_option("--input", input, "unpolarized | linear:<deg>");
    auto *intensity_opt = app.add_option("--intensity", intensity, "Input intensity (> 0, default 1)");
    auto *mode_opt = app.add_option("--mode", mode, "classical | quantum | mc | compare");
    auto *photons_opt = app.add_option("--photons", photons, "Monte Carlo photon count (default 1000000)");
    auto *seed_opt = app.add_option("--seed", seed, "Monte Carlo seed, unsigned 64-bit (default 42)");
    auto *tolerance_opt = app.add_option("--tolerance", tolerance, "Compare-mode tolerance (default 1e-9)");
    auto *format_opt = app.add_option("--format", format, "tsv | text");
    auto *workers_opt = app.add_option("--workers", workers, "Monte Carlo threads, 0 = all cores");

    std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw;
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    ExperimentSpec spec;
    if (*filters_opt) {
        spec.filters_deg = parse_angle_list(filters);
    } else if (*stack_opt) {
        spec.filters_deg = parse_stack_text(stack_file_text ? std::string(*stack_file_text) : read_file(stack_file));
    }
    if (*input_opt) {
        if (input == "unpolarized") {
            spec.linear_input_deg.reset();
        } else if (input.starts_with("linear:")) {
            spec.linear_input_deg = parse_real(std::string_view(input).substr(7), "input angle");
        } else {
            throw UsageError("unknown input " + in_quotes(input) + " (expected unpolarized or linear:<deg>)");
        }
    }
    if (*intensity_opt) {
        spec.intensity = parse_real(intensity, "intensity");
        if (!(spec.intensity > 0)) {
            throw UsageError("intensity must be positive, got " + in_quotes(intensity));
        }
    }
    if (*mode_opt) {
        if (mode == "classical") {
            spec.mode = Mode::classical;
        } else if (mode == "quantum") {
            spec.mode = Mode::quantum;
        } else if (mode == "mc") {
            spec.mode = Mode::mc;
        } else if (mode == "compare") {
            spec.mode = Mode::compare;
        } else {
            throw UsageError("unknown mode " + in_quotes(mode));
        }
    }
    if (*photons_opt) {
        spec.photons = parse_unsigned(photons, "photon count");
        if (spec.photons < 1) {
            throw UsageError("photon count must be at least 1, got " + in_quotes(photons));
        }
    }
    if (*seed_opt) {
        spec.seed = parse_unsigned(seed, "seed");
    }
    if (*tolerance_opt) {
        spec.tolerance = parse_real(tolerance, "tolerance");
        if (spec.tolerance < 0) {
            throw UsageError("tolerance must be non-negative, got " + in_quotes(tolerance));
        }
    }
    if (*format_opt) {
        if (format == "tsv") {
            spec.format = OutputFormat::tsv;
        } else if (format == "text") {
            spec.format = OutputFormat::text;
        } else {
            throw UsageError("unknown format " + in_quotes(format));
        }
    }
    if (*workers_opt) {
        uint64_t w = parse_unsigned(workers, "worker count");
        if (w > 4096) {
            throw UsageError("worker count too large " + in_quotes(workers));
        }
        spec.workers = static_cast<unsigned>(w);
    }
    return spec;
}

std::vector<std::string> canonical_flags(const ExperimentSpec &spec) {
    std::vector<std::string> out;
    if (!spec.filters_deg.empty()) {
        std::string list;
        for (size_t i = 0; i < spec.filters_deg.size(); ++i) {
            if (i > 0) {
                list += ',';
            }
            list += exact_number(spec.filters_deg[i]);
        }
        out.push_back("--filters=" + list);
    }
    out.push_back("--input");
    out.push_back(spec.linear_input_deg ? "linear:" + exact_number(*spec.linear_input_deg) : "unpolarized");
    out.push_back("--intensity=" + exact_number(spec.intensity));
    out.push_back("--mode");
    out.push_back(mode_name(spec.mode));
    out.push_back("--photons");
    out.push_back(std::to_string(spec.photons));
    out.push_back("--seed");
    out.push_back(std::to_string(spec.seed));
    out.push_back("--tolerance=" + exact_number(spec.tolerance));
    out.push_back("--format");
    out.push_back(spec.format == OutputFormat::tsv ? "tsv" : "text");
    out.push_back("--workers");
    out.push_back(std::to_string(spec.workers));
    return out;
}

std::string format_number(double value) {
    if (value == 0) {
        return "0";  // also folds -0
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string render_trace(const CascadeTrace &trace, OutputFormat format) {
    std::vector<Row> rows;
    for (const auto &s : trace.stages) {
        rows.push_back({std::to_string(s.stage_index), format_number(s.axis.degrees()),
                        cell(s.classical_intensity_after), cell(s.stage_pass_probability),
                        cell(s.cumulative_probability)});
    }
    std::ostringstream out;
    if (format == OutputFormat::text) {
        out << describe_input(trace.input) << ", " << trace.stages.size() << " filter(s)\n";
    }
    write_rows(out, rows, format);
    if (format == OutputFormat::tsv) {
        out << "# final_fraction=" << format_number(trace.final_transmitted_fraction) << '\n';
    } else {
        out << "transmitted fraction: " << format_number(trace.final_transmitted_fraction) << '\n';
    }
    return out.str();
}

std::string render_trace(const MonteCarloReport &report, OutputFormat format) {
    std::vector<Row> rows;
    const double n = static_cast<double>(report.photon_count);
    uint64_t previous = report.photon_count;
    for (size_t k = 0; k < report.stack.size(); ++k) {
        uint64_t alive = report.per_stage_survivor_counts[k];
        std::optional<double> conditional;
        if (previous > 0) {
            conditional = static_cast<double>(alive) / static_cast<double>(previous);
        }
        rows.push_back({std::to_string(k + 1), format_number(report.stack[k].axis.degrees()), "-", cell(conditional),
                        format_number(static_cast<double>(alive) / n)});
        previous = alive;
    }
    std::ostringstream out;
    if (format == OutputFormat::text) {
        out << "Monte Carlo, " << report.photon_count << " photons, seed " << report.seed << ", "
            << report.stack.size() << " filter(s)\n";
    }
    write_rows(out, rows, format);
    const auto &ci = report.confidence_interval_95;
    if (format == OutputFormat::tsv) {
        out << "# final_fraction=" << format_number(report.estimate) << '\n';
        out << "# estimate=" << format_number(report.estimate) << " stderr=" << format_number(report.standard_error)
            << " ci95=" << format_number(ci.lo) << ',' << format_number(ci.hi) << " seed=" << report.seed << '\n';
    } else {
        out << "transmitted: " << report.transmitted_count << " of " << report.photon_count << '\n';
        out << "estimate: " << format_number(report.estimate) << " +/- " << format_number(report.standard_error)
            << " (95% Wilson interval [" << format_number(ci.lo) << ", " << format_number(ci.hi) << "])\n";
    }
    return out.str();
}

std::string render_comparison(const CascadeTrace &classical, const CascadeTrace &quantum,
                              const ComparisonReport &report, OutputFormat format) {
    std::vector<Row> rows;
    for (size_t k = 0; k < classical.stages.size(); ++k) {
        const auto &c = classical.stages[k];
        const auto &q = quantum.stages[k];
        rows.push_back({std::to_string(c.stage_index), format_number(c.axis.degrees()),
                        cell(c.classical_intensity_after), cell(q.stage_pass_probability),
                        cell(q.cumulative_probability)});
    }
    std::ostringstream out;
    if (format == OutputFormat::text) {
        out << "classical vs quantum, " << describe_input(classical.input) << ", " << classical.stages.size()
            << " filter(s)\n";
    }
    write_rows(out, rows, format);
    const char *verdict = report.passed ? "pass" : "fail";
    if (format == OutputFormat::tsv) {
        out << "# final_fraction=" << format_number(classical.final_transmitted_fraction) << '\n';
        out << "# quantum_final_fraction=" << format_number(quantum.final_transmitted_fraction)
            << " max_diff=" << format_number(report.max_difference) << " tolerance=" << format_number(report.tolerance)
            << " result=" << verdict << '\n';
    } else {
        out << "classical fraction: " << format_number(classical.final_transmitted_fraction) << '\n';
        out << "quantum probability: " << format_number(quantum.final_transmitted_fraction) << '\n';
        out << "max difference " << format_number(report.max_difference) << " (tolerance "
            << format_number(report.tolerance) << "): " << verdict << '\n';
    }
    return out.str();
}

int run_cli(std::span<const std::string> tokens, std::ostream &out, std::ostream &err) {
    ExperimentSpec spec;
    try {
        spec = parse_spec(tokens);
    } catch (const CLI::CallForHelp &) {
        out << "usage: polarcascade [--filters a,b,c | --stack-file path] [--input unpolarized|linear:<deg>]\n"
               "                    [--intensity r] [--mode classical|quantum|mc|compare] [--photons n]\n"
               "                    [--seed u64] [--tolerance r] [--format tsv|text] [--workers n]\n";
        return exit_code::success;
    } catch (const UsageError &e) {
        err << "polarcascade: " << e.what() << "\n";
        return exit_code::usage;
    }

    try {
        FilterStack stack = stack_from_degrees(spec.filters_deg);
        QuantumInput qinput = UnpolarizedInput{spec.intensity};
        std::optional<ClassicalBeam> beam;
        if (spec.linear_input_deg) {
            Angle plane = Angle::from_degrees(*spec.linear_input_deg);
            qinput = PureKetInput{plane};
            beam = ClassicalBeam::linear(plane, spec.intensity);
        } else {
            beam = ClassicalBeam::unpolarized(spec.intensity);
        }

        switch (spec.mode) {
            case Mode::classical:
                out << render_trace(run_classical(*beam, stack), spec.format);
                return exit_code::success;
            case Mode::quantum:
                out << render_trace(run_quantum_exact(qinput, stack), spec.format);
                return exit_code::success;
            case Mode::mc: {
                MonteCarloConfig config(spec.photons, spec.seed, qinput, stack);
                out << render_trace(run_monte_carlo(config, spec.workers), spec.format);
                return exit_code::success;
            }
            case Mode::compare: {
                CascadeTrace c = run_classical(*beam, stack);
                CascadeTrace q = run_quantum_exact(qinput, stack);
                ComparisonReport report = compare(c, q, spec.tolerance);
                out << render_comparison(c, q, report, spec.format);
                return report.passed ? exit_code::success : exit_code::compare_failed;
            }
        }
    } catch (const std::exception &e) {
        err << "polarcascade: " << e.what() << "\n";
    }
    return exit_code::usage;
}

}  // namespace polarcascade
