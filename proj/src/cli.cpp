// SPDX-License-Identifier: Apache-2.0
#include "qtel/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

namespace qtel {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_double(std::string_view token) {
    token = trim(token);
    if (token.empty()) return std::nullopt;
    double value = 0.0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

} // namespace

std::optional<Complex> parse_complex_pair(std::string_view text) {
    std::string_view s = trim(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = trim(s.substr(1, s.size() - 2));
    }
    const std::size_t comma = s.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    if (s.find(',', comma + 1) != std::string_view::npos) return std::nullopt;
    const std::optional<double> re = parse_double(s.substr(0, comma));
    const std::optional<double> im = parse_double(s.substr(comma + 1));
    if (!re || !im) return std::nullopt;
    return Complex(*re, *im);
}

int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
    const std::optional<OutputFormat> format = parse_format(args.format);
    if (!format) {
        err << "error: unknown format '" << args.format
            << "' (expected text, csv or json)\n";
        return exit_code::kUsage;
    }

    std::vector<StageId> stages;
    if (args.stage == "all") {
        stages.assign(std::begin(kAllStages), std::end(kAllStages));
    } else if (const std::optional<StageId> stage = parse_stage(args.stage)) {
        stages.push_back(*stage);
    } else {
        err << "error: unknown stage '" << args.stage
            << "' (expected 1, 2, 3, 4, 4.5-1, 4.5-2, 5 or all)\n";
        return exit_code::kUsage;
    }

    const std::optional<Complex> a = parse_complex_pair(args.amp_a);
    const std::optional<Complex> b = parse_complex_pair(args.amp_b);
    if (!a || !b) {
        err << "error: amplitudes must be written as RE,IM with decimal "
               "numbers, e.g. 0.6,0\n";
        return exit_code::kUsage;
    }

    const double norm = std::sqrt(std::norm(*a) + std::norm(*b));
    if (std::abs(norm - 1.0) > tol::kStateNorm) {
        err << "error: |a|^2 + |b|^2 must be 1; the given amplitudes have norm "
            << norm << " (tolerance 1e-6)\n";
        return exit_code::kBadInput;
    }
    const InputAmplitudes amps(*a, *b);

    std::vector<StageReport> reports;
    reports.reserve(stages.size());
    for (StageId stage : stages) reports.push_back(stage_report(amps, stage));

    switch (*format) {
        case OutputFormat::text: write_reports_text(out, reports); break;
        case OutputFormat::csv: write_reports_csv(out, reports); break;
        case OutputFormat::json: write_reports_json(out, reports); break;
    }
    return exit_code::kOk;
}

int cmd_scan(const ScanArgs& args, std::ostream& err) {
    if (args.r_steps < 2 || args.theta_steps < 2) {
        err << "error: --r-steps and --theta-steps must be at least 2\n";
        return exit_code::kUsage;
    }
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << args.out_path << "' for writing\n";
        return exit_code::kIo;
    }
    write_scan_csv(file, fig3_scan(args.r_steps, args.theta_steps));
    file.flush();
    if (!file) {
        err << "error: writing '" << args.out_path << "' failed\n";
        return exit_code::kIo;
    }
    return exit_code::kOk;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.trials < 1) {
        err << "error: --trials must be at least 1\n";
        return exit_code::kUsage;
    }
    const std::vector<PropertyResult> results = run_property_suite(cfg);
    out << format_verify_summary(results);
    for (const PropertyResult& r : results) {
        if (!r.pass) return exit_code::kPropertyFailure;
    }
    return exit_code::kOk;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Stage-by-stage entropy analysis of single-qubit quantum "
                 "teleportation"};
    app.require_subcommand(1);

    ReportArgs report_args;
    CLI::App* report = app.add_subcommand(
        "report", "Entropies, relative entropies and classifications per stage");
    report->add_option("--amp-a", report_args.amp_a, "amplitude a as RE,IM")
        ->required();
    report->add_option("--amp-b", report_args.amp_b, "amplitude b as RE,IM")
        ->required();
    report->add_option("--stage", report_args.stage,
                       "1|2|3|4|4.5-1|4.5-2|5|all (default all)");
    report->add_option("--format", report_args.format,
                       "text|csv|json (default text)");

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand(
        "scan", "S(A,C) at both intermediate stages over an (r, theta) grid");
    scan->add_option("--r-steps", scan_args.r_steps, "grid points over r in [0,1]")
        ->required();
    scan->add_option("--theta-steps", scan_args.theta_steps,
                     "grid points over theta in [0,2pi]")
        ->required();
    scan->add_option("--out", scan_args.out_path, "output CSV path")->required();

    VerifyConfig verify_cfg{42, 1000};
    CLI::App* verify =
        app.add_subcommand("verify", "Run the seeded property suite");
    verify->add_option("--seed", verify_cfg.seed, "RNG seed (default 42)");
    verify->add_option("--trials", verify_cfg.trials,
                       "cases per randomized property (default 1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::kUsage;
    }

    try {
        if (report->parsed()) {
            return cmd_report(report_args, std::cout, std::cerr);
        }
        if (scan->parsed()) {
            return cmd_scan(scan_args, std::cerr);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_cfg, std::cout, std::cerr);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::kBadInput;
    }
    return exit_code::kUsage;
}

} // namespace qtel
