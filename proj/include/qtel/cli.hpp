// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. The cmd_* functions carry the full behaviour and
// write to caller-supplied streams so they are directly testable; run_cli
// only parses argv and dispatches.
//
// Exit codes: 0 ok, 1 property failure, 2 usage error, 3 bad input value,
// 4 I/O error.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qtel/report_io.hpp"
#include "qtel/verify.hpp"

namespace qtel {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBadInput = 3;
inline constexpr int kIo = 4;
} // namespace exit_code

/// Parse "re,im" (optional surrounding parentheses, decimal notation).
std::optional<Complex> parse_complex_pair(std::string_view text);

struct ReportArgs {
    std::string amp_a;
    std::string amp_b;
    std::string stage = "all";
    std::string format = "text";
};

int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err);

struct ScanArgs {
    int r_steps = 0;
    int theta_steps = 0;
    std::string out_path;
};

int cmd_scan(const ScanArgs& args, std::ostream& err);

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);

/// Full argv interface; returns the process exit code.
int run_cli(int argc, const char* const* argv);

} // namespace qtel
