#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace soliton::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kConfigError = 2,
    kNumericalError = 3,
};

// Each command writes its primary output to `out` and diagnostics to `err`
// and returns the exit status. Library errors propagate as exceptions;
// run() maps them to statuses.
int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_periods(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tau(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_field(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line: `soliton <command> [--config path] [overrides]`.
/// Output goes to `out` unless the config names an output file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace soliton::cli
