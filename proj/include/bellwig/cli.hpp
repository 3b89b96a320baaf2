#pragma once

// Command-line front end.
//
//   bellwig check-data FILE [--format json|csv]
//   bellwig simulate   --angles a,b,bp [--degrees] [--convention spin|optical]
//                      --n N [--seed S] --out PATH
//   bellwig analytic   --angles a,b,bp [--degrees] [--convention ...] [--mode paper|naive]
//                      [--format json|csv]
//   bellwig sweep      [--resolution R] [--convention ...] [--kind bell|wigner]
//                      [--mode paper|naive] [--out PATH] [--format text|json]
//   bellwig convergence --angles a,b,bp [--degrees] [--convention ...]
//                      [--n-list 100,10000,1000000] [--seed S] [--out PATH]
//                      [--format csv|json]
//
// Exit codes: 0 success, 1 violation found, 2 input error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bellwig/core.hpp"
#include "bellwig/sweep.hpp"

namespace bellwig::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitInputError = 2,
};

/// Runs the tool with `args` (excluding the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b,bp" into three angles in radians (degrees when `degrees`).
/// Throws InvalidValue on malformed input.
AngleConfig parse_angles(std::string_view text, AngleConvention convention, bool degrees);

/// Parses a comma-separated list of positive sample counts.
std::vector<std::size_t> parse_count_list(std::string_view text);

/// Shortest round-trip decimal form of `v`.
std::string format_double(double v);

/// Column header for sweep record CSV output.
inline constexpr std::string_view kSweepCsvHeader = "a,b,bp,kind,mode,lhs,rhs,margin";
/// Column header for convergence CSV output.
inline constexpr std::string_view kConvergenceCsvHeader = "n_samples,estimate,analytic,abs_error,std_error,seed";

void write_sweep_row(std::ostream& out, const SweepRecord& rec);
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records);

}  // namespace bellwig::cli
