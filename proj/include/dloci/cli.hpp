#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dloci/format.hpp"
#include "dloci/manifest.hpp"

namespace dloci {

enum ExitCode : int { ExitOk = 0, ExitDiscrepancy = 1, ExitInputError = 2, ExitDomainError = 3 };

/// The numbers behind `dual`. With manifest.symbolic the rows keep kappa as
/// a symbol; the expansion is always for the concrete kappa.
DualReport compute_dual(const Manifest& manifest);

/// Parses "a..b" or a single integer "a" into an inclusive range.
std::pair<std::int64_t, std::int64_t> parse_int_range(const std::string& text);

/// Runs the command line `args` (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dloci
