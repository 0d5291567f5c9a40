#pragma once

#include "zpm/codes.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zpm {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitInvalidInput = 2,
    kExitBudget = 3,
};

/// Counts for every odd n <= n_max coprime to p, ascending, computed on `jobs`
/// worker threads. The result does not depend on `jobs`.
std::vector<CodeCounts> compute_table(std::uint64_t p, unsigned m, std::size_t n_max,
                                      unsigned jobs = 1);

/// Fields in which a recomputed Z_8 row disagrees with the published table,
/// rendered as "field:paper=value". Empty when the row agrees or is not published.
std::vector<std::string> published_discrepancies(const CodeCounts& row);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zpm
