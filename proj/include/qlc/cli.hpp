#ifndef QLC_CLI_HPP
#define QLC_CLI_HPP

#include <string>

#include "json.hpp"

#include "qlc/cases.hpp"

namespace qlc::cli {

// Entry point used by the qlc binary: subcommands
//   classify | levels | mu | hopf-solve | scan | zeros | simulate | cycles | reproduce
// Usage errors exit 2, domain errors exit 1 (with a JSON error object on stderr).
int run(int argc, const char* const* argv);

// Runs the full reproduction pipeline (levels, coefficient spot checks,
// scans, zeros, optionally cycle location) for one benchmark case.
// Appends one PASS/FAIL/INFO line per check to `text`; `all_pass` reports
// whether every non-INFO check passed.
nlohmann::json reproduce_case(const CaseSpec& spec, bool with_cycles, double rel_tol,
                              int jobs, std::string& text, bool& all_pass);

} // namespace qlc::cli

#endif
