#ifndef QLC_CASES_HPP
#define QLC_CASES_HPP

#include <vector>

#include "qlc/model.hpp"

namespace qlc {

// One expected expansion coefficient of a benchmark case.  When the source
// value is known to disagree with the closed-form evaluation, `info_only`
// carries the differing value: reproduction reports it as INFO, never FAIL.
struct MuSpot {
    const char* name;
    int row;    // 0: coefficients at h00, 1: coefficients at h10
    int index;  // 0..3
    double expected;
    bool info_only = false;
    double conflicting_value = 0.0;
};

struct MelnikovSpot {
    Region region;
    double h;
    double expected;  // value of M/a10
    double abs_tol;
};

struct ZeroSpec {
    Region region;
    double scan_lo, scan_hi;      // scan window (exactly one sign change expected)
    double expect_lo, expect_hi;  // containment interval for the zero
    bool tight;  // tight bracket: also compare against the midpoint to 1e-6
};

// Benchmark parameter sets A-E with their expected critical levels,
// expansion coefficients, Melnikov spot values and zero locations.
struct CaseSpec {
    char label;
    double a1, a4;
    double b01_over_a10, b11_over_a10;
    int n0, n1;        // realized small-cycle distribution
    double h00, h10;   // closed-form critical levels
    std::vector<MuSpot> mu_spots;
    std::vector<MelnikovSpot> melnikov_spots;
    std::vector<ZeroSpec> zeros;
};

const std::vector<CaseSpec>& case_table();

// Throws qlc::Error for an unknown label.
const CaseSpec& case_by_label(char label);

} // namespace qlc

#endif
