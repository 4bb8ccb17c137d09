#pragma once

namespace tdr {

// Per-run case counters, surfaced in stats output.
struct BuildCounters {
    long long alpha_beta_base = 0;
    long long alpha_beta_recursive = 0;
    long long heart_case1 = 0;
    long long heart_case2 = 0;
    long long heart_case3 = 0;
};

}  // namespace tdr
