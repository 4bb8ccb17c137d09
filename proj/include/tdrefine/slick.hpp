#pragma once

#include <vector>

#include "tdrefine/counters.hpp"
#include "tdrefine/decomposition.hpp"
#include "tdrefine/graph.hpp"

namespace tdr {

// Inductive construction of a rooted slick decomposition whose root bag
// contains r_seed. Requires ell >= 2*(width(td)+1) and t >= 2*ell so that the
// threaded decomposition can answer every separator query, and
// |r_seed| <= 2t+2*ell. Guarantees bags of size at most 2t+3*ell, tree degree
// at most 4+ceil(4*ell/t), root degree at most 3+ceil(4*ell/t).
TreeDecomposition alpha_beta(const Graph& g, const TreeDecomposition& td, int ell, int t,
                             const std::vector<int>& r_seed, BuildCounters* counters = nullptr);

// Slick decomposition with width at most 14k+13 and degree at most 6, for
// k = width(td). Self-certifies validity, slickness, and all bounds.
TreeDecomposition slick_main(const Graph& g, const TreeDecomposition& td,
                             BuildCounters* counters = nullptr);

}  // namespace tdr
