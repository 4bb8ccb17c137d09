#pragma once

#include <vector>

#include "tdrefine/counters.hpp"
#include "tdrefine/decomposition.hpp"
#include "tdrefine/graph.hpp"

namespace tdr {

// Core recursion: a (d-1)-slick weak decomposition of g, rooted at the
// distinguished node z whose bag contains s_set. Guarantees bags <= 18kd,
// tree degree <= 6d, order <= n/2k, |B_z| <= 3|S|/2 - 2k and
// deg(z) <= |S|/2k - 1. Requires width(td) <= k-1, d >= 2 and
// 4k <= |s_set| <= 12kd.
TreeDecomposition heart(const Graph& g, const TreeDecomposition& td,
                        const std::vector<int>& s_set, int k, int d,
                        BuildCounters* counters = nullptr);

// (d-1)-slick weak decomposition with width < 18kd, degree <= 6d, order <=
// max(n/2k, 1) and spread <= 1 + deg(v)/(d-1).
TreeDecomposition weak_tree_decomp_gen(const Graph& g, const TreeDecomposition& td, int k, int d,
                                       BuildCounters* counters = nullptr);

// Promotes a weak decomposition of width k to a strong one on the same tree
// with width at most 2k+1; slickness carries over.
TreeDecomposition weak_to_strong(const Graph& g, const TreeDecomposition& wtd);

// Strong, slick, width <= 72k+1, degree <= 12, order <= max(n/2k, 1),
// spread <= deg(v)+1. Requires width(td) <= k-1.
TreeDecomposition spread_small_degree(const Graph& g, const TreeDecomposition& td, int k,
                                      BuildCounters* counters = nullptr);

// Genuine tree-partition via d = max_degree(g)+2: width <= 18k(Δ+2), tree
// degree <= 6(Δ+2), order <= max(n/2k, 1). Requires width(td) <= k-1.
TreeDecomposition tree_partition(const Graph& g, const TreeDecomposition& td, int k,
                                 BuildCounters* counters = nullptr);

}  // namespace tdr
