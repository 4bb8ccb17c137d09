#pragma once

#include <vector>

#include "tdrefine/decomposition.hpp"
#include "tdrefine/graph.hpp"
#include "tdrefine/rational.hpp"

namespace tdr {
namespace oracle {

// Exact routines refuse inputs above the cap rather than approximating.
struct OracleBudget {
    int max_vertices = 18;
};

struct ExactTreewidth {
    int width = -1;  // -1 for the empty graph
    TreeDecomposition witness;
};

// Exact treewidth by dynamic programming over vertex subsets of elimination
// orderings, plus a witness decomposition of that width. The default entry
// point runs the subset layers with OpenMP; the serial twin is the reference.
ExactTreewidth exact_treewidth(const Graph& g, const OracleBudget& budget = {});
ExactTreewidth exact_treewidth_serial(const Graph& g, const OracleBudget& budget = {});

// Definitional re-checks, written naively and sharing no helpers with the
// fast-path validators.
bool verify_decomposition_bruteforce(const Graph& g, const TreeDecomposition& td);
bool verify_separator(const Graph& g, const Weighting& gamma, const std::vector<int>& x_set,
                      const Rat& bound);
int oracle_spread(const TreeDecomposition& td, int v);
bool oracle_is_slick(const Graph& g, const TreeDecomposition& td, int s);

// Greedy minimum-fill elimination; valid decomposition, no optimality claim.
TreeDecomposition min_fill_heuristic(const Graph& g);

// Width witness used by the CLI: exact under the budget, min-fill beyond it.
TreeDecomposition width_witness(const Graph& g, const OracleBudget& budget = {});

}  // namespace oracle
}  // namespace tdr
