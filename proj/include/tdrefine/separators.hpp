#pragma once

#include <vector>

#include "tdrefine/decomposition.hpp"
#include "tdrefine/graph.hpp"
#include "tdrefine/rational.hpp"

namespace tdr {

// Separator X plus subgraphs G_1..G_m with pairwise intersection exactly X.
struct Separation {
    std::vector<int> x_set;    // sorted
    std::vector<Graph> parts;  // G_i = G[V(C_i) ∪ X]
    int m() const { return static_cast<int>(parts.size()); }
};

// Structural invariants: parts cover g edge-exactly and every pairwise
// vertex intersection equals x_set. m == 0 is legal only when V(g) == x_set
// is empty-outside.
bool check_separation(const Graph& g, const Separation& sep);

// Z of at most q nodes of td's tree such that every component of
// g - union of bags over Z weighs at most gamma(g)/(q+1). Follows the
// inductive peeling: deepest overweight subtree root first (ties to the
// smaller node id), then recurse on the remainder with q-1.
std::vector<int> tree_dec_sep(const Graph& g, const Weighting& gamma,
                              const TreeDecomposition& td, int q);

// Union of the bags chosen by tree_dec_sep; |X| <= q(k+1) for td of width k.
std::vector<int> treewidth_sep(const Graph& g, const Weighting& gamma,
                               const TreeDecomposition& td, int q);

// treewidth_sep under the 0/1 weighting of s_set: every component of g - X
// keeps at most |S|/(q+1) vertices of s_set.
std::vector<int> set_sep(const Graph& g, const TreeDecomposition& td,
                         const std::vector<int>& s_set, int q);

// Groups the components of g - x_set (each of weight <= w) into
// pseudo-components of weight <= w with m <= ceil(2*gamma(g-X)/w) - 1 and the
// minimality certificate gamma(C_i) + gamma(C_j) > w for every pair.
Separation pseudo_components(const Graph& g, const Weighting& gamma,
                             const std::vector<int>& x_set, const Rat& w);

// q := ceil(1/beta)-1, w := beta*gamma(g); treewidth_sep then
// pseudo_components. |X| <= (ceil(1/beta)-1)(k+1), m <= ceil(2/beta)-1,
// gamma(G_i - X) <= beta*gamma(g).
Separation gen_separation(const Graph& g, const Weighting& gamma, const TreeDecomposition& td,
                          const Rat& beta);

// gen_separation under the 0/1 weighting of s_set; pads to m == 2 with
// G[x_set] so two-part callers always get two parts.
Separation separation_set_sep(const Graph& g, const TreeDecomposition& td,
                              const std::vector<int>& s_set, const Rat& beta);

}  // namespace tdr
