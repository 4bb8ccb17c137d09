#pragma once

#include <utility>
#include <vector>

#include "tdrefine/counters.hpp"
#include "tdrefine/decomposition.hpp"
#include "tdrefine/graph.hpp"
#include "tdrefine/tree.hpp"

namespace tdr {

// Ordered sequence of pairwise edge-disjoint subtrees covering a host tree.
// The host root lies in subtrees[0]; every later subtree meets the union of
// earlier ones exactly in its own root.
struct Division {
    std::vector<std::vector<int>> subtrees;  // sorted node sets
    std::vector<int> roots;
    int m() const { return static_cast<int>(subtrees.size()); }
};

bool check_division(const RootedTree& tree, const Division& div);

// Subtree T' with |V(T')| in [k, 2k-2] whose root is its only node possibly
// adjacent to the rest. Returns (sorted node set, root).
std::pair<std::vector<int>, int> find_subtree(const RootedTree& tree, int k);

// Division with every part in the [k, 2k-2] window and m <= |V(T)|/(k-1),
// built by repeated find_subtree peeling. When peeling would strand a
// remainder below k (possible: the window is infeasible for some trees), an
// exhaustive search tries every single-attachment subtree; failing that, the
// root part alone is emitted undersized.
Division partition_tree(const RootedTree& tree, int k);

// Weighted analogue: node weights in {1..k-1}, gamma(T) >= 2k-2. Peeled parts
// satisfy gamma(T') in [k, 4k-6] and gamma(T'-v) in [k-1, 3k-5].
std::pair<std::vector<int>, int> find_weighted_subtree(const RootedTree& tree,
                                                       const std::vector<long long>& gamma,
                                                       int k);

// Division with gamma(T_i) <= 5k+2 for every part, gamma(T_i - r_i) in
// [k-1, 3k-5] for i >= 2, and m <= gamma(T)/(k-1). The root part is split
// further until its below-root weight is at most 3k-5 (the quotient width
// count needs this on every part).
Division partition_weighted_tree(const RootedTree& tree, const std::vector<long long>& gamma,
                                 int k);

// Quotient of td with respect to a division of its tree: bag i is the union
// of bags over T_i minus the root bag (part 0 keeps its root bag). The index
// tree F makes part i a child of the smallest earlier part containing r_i.
TreeDecomposition quotient(const TreeDecomposition& td, const Division& div);

// Width at most 3k-1, order at most max(n/k - 1, 1): smooth normalization,
// division with window k+1, quotient.
TreeDecomposition small_tree_decomp(const Graph& g, const TreeDecomposition& td, int k);

// From a slick decomposition of width <= l-2 on a graph with >= 2l-2
// vertices: slick decomposition of width <= 4l-7 and order <= n/(l-1).
TreeDecomposition make_small(const Graph& g, const TreeDecomposition& slick_td, int ell);

// Width <= 56k+58, order <= max(n/(14k+14), 1), slick, spread <= deg+1.
TreeDecomposition slick_and_small(const Graph& g, const TreeDecomposition& td, int k,
                                  BuildCounters* counters = nullptr);

}  // namespace tdr
