#pragma once

#include <string>
#include <vector>

#include "tdrefine/graph.hpp"
#include "tdrefine/rational.hpp"
#include "tdrefine/tree.hpp"

namespace tdr {

enum class DecompKind { strong, weak, partition };

std::string kind_name(DecompKind k);
DecompKind kind_from_name(const std::string& s);

// Rooted tree plus one bag per node. Doubles as a weak tree-decomposition
// and as a tree-partition via `kind`. graph_universe records the id space of
// the decomposed graph.
struct TreeDecomposition {
    RootedTree tree;
    std::vector<std::vector<int>> bags;  // sorted vertex lists
    DecompKind kind = DecompKind::strong;
    int graph_universe = 0;

    int order() const { return tree.size(); }
};

// One bag holding all of V(g); the empty graph gets a single empty bag.
TreeDecomposition single_bag_decomposition(const Graph& g, DecompKind kind = DecompKind::strong);

// Bags intersected with V(sub); tree shape kept. Valid for induced subgraphs.
TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const Graph& sub);

// --- metrics ---------------------------------------------------------------

// Max bag size - 1 for strong/weak; max bag size for tree-partitions.
int width(const TreeDecomposition& td);
int order(const TreeDecomposition& td);
int degree(const TreeDecomposition& td);
// Number of bags containing v.
int spread(const TreeDecomposition& td, int v);
// Spread of every id in the universe (0 for non-vertices).
std::vector<int> spreads(const TreeDecomposition& td);
int max_spread(const TreeDecomposition& td);

// --- validation ------------------------------------------------------------

struct Violation {
    enum class Type {
        bag_unknown_vertex,    // bag contains an id that is not a graph vertex
        vertex_uncovered,      // some vertex in no bag
        vertex_disconnected,   // occupancy set not connected in the tree
        edge_uncovered,        // edge property failed for td.kind
        bags_not_disjoint,     // partition only
    };
    Type type;
    int a = -1;  // vertex (or edge endpoint)
    int b = -1;  // second edge endpoint
    int node = -1;
    std::string to_string() const;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string text() const;
};

// Serial reference validator; lists every violated clause with witnesses.
ValidationReport validate(const Graph& g, const TreeDecomposition& td);

// Boolean-only validity kernels. The OpenMP one is used on hot paths; the
// serial twin exists for tests and the benchmark.
bool validate_ok(const Graph& g, const TreeDecomposition& td);
bool validate_ok_serial(const Graph& g, const TreeDecomposition& td);

// --- slickness --------------------------------------------------------------

struct SlickWitness {
    bool ok = true;
    int child = -1;   // failing tree edge (parent(child), child)
    int vertex = -1;  // failing shared vertex
};

// True iff for every tree edge xy (x parent) and v in B_x∩B_y,
// |(N(v) ∩ B_y) \ B_x| >= s. Witness is the first failure in (child id,
// vertex) order.
SlickWitness is_slick(const Graph& g, const TreeDecomposition& td, int s);

// Theorem check: spread(v) <= deg(v)/s + 1 for all v of an s-slick input.
// Returns the counterexample vertex (-1 if none); a hit is a bug upstream.
int spread_bound_check(const Graph& g, const TreeDecomposition& td, int s);

// --- normalizers ------------------------------------------------------------

// Folklore smooth form: all bags of size w+1, adjacent bags exchange exactly
// one vertex, exactly |V(g)| - w nodes, where w = max(width(td), target_width).
// Works for disconnected graphs too (bags may mix components).
TreeDecomposition smooth_decomposition(const Graph& g, const TreeDecomposition& td,
                                       int target_width = -1);

// Strong decomposition on the same tree with B'_x = B_x ∪ B_parent(x);
// width at most 2*width(tp) - 1.
TreeDecomposition partition_to_decomposition(const Graph& g, const TreeDecomposition& tp);

// Drops empty bags (safe: no occupancy passes through an empty bag).
TreeDecomposition drop_empty_bags(const TreeDecomposition& td);

}  // namespace tdr
