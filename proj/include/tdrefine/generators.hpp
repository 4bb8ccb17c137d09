#pragma once

#include <cstdint>
#include <string>

#include "tdrefine/graph.hpp"

namespace tdr {

struct GenParams {
    int n = 0;       // vertex count; for grid: side length
    long long m = -1;  // edge count (random_gnm)
    int k = 2;       // backbone width (random_ktree_partial)
    int keep_percent = 100;  // percentage of non-backbone edges kept (random_ktree_partial)
};

// Deterministic for (family, params, seed). Families:
//   path, cycle, grid, fan, complete, random_gnm, random_ktree_partial,
//   tree_random.
Graph generate(const std::string& family, const GenParams& params, std::uint64_t seed);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_grid(int side);
// Apex joined to a path on n-1 vertices; 2n-3 edges.
Graph make_fan(int n);
Graph make_complete(int n);
Graph make_random_gnm(int n, long long m, std::uint64_t seed);
// Random k-tree on n vertices with only keep_percent of its edges retained;
// treewidth at most k either way.
Graph make_random_partial_ktree(int n, int k, int keep_percent, std::uint64_t seed);
Graph make_random_tree(int n, std::uint64_t seed);

}  // namespace tdr
