#pragma once

#include <random>
#include <vector>

#include "tdrefine/decomposition.hpp"
#include "tdrefine/generators.hpp"
#include "tdrefine/graph.hpp"

namespace tdtest {

using namespace tdr;

// Path-decomposition of C_n with v_0 added to every bag: bags
// {v0,v_i,v_{i+1}} for i=1..n-2, a path of n-2 nodes. Optimal width 2 but
// spread(v_0) = n-2.
inline TreeDecomposition cycle_fixture(int n) {
    TreeDecomposition td;
    int bags = n - 2;
    std::vector<int> parent(bags);
    for (int i = 0; i < bags; ++i) parent[i] = i == 0 ? 0 : i - 1;
    td.tree = RootedTree::from_parents(parent, 0);
    td.bags.resize(bags);
    for (int i = 0; i < bags; ++i) td.bags[i] = {0, i + 1, i + 2};
    td.kind = DecompKind::strong;
    td.graph_universe = n;
    return td;
}

// Row-pair path-decomposition of the side x side grid: bag i = rows i, i+1.
inline TreeDecomposition grid_row_pairs(int side) {
    TreeDecomposition td;
    int bags = side - 1;
    std::vector<int> parent(bags);
    for (int i = 0; i < bags; ++i) parent[i] = i == 0 ? 0 : i - 1;
    td.tree = RootedTree::from_parents(parent, 0);
    td.bags.resize(bags);
    for (int i = 0; i < bags; ++i)
        for (int c = 0; c < 2 * side; ++c) td.bags[i].push_back(i * side + c);
    td.kind = DecompKind::strong;
    td.graph_universe = side * side;
    return td;
}

// Sliding-window path-decomposition of the grid: B_i = {v_i..v_{i+side}},
// width exactly side.
inline TreeDecomposition grid_window(int side) {
    int n = side * side;
    TreeDecomposition td;
    int bags = n - side;
    std::vector<int> parent(bags);
    for (int i = 0; i < bags; ++i) parent[i] = i == 0 ? 0 : i - 1;
    td.tree = RootedTree::from_parents(parent, 0);
    td.bags.resize(bags);
    for (int i = 0; i < bags; ++i)
        for (int j = 0; j <= side; ++j) td.bags[i].push_back(i + j);
    td.kind = DecompKind::strong;
    td.graph_universe = n;
    return td;
}

// One bag per edge of P_n.
inline TreeDecomposition path_edge_bags(int n) {
    TreeDecomposition td;
    int bags = n - 1;
    std::vector<int> parent(bags);
    for (int i = 0; i < bags; ++i) parent[i] = i == 0 ? 0 : i - 1;
    td.tree = RootedTree::from_parents(parent, 0);
    td.bags.resize(bags);
    for (int i = 0; i < bags; ++i) td.bags[i] = {i, i + 1};
    td.kind = DecompKind::strong;
    td.graph_universe = n;
    return td;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

// Random bag assignment over a random small tree; usually not a valid
// decomposition, which is the point for validator-agreement tests.
inline TreeDecomposition random_bags(const Graph& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nodes_dist(1, 5);
    int nodes = nodes_dist(rng);
    std::vector<int> parent(nodes);
    for (int i = 1; i < nodes; ++i) {
        std::uniform_int_distribution<int> pd(0, i - 1);
        parent[i] = pd(rng);
    }
    parent[0] = 0;
    TreeDecomposition td;
    td.tree = RootedTree::from_parents(parent, 0);
    td.bags.resize(nodes);
    std::bernoulli_distribution member(0.45);
    for (int x = 0; x < nodes; ++x)
        for (int v : g.vertices())
            if (member(rng)) td.bags[x].push_back(v);
    td.kind = DecompKind::strong;
    td.graph_universe = g.universe();
    return td;
}

}  // namespace tdtest
