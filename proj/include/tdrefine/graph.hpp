#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tdrefine/rational.hpp"

namespace tdr {

// Immutable simple undirected graph. Vertex ids are dense 0..n-1 at
// generation/parse time; induced subgraphs keep the original ids (bags of a
// decomposition stay meaningful across recursive constructions), so the id
// universe can be larger than the vertex count.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1 plus an edge list. Throws UserError on self-loops or
    // ids out of range; duplicate edges are ignored.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Induced subgraph on s (original ids kept). Throws UserError if s
    // contains an id that is not a vertex.
    Graph induced(const std::vector<int>& s) const;

    // Induced subgraph on V(G) \ removed.
    Graph minus(const std::vector<int>& removed) const;

    bool has_vertex(int v) const { return v >= 0 && v < universe() && present_[v]; }
    bool has_edge(int u, int v) const;

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    long long num_edges() const { return num_edges_; }
    int universe() const { return static_cast<int>(adj_.size()); }
    bool empty() const { return verts_.empty(); }

    // Connected components as sorted vertex lists, ordered by smallest
    // contained id.
    std::vector<std::vector<int>> components() const;

    template <typename F>
    void for_each_edge(F&& f) const {
        for (int v : verts_)
            for (int w : adj_[v])
                if (v < w) f(v, w);
    }

private:
    std::vector<int> verts_;                // sorted
    std::vector<std::vector<int>> adj_;     // indexed by id, sorted lists
    std::vector<char> present_;             // indexed by id
    long long num_edges_ = 0;
};

// Nonnegative rational vertex weights over a fixed id universe, with the
// total kept alongside.
class Weighting {
public:
    explicit Weighting(int universe) : w_(universe, Rat(0)), total_(0) {}

    static Weighting uniform(const Graph& g, const Rat& value);
    // 1 on s, 0 elsewhere.
    static Weighting indicator(const Graph& g, const std::vector<int>& s);

    void set(int v, const Rat& value);
    const Rat& operator[](int v) const { return w_[v]; }
    const Rat& total() const { return total_; }
    int universe() const { return static_cast<int>(w_.size()); }

    Rat sum(const std::vector<int>& vs) const;

private:
    std::vector<Rat> w_;
    Rat total_;
};

// --- sorted-vector set helpers used throughout -----------------------------

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);
bool set_contains(const std::vector<int>& sorted, int v);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace tdr
