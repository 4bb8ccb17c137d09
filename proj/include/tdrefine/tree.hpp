#pragma once

#include <vector>

namespace tdr {

// Rooted tree on nodes 0..size-1. parent(root) == root. Children lists are
// kept in ascending id order, which fixes iteration order everywhere.
class RootedTree {
public:
    RootedTree() : parent_{0}, root_(0) { rebuild(); }

    static RootedTree single() { return RootedTree(); }
    static RootedTree from_parents(std::vector<int> parent, int root);

    int size() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int x) const { return parent_[x]; }
    const std::vector<int>& children(int x) const { return children_[x]; }
    const std::vector<int>& depths() const { return depth_; }
    int depth(int x) const { return depth_[x]; }

    int degree(int x) const {
        return static_cast<int>(children_[x].size()) + (x == root_ ? 0 : 1);
    }
    int max_degree() const;

    // Children-before-parents order; ties resolved by node id via the sorted
    // children lists.
    std::vector<int> post_order() const;
    // Node counts of the subtree rooted at each node.
    std::vector<int> subtree_sizes() const;
    // Nodes of the subtree rooted at v, sorted by id.
    std::vector<int> subtree_nodes(int v) const;

private:
    void rebuild();

    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
    int root_;
};

}  // namespace tdr
