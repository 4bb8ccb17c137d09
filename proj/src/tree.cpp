#include "tdrefine/tree.hpp"

#include <algorithm>

#include "tdrefine/errors.hpp"

namespace tdr {

RootedTree RootedTree::from_parents(std::vector<int> parent, int root) {
    RootedTree t;
    int n = static_cast<int>(parent.size());
    if (n == 0) throw UserError("tree must be non-empty");
    if (root < 0 || root >= n || parent[root] != root)
        throw UserError("tree root must map to itself");
    t.parent_ = std::move(parent);
    t.root_ = root;
    t.rebuild();
    return t;
}

void RootedTree::rebuild() {
    int n = size();
    children_.assign(n, {});
    for (int x = 0; x < n; ++x) {
        if (parent_[x] < 0 || parent_[x] >= n) throw UserError("tree parent out of range");
        if (x != root_) children_[parent_[x]].push_back(x);
    }
    // children lists are ascending already (built in id order)
    depth_.assign(n, -1);
    depth_[root_] = 0;
    std::vector<int> order = {root_};
    order.reserve(n);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : children_[order[i]]) {
            depth_[c] = depth_[order[i]] + 1;
            order.push_back(c);
        }
    if (static_cast<int>(order.size()) != n)
        throw UserError("tree has unreachable nodes or a parent cycle");
}

int RootedTree::max_degree() const {
    int d = 0;
    for (int x = 0; x < size(); ++x) d = std::max(d, degree(x));
    return d;
}

std::vector<int> RootedTree::post_order() const {
    std::vector<int> out;
    out.reserve(size());
    // iterative DFS, children pushed in reverse so they pop in id order
    std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto& [v, ci] = stack.back();
        if (ci < children_[v].size()) {
            int c = children_[v][ci++];
            stack.push_back({c, 0});
        } else {
            out.push_back(v);
            stack.pop_back();
        }
    }
    return out;
}

std::vector<int> RootedTree::subtree_sizes() const {
    std::vector<int> sz(size(), 1);
    for (int v : post_order())
        for (int c : children_[v]) sz[v] += sz[c];
    return sz;
}

std::vector<int> RootedTree::subtree_nodes(int v) const {
    std::vector<int> out = {v};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int c : children_[out[i]]) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tdr
