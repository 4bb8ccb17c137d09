#include "tdrefine/graph.hpp"

#include <algorithm>

#include "tdrefine/errors.hpp"

namespace tdr {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw UserError("negative vertex count");
    Graph g;
    g.adj_.resize(n);
    g.present_.assign(n, 1);
    g.verts_.resize(n);
    for (int i = 0; i < n; ++i) g.verts_[i] = i;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw UserError("edge endpoint out of range: " + std::to_string(u) + "-" +
                            std::to_string(v));
        if (u == v) throw UserError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.num_edges_ += static_cast<long long>(nb.size());
    }
    g.num_edges_ /= 2;
    return g;
}

Graph Graph::induced(const std::vector<int>& s) const {
    Graph g;
    g.adj_.resize(universe());
    g.present_.assign(universe(), 0);
    for (int v : s) {
        if (!has_vertex(v)) throw UserError("induced: unknown vertex id " + std::to_string(v));
        g.present_[v] = 1;
    }
    g.verts_ = s;
    std::sort(g.verts_.begin(), g.verts_.end());
    g.verts_.erase(std::unique(g.verts_.begin(), g.verts_.end()), g.verts_.end());
    for (int v : g.verts_) {
        for (int w : adj_[v])
            if (g.present_[w]) g.adj_[v].push_back(w);
        g.num_edges_ += static_cast<long long>(g.adj_[v].size());
    }
    g.num_edges_ /= 2;
    return g;
}

Graph Graph::minus(const std::vector<int>& removed) const {
    std::vector<char> drop(universe(), 0);
    for (int v : removed) drop[v] = 1;
    std::vector<int> keep;
    keep.reserve(verts_.size());
    for (int v : verts_)
        if (!drop[v]) keep.push_back(v);
    return induced(keep);
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v : verts_) d = std::max(d, degree(v));
    return d;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<char> seen(universe(), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s : verts_) {
        if (seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Weighting Weighting::uniform(const Graph& g, const Rat& value) {
    Weighting w(g.universe());
    for (int v : g.vertices()) w.set(v, value);
    return w;
}

Weighting Weighting::indicator(const Graph& g, const std::vector<int>& s) {
    Weighting w(g.universe());
    for (int v : s) {
        if (!g.has_vertex(v)) throw UserError("weighting: unknown vertex " + std::to_string(v));
        w.set(v, Rat(1));
    }
    return w;
}

void Weighting::set(int v, const Rat& value) {
    if (value < Rat(0)) throw UserError("negative weight at vertex " + std::to_string(v));
    total_ += value - w_[v];
    w_[v] = value;
}

Rat Weighting::sum(const std::vector<int>& vs) const {
    Rat s(0);
    for (int v : vs) s += w_[v];
    return s;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace tdr
