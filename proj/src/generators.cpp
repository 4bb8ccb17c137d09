#include "tdrefine/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tdrefine/errors.hpp"

namespace tdr {

Graph make_path(int n) {
    if (n < 1) throw UserError("path: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw UserError("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({n - 1, 0});
    return Graph::from_edges(n, e);
}

Graph make_grid(int side) {
    if (side < 1) throw UserError("grid: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    auto id = [side](int r, int c) { return r * side + c; };
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            if (c + 1 < side) e.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < side) e.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph::from_edges(side * side, e);
}

Graph make_fan(int n) {
    if (n < 2) throw UserError("fan: n must be >= 2");
    // Vertex n-1 is the apex; 0..n-2 form the path.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n - 1; ++i) e.push_back({i, i + 1});
    for (int i = 0; i < n - 1; ++i) e.push_back({i, n - 1});
    return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
    if (n < 1) throw UserError("complete: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

Graph make_random_gnm(int n, long long m, std::uint64_t seed) {
    if (n < 1) throw UserError("random_gnm: n must be >= 1");
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m) throw UserError("random_gnm: m out of range");
    std::mt19937_64 rng(seed);
    std::set<std::pair<int, int>> chosen;
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<long long>(chosen.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<std::pair<int, int>> e(chosen.begin(), chosen.end());
    return Graph::from_edges(n, e);
}

Graph make_random_partial_ktree(int n, int k, int keep_percent, std::uint64_t seed) {
    if (n < 1) throw UserError("random_ktree_partial: n must be >= 1");
    if (k < 1) throw UserError("random_ktree_partial: k must be >= 1");
    if (keep_percent < 0 || keep_percent > 100)
        throw UserError("random_ktree_partial: keep percentage out of range");
    std::mt19937_64 rng(seed);
    int base = std::min(n, k + 1);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < base; ++i)
        for (int j = i + 1; j < base; ++j) e.push_back({i, j});
    // cliques[i] = a k-clique of the growing k-tree
    std::vector<std::vector<int>> cliques;
    if (n > k) {
        std::vector<int> first(k);
        for (int i = 0; i < k; ++i) first[i] = i;
        cliques.push_back(first);
        for (int i = 0; i <= k && i < base; ++i) {
            std::vector<int> c;
            for (int j = 0; j < base; ++j)
                if (j != i) c.push_back(j);
            if (static_cast<int>(c.size()) == k) cliques.push_back(c);
        }
    }
    for (int v = base; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        const std::vector<int> host = cliques[pick(rng)];
        for (int u : host) e.push_back({u, v});
        for (int leave = 0; leave < k; ++leave) {
            std::vector<int> c;
            for (int i = 0; i < k; ++i)
                if (i != leave) c.push_back(host[i]);
            c.push_back(v);
            cliques.push_back(std::move(c));
        }
    }
    if (keep_percent < 100) {
        std::uniform_int_distribution<int> die(0, 99);
        std::vector<std::pair<int, int>> kept;
        for (auto& ed : e)
            if (die(rng) < keep_percent) kept.push_back(ed);
        e = std::move(kept);
    }
    return Graph::from_edges(n, e);
}

Graph make_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw UserError("tree_random: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        e.push_back({pick(rng), v});
    }
    return Graph::from_edges(n, e);
}

Graph generate(const std::string& family, const GenParams& p, std::uint64_t seed) {
    if (family == "path") return make_path(p.n);
    if (family == "cycle") return make_cycle(p.n);
    if (family == "grid") return make_grid(p.n);
    if (family == "fan") return make_fan(p.n);
    if (family == "complete") return make_complete(p.n);
    if (family == "random_gnm")
        return make_random_gnm(p.n, p.m >= 0 ? p.m : 2LL * p.n, seed);
    if (family == "random_ktree_partial")
        return make_random_partial_ktree(p.n, p.k, p.keep_percent, seed);
    if (family == "tree_random") return make_random_tree(p.n, seed);
    throw UserError("unknown graph family: " + family);
}

}  // namespace tdr
