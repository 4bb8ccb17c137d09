#include "tdrefine/weak.hpp"

#include <algorithm>

#include "tdrefine/errors.hpp"
#include "tdrefine/separators.hpp"

namespace tdr {

namespace {

void check_frame(const Graph& g, const TreeDecomposition& td, const std::vector<int>& s_set,
                 int k, int d) {
    certify(d >= 2, "heart-frame-d", "d >= 2");
    certify(k >= 1 && width(td) <= k - 1, "heart-frame-width", "witness width <= k-1");
    long long s = static_cast<long long>(s_set.size());
    certify(4LL * k <= s && s <= 12LL * k * d, "heart-frame-s", "4k <= |S| <= 12kd");
    for (int v : s_set)
        certify(g.has_vertex(v), "heart-frame-s-subset", "S inside V(G)");
}

// tree with nodes {0 (=z, root), 1 (=y)}
TreeDecomposition two_node(const Graph& g, std::vector<int> z_bag, std::vector<int> y_bag) {
    TreeDecomposition td;
    td.tree = RootedTree::from_parents({0, 0}, 0);
    td.bags = {std::move(z_bag), std::move(y_bag)};
    td.kind = DecompKind::weak;
    td.graph_universe = g.universe();
    return td;
}

TreeDecomposition heart_impl(const Graph& g, const TreeDecomposition& td,
                             const std::vector<int>& s_set, int k, int d,
                             BuildCounters* counters);

}  // namespace

TreeDecomposition heart(const Graph& g, const TreeDecomposition& td,
                        const std::vector<int>& s_set, int k, int d, BuildCounters* counters) {
    auto out = heart_impl(g, td, s_set, k, d, counters);
    certify(is_subset(s_set, out.bags[out.tree.root()]), "heart-s-in-root",
            "S must land inside the distinguished root bag");
    return out;
}

namespace {

TreeDecomposition heart_impl(const Graph& g, const TreeDecomposition& td,
                             const std::vector<int>& s_set, int k, int d,
                             BuildCounters* counters) {
    check_frame(g, td, s_set, k, d);
    const int n = g.num_vertices();
    const long long s_size = static_cast<long long>(s_set.size());
    const long long bag_cap = 18LL * k * d;

    // Case 1: everything outside S fits in one bag.
    if (n - s_size <= bag_cap) {
        if (counters) ++counters->heart_case1;
        auto rest = set_difference(g.vertices(), s_set);
        auto out = two_node(g, s_set, rest);
        certify(2LL * 2 * k <= n, "heart-case1-order", "|V(T)|=2 <= n/2k");
        return out;
    }

    // Case 2: small anchor set. Vertices of S with few outside neighbours
    // hand their whole outside neighbourhood to the child anchor and leave
    // the graph; the rest stay and contribute themselves plus d-1 fresh
    // neighbours.
    if (s_size <= 12LL * k) {
        if (counters) ++counters->heart_case2;
        std::vector<int> s1, s2, s_prime;
        for (int v : s_set) {
            auto outside = set_difference(
                std::vector<int>(g.neighbors(v).begin(), g.neighbors(v).end()), s_set);
            if (static_cast<int>(outside.size()) <= d - 2) {
                s1.push_back(v);
                s_prime = set_union(s_prime, outside);
            } else {
                s2.push_back(v);
                std::vector<int> picked(outside.begin(), outside.begin() + (d - 1));
                picked.push_back(v);
                std::sort(picked.begin(), picked.end());
                s_prime = set_union(s_prime, picked);
            }
        }
        certify(static_cast<long long>(s_prime.size()) <= 12LL * k * d, "heart-case2-sprime",
                "|S'| <= d|S| <= 12kd");
        if (static_cast<long long>(s_prime.size()) < 4LL * k) {
            for (int v : g.vertices()) {
                if (static_cast<long long>(s_prime.size()) >= 4LL * k) break;
                if (!set_contains(s_set, v) && !set_contains(s_prime, v))
                    s_prime.insert(std::lower_bound(s_prime.begin(), s_prime.end(), v), v);
            }
            certify(static_cast<long long>(s_prime.size()) == 4LL * k, "heart-case2-pad",
                    "padding to 4k is always possible given |V(G-S)| > 18kd");
        }
        Graph h = g.minus(s1);
        certify(h.num_vertices() < n || static_cast<long long>(s_prime.size()) > s_size,
                "heart-case2-progress", "either the graph shrinks or the anchor grows");
        auto sub = heart(h, restrict_decomposition(td, h), s_prime, k, d, counters);

        // new root z above the child's distinguished root z'
        int sub_n = sub.tree.size();
        std::vector<int> parent(sub_n + 1, 0);
        TreeDecomposition out;
        out.bags.resize(sub_n + 1);
        out.bags[0] = s_set;
        for (int x = 0; x < sub_n; ++x) {
            parent[x + 1] = x == sub.tree.root() ? 0 : sub.tree.parent(x) + 1;
            out.bags[x + 1] = sub.bags[x];
        }
        out.tree = RootedTree::from_parents(parent, 0);
        out.kind = DecompKind::weak;
        out.graph_universe = g.universe();
        certify(2LL * k * out.tree.size() <= n, "heart-case2-order", "|V(T)| <= n/2k");
        certify(out.tree.degree(1 + sub.tree.root()) <= 6LL * d, "heart-case2-zprime-degree",
                "deg(z')+1 <= 6d");
        return out;
    }

    // Case 3: large anchor set; split along a balanced separation and glue
    // the two distinguished roots into one node.
    if (counters) ++counters->heart_case3;
    certify(s_size <= 12LL * k * d, "heart-case3-range", "|S| <= 12kd");
    auto sep = separation_set_sep(g, td, s_set, Rat(2, 3));
    certify(sep.m() == 2, "heart-case3-two-parts", "beta=2/3 yields exactly two parts");
    const auto& x_set = sep.x_set;
    certify(static_cast<long long>(x_set.size()) <= k, "heart-case3-x", "|X| <= k");

    std::vector<std::vector<int>> s_sub(2);
    long long s_total = 0;
    for (int i = 0; i < 2; ++i) {
        auto s_star = set_intersection(
            s_set, set_difference(sep.parts[i].vertices(), x_set));
        s_sub[i] = set_union(s_star, x_set);
        long long sz = static_cast<long long>(s_sub[i].size());
        certify(sz >= 4LL * k, "heart-case3-si-low", "|S_i| >= 4k");
        certify(sz <= 12LL * k * d, "heart-case3-si-high", "|S_i| <= 12kd");
        s_total += sz;
        certify(sep.parts[i].num_vertices() < n, "heart-case3-shrink",
                "both sides of the separation are proper");
    }
    certify(s_total <= s_size + 2LL * k, "heart-case3-si-sum", "|S_1|+|S_2| <= |S|+2k");

    TreeDecomposition sub0 =
        heart(sep.parts[0], restrict_decomposition(td, sep.parts[0]), s_sub[0], k, d, counters);
    TreeDecomposition sub1 =
        heart(sep.parts[1], restrict_decomposition(td, sep.parts[1]), s_sub[1], k, d, counters);

    // identify the two roots: node 0 = merged z, then sub0's other nodes,
    // then sub1's other nodes
    int n0 = sub0.tree.size(), n1 = sub1.tree.size();
    auto map0 = [&](int x) {
        if (x == sub0.tree.root()) return 0;
        return 1 + x - (x > sub0.tree.root() ? 1 : 0);
    };
    auto map1 = [&](int x) {
        if (x == sub1.tree.root()) return 0;
        return n0 + x - (x > sub1.tree.root() ? 1 : 0);
    };
    int total = n0 + n1 - 1;
    std::vector<int> parent(total, 0);
    TreeDecomposition out;
    out.bags.resize(total);
    out.bags[0] = set_union(sub0.bags[sub0.tree.root()], sub1.bags[sub1.tree.root()]);
    for (int x = 0; x < n0; ++x)
        if (x != sub0.tree.root()) {
            parent[map0(x)] = map0(sub0.tree.parent(x));
            out.bags[map0(x)] = sub0.bags[x];
        }
    for (int x = 0; x < n1; ++x)
        if (x != sub1.tree.root()) {
            parent[map1(x)] = map1(sub1.tree.parent(x));
            out.bags[map1(x)] = sub1.bags[x];
        }
    out.tree = RootedTree::from_parents(parent, 0);
    out.kind = DecompKind::weak;
    out.graph_universe = g.universe();

    certify(2LL * static_cast<long long>(out.bags[0].size()) <= 3 * s_size - 4LL * k,
            "heart-case3-zbag", "|B_z| <= 3|S|/2 - 2k");
    certify(static_cast<long long>(out.bags[0].size()) <= bag_cap, "heart-case3-zbag-cap",
            "|B_z| <= 18kd");
    certify(2LL * k * (out.tree.degree(0) + 1) <= s_size, "heart-case3-zdegree",
            "deg(z) <= |S|/2k - 1");
    certify(2LL * k * out.tree.size() <= n, "heart-case3-order", "|V(T)| <= n/2k");
    return out;
}

}  // namespace

TreeDecomposition weak_tree_decomp_gen(const Graph& g, const TreeDecomposition& td, int k, int d,
                                       BuildCounters* counters) {
    if (d < 2) throw UserError("weak_tree_decomp_gen: d must be >= 2");
    if (k < 1 || width(td) > k - 1)
        throw UserError("weak_tree_decomp_gen: needs a witness of width <= k-1");
    const int n = g.num_vertices();

    TreeDecomposition out;
    if (n < 4 * k) {
        out = single_bag_decomposition(g, DecompKind::weak);
    } else {
        std::vector<int> s_set(g.vertices().begin(), g.vertices().begin() + 4 * k);
        out = heart(g, td, s_set, k, d, counters);
    }

    certify(validate_ok(g, out), "weak-gen-valid", "output must be a valid weak td");
    certify(is_slick(g, out, d - 1).ok, "weak-gen-slick", "output must be (d-1)-slick");
    for (const auto& b : out.bags)
        certify(static_cast<long long>(b.size()) <= 18LL * k * d, "weak-gen-width",
                "bags of size at most 18kd");
    certify(degree(out) <= 6 * d, "weak-gen-degree", "degree <= 6d");
    certify(out.order() == 1 || 2LL * k * out.order() <= n, "weak-gen-order",
            "order <= max(n/2k, 1)");
    certify(spread_bound_check(g, out, d - 1) == -1, "weak-gen-spread",
            "spread <= deg/(d-1) + 1");
    return out;
}

TreeDecomposition weak_to_strong(const Graph& g, const TreeDecomposition& wtd) {
    if (!validate_ok(g, wtd)) throw UserError("weak_to_strong: input is not a valid weak td");
    const int k = width(wtd);
    TreeDecomposition out;
    out.tree = wtd.tree;
    out.kind = DecompKind::strong;
    out.graph_universe = wtd.graph_universe;
    out.bags.resize(wtd.bags.size());
    out.bags[wtd.tree.root()] = wtd.bags[wtd.tree.root()];
    for (int y = 0; y < wtd.tree.size(); ++y) {
        if (y == wtd.tree.root()) continue;
        int x = wtd.tree.parent(y);
        const auto& bx = wtd.bags[x];
        const auto& by = wtd.bags[y];
        std::vector<int> promoted;
        for (int v : bx) {
            if (set_contains(by, v)) continue;
            for (int u : g.neighbors(v))
                if (set_contains(by, u) && !set_contains(bx, u)) {
                    promoted.push_back(v);
                    break;
                }
        }
        out.bags[y] = set_union(by, promoted);
    }
    certify(validate_ok(g, out), "weak-to-strong-valid", "promotion yields a strong td");
    certify(width(out) <= 2 * k + 1, "weak-to-strong-width", "width <= 2k+1");
    return out;
}

TreeDecomposition spread_small_degree(const Graph& g, const TreeDecomposition& td, int k,
                                      BuildCounters* counters) {
    auto wtd = weak_tree_decomp_gen(g, td, k, 2, counters);
    auto out = weak_to_strong(g, wtd);
    const int n = g.num_vertices();
    certify(validate_ok(g, out), "spread-small-degree-valid", "output must be valid");
    certify(is_slick(g, out, 1).ok, "spread-small-degree-slick", "output must be slick");
    certify(width(out) <= 72 * k + 1, "spread-small-degree-width", "width <= 72k+1");
    certify(degree(out) <= 12, "spread-small-degree-degree", "degree <= 12");
    certify(out.order() == 1 || 2LL * k * out.order() <= n, "spread-small-degree-order",
            "order <= max(n/2k, 1)");
    certify(spread_bound_check(g, out, 1) == -1, "spread-small-degree-spread",
            "spread <= deg+1");
    return out;
}

TreeDecomposition tree_partition(const Graph& g, const TreeDecomposition& td, int k,
                                 BuildCounters* counters) {
    const int d = g.max_degree() + 2;
    auto out = weak_tree_decomp_gen(g, td, k, d, counters);
    auto sp = spreads(out);
    for (int v : g.vertices())
        certify(sp[v] == 1, "tree-partition-spread-one",
                "d = maxdeg+2 forces spread exactly 1");
    out.kind = DecompKind::partition;
    const int n = g.num_vertices();
    certify(validate_ok(g, out), "tree-partition-valid", "output must be a valid tree-partition");
    certify(width(out) <= 18LL * k * d, "tree-partition-width", "partition width <= 18kd");
    certify(degree(out) <= 6 * d, "tree-partition-degree", "degree <= 6d");
    certify(out.order() == 1 || 2LL * k * out.order() <= n, "tree-partition-order",
            "order <= max(n/2k, 1)");
    return out;
}

}  // namespace tdr
