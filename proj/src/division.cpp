#include "tdrefine/division.hpp"

#include <algorithm>
#include <numeric>

#include "tdrefine/errors.hpp"
#include "tdrefine/slick.hpp"

namespace tdr {

bool check_division(const RootedTree& tree, const Division& div) {
    const int n = tree.size();
    if (div.m() == 0 || div.roots.size() != div.subtrees.size()) return false;
    std::vector<int> edge_owner_count(n, 0);
    std::vector<char> node_seen(n, 0);
    for (int i = 0; i < div.m(); ++i) {
        const auto& part = div.subtrees[i];
        int r = div.roots[i];
        if (part.empty() || !set_contains(part, r)) return false;
        for (int x : part) {
            if (x < 0 || x >= n) return false;
            node_seen[x] = 1;
            if (x == r) {
                // root must be the unique shallowest node of the part
                if (x != tree.root() && set_contains(part, tree.parent(x))) return false;
            } else {
                if (!set_contains(part, tree.parent(x))) return false;
                ++edge_owner_count[x];
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        if (!node_seen[x]) return false;
        if (x != tree.root() && edge_owner_count[x] != 1) return false;
    }
    if (!set_contains(div.subtrees[0], tree.root())) return false;
    std::vector<int> earlier = div.subtrees[0];
    for (int i = 1; i < div.m(); ++i) {
        auto common = set_intersection(div.subtrees[i], earlier);
        if (common != std::vector<int>{div.roots[i]}) return false;
        earlier = set_union(earlier, div.subtrees[i]);
    }
    return true;
}

namespace {

// Mutable alive-subset view of a host tree. Peeling removes whole subtrees,
// so the alive set always stays an upward-closed subtree containing the root.
struct TreeView {
    const RootedTree& tree;
    std::vector<char> alive;
    int count;

    explicit TreeView(const RootedTree& t) : tree(t), alive(t.size(), 1), count(t.size()) {}

    std::vector<int> alive_nodes() const {
        std::vector<int> out;
        for (int x = 0; x < tree.size(); ++x)
            if (alive[x]) out.push_back(x);
        return out;
    }

    // weight of the alive subtree below (and including) each alive node
    std::vector<long long> subtree_weights(const std::vector<long long>& gamma) const {
        std::vector<long long> w(tree.size(), 0);
        for (int x : tree.post_order()) {
            if (!alive[x]) continue;
            w[x] = gamma[x];
            for (int c : tree.children(x))
                if (alive[c]) w[x] += w[c];
        }
        return w;
    }

    std::vector<int> collect(int v, const std::vector<int>& chosen_children) const {
        std::vector<int> out = {v};
        std::vector<int> stack = chosen_children;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.push_back(x);
            for (int c : tree.children(x))
                if (alive[c]) stack.push_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void remove_except_root(const std::vector<int>& part, int r) {
        for (int x : part)
            if (x != r) {
                alive[x] = 0;
                --count;
            }
    }
};

// deepest (then smallest-id) alive node with pred(x) true
template <typename Pred>
int deepest_node(const TreeView& view, Pred&& pred) {
    int best = -1;
    for (int x = 0; x < view.tree.size(); ++x) {
        if (!view.alive[x] || !pred(x)) continue;
        if (best == -1 || view.tree.depth(x) > view.tree.depth(best) ||
            (view.tree.depth(x) == view.tree.depth(best) && x < best))
            best = x;
    }
    return best;
}

std::pair<std::vector<int>, int> find_subtree_view(const TreeView& view, int k) {
    std::vector<long long> ones(view.tree.size(), 1);
    auto sz = view.subtree_weights(ones);
    int v = deepest_node(view, [&](int x) { return sz[x] >= k; });
    certify(v >= 0, "find-subtree-anchor", "some alive subtree has at least k nodes");
    std::vector<int> chosen;
    long long acc = 0;
    for (int c : view.tree.children(v)) {
        if (!view.alive[c]) continue;
        chosen.push_back(c);
        acc += sz[c];
        if (acc >= k - 1) break;
    }
    certify(acc >= k - 1, "find-subtree-prefix", "children prefix reaches k-1 nodes");
    auto part = view.collect(v, chosen);
    certify(static_cast<int>(part.size()) >= k && static_cast<int>(part.size()) <= 2 * k - 2,
            "find-subtree-window", "|T'| in [k, 2k-2]");
    return {part, v};
}

// Any single-attachment subtree u + complete child subtrees whose node count
// lands in [k, 2k-2] while leaving at least k alive nodes behind. Used only
// when the plain peel would strand an undersized remainder.
std::pair<std::vector<int>, int> exhaustive_peel(const TreeView& view, int k) {
    std::vector<long long> ones(view.tree.size(), 1);
    auto sz = view.subtree_weights(ones);
    long long total = 0;
    for (int x = 0; x < view.tree.size(); ++x)
        if (view.alive[x]) total += 1;
    long long lo = k - 1, hi = std::min<long long>(2 * k - 3, total - k);
    if (lo > hi) return {{}, -1};

    std::vector<int> order;
    for (int x = 0; x < view.tree.size(); ++x)
        if (view.alive[x]) order.push_back(x);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (view.tree.depth(a) != view.tree.depth(b))
            return view.tree.depth(a) > view.tree.depth(b);
        return a < b;
    });
    for (int u : order) {
        std::vector<int> kids;
        for (int c : view.tree.children(u))
            if (view.alive[c]) kids.push_back(c);
        if (kids.empty()) continue;
        std::vector<int> from(hi + 1, -2);
        from[0] = -1;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            long long csz = sz[kids[i]];
            for (long long s = hi - csz; s >= 0; --s)
                if (from[s] != -2 && from[s + csz] == -2)
                    from[s + csz] = static_cast<int>(i);
        }
        for (long long target = lo; target <= hi; ++target) {
            if (from[target] == -2) continue;
            std::vector<int> chosen;
            long long s = target;
            while (s > 0) {
                int i = from[s];
                chosen.push_back(kids[i]);
                s -= sz[kids[i]];
            }
            std::sort(chosen.begin(), chosen.end());
            return {view.collect(u, chosen), u};
        }
    }
    return {{}, -1};
}

std::pair<std::vector<int>, int> find_weighted_subtree_view(const TreeView& view,
                                                            const std::vector<long long>& gamma,
                                                            int k) {
    auto w = view.subtree_weights(gamma);
    int v = deepest_node(view, [&](int x) { return w[x] >= k - 1 + gamma[x]; });
    certify(v >= 0, "find-weighted-anchor", "total weight covers k-1+gamma(root)");
    std::vector<int> chosen;
    long long acc = 0;
    for (int c : view.tree.children(v)) {
        if (!view.alive[c]) continue;
        chosen.push_back(c);
        acc += w[c];
        if (acc >= k - 1) break;
    }
    certify(acc >= k - 1 && acc <= 3 * k - 5, "find-weighted-exclusive",
            "gamma(T'-v) in [k-1, 3k-5]");
    long long tw = acc + gamma[v];
    certify(tw >= k && tw <= 4 * k - 6, "find-weighted-window", "gamma(T') in [k, 4k-6]");
    return {view.collect(v, chosen), v};
}

}  // namespace

std::pair<std::vector<int>, int> find_subtree(const RootedTree& tree, int k) {
    if (k < 2 || k > tree.size()) throw UserError("find_subtree: need 2 <= k <= |V(T)|");
    TreeView view(tree);
    return find_subtree_view(view, k);
}

std::pair<std::vector<int>, int> find_weighted_subtree(const RootedTree& tree,
                                                       const std::vector<long long>& gamma,
                                                       int k) {
    if (k < 2) throw UserError("find_weighted_subtree: k must be >= 2");
    long long total = 0;
    for (int x = 0; x < tree.size(); ++x) {
        if (gamma[x] < 1 || gamma[x] > k - 1)
            throw UserError("find_weighted_subtree: weights must lie in {1..k-1}");
        total += gamma[x];
    }
    if (total < 2 * k - 2) throw UserError("find_weighted_subtree: total weight below 2k-2");
    TreeView view(tree);
    return find_weighted_subtree_view(view, gamma, k);
}

Division partition_tree(const RootedTree& tree, int k) {
    if (k < 2) throw UserError("partition_tree: k must be >= 2");
    if (tree.size() < k) throw UserError("partition_tree: tree smaller than k");
    TreeView view(tree);
    std::vector<std::vector<int>> peels;
    std::vector<int> peel_roots;
    for (;;) {
        if (view.count <= 2 * k - 2) break;
        auto [part, v] = find_subtree_view(view, k);
        if (view.count - (static_cast<int>(part.size()) - 1) >= k) {
            view.remove_except_root(part, v);
            peels.push_back(std::move(part));
            peel_roots.push_back(v);
            continue;
        }
        auto [part2, v2] = exhaustive_peel(view, k);
        if (v2 >= 0) {
            view.remove_except_root(part2, v2);
            peels.push_back(std::move(part2));
            peel_roots.push_back(v2);
            continue;
        }
        // No division with the [k, 2k-2] window exists for this remainder;
        // emit what is left as an undersized root part.
        break;
    }
    Division div;
    div.subtrees.push_back(view.alive_nodes());
    div.roots.push_back(tree.root());
    for (int i = static_cast<int>(peels.size()) - 1; i >= 0; --i) {
        div.subtrees.push_back(std::move(peels[i]));
        div.roots.push_back(peel_roots[i]);
    }
    certify(check_division(tree, div), "partition-tree-division",
            "peeling must produce a structurally valid division");
    return div;
}

Division partition_weighted_tree(const RootedTree& tree, const std::vector<long long>& gamma,
                                 int k) {
    if (k < 2) throw UserError("partition_weighted_tree: k must be >= 2");
    long long total = 0;
    for (int x = 0; x < tree.size(); ++x) {
        if (gamma[x] < 1 || gamma[x] > k - 1)
            throw UserError("partition_weighted_tree: weights must lie in {1..k-1}");
        total += gamma[x];
    }
    if (total < 2 * k - 2) throw UserError("partition_weighted_tree: total weight below 2k-2");

    TreeView view(tree);
    std::vector<std::vector<int>> peels;
    std::vector<int> peel_roots;
    long long alive_weight = total;

    auto peel_once = [&]() {
        auto [part, v] = find_weighted_subtree_view(view, gamma, k);
        long long excl = 0;
        for (int x : part)
            if (x != v) excl += gamma[x];
        view.remove_except_root(part, v);
        alive_weight -= excl;
        peels.push_back(std::move(part));
        peel_roots.push_back(v);
    };

    while (alive_weight >= 5 * k + 3) peel_once();

    // the quotient width count needs below-root weight <= 3k-5 on every part,
    // including the root part the plain recursion leaves unexamined
    auto below_root = [&]() { return alive_weight - gamma[tree.root()]; };
    while (below_root() > 3 * k - 5) {
        certify(alive_weight >= 2 * k - 2, "partition-weighted-split-pre",
                "root-part split keeps the peel precondition");
        peel_once();
    }

    // light root part threatens the m <= gamma(T)/(k-1) count; merge it into
    // an adjacent part when that stays width-safe
    if (alive_weight < k - 1 && !peels.empty()) {
        for (int i = static_cast<int>(peels.size()) - 1; i >= 0; --i) {
            if (!view.alive[peel_roots[i]]) continue;
            long long part_weight = 0;
            for (int x : peels[i]) part_weight += gamma[x];
            long long merged_below = alive_weight - gamma[tree.root()] + part_weight -
                                     gamma[peel_roots[i]];
            if (merged_below <= 3 * k - 5) {
                for (int x : peels[i])
                    if (!view.alive[x]) {
                        view.alive[x] = 1;
                        ++view.count;
                    }
                alive_weight += part_weight - gamma[peel_roots[i]];
                peels.erase(peels.begin() + i);
                peel_roots.erase(peel_roots.begin() + i);
                break;
            }
        }
    }

    Division div;
    div.subtrees.push_back(view.alive_nodes());
    div.roots.push_back(tree.root());
    for (int i = static_cast<int>(peels.size()) - 1; i >= 0; --i) {
        div.subtrees.push_back(std::move(peels[i]));
        div.roots.push_back(peel_roots[i]);
    }
    certify(check_division(tree, div), "partition-weighted-division",
            "weighted peeling must produce a structurally valid division");
    for (int i = 0; i < div.m(); ++i) {
        long long tw = 0, excl = 0;
        for (int x : div.subtrees[i]) {
            tw += gamma[x];
            if (x != div.roots[i]) excl += gamma[x];
        }
        certify(tw <= 5 * k + 2, "partition-weighted-part-weight", "gamma(T_i) <= 5k+2");
        certify(excl <= 3 * k - 5, "partition-weighted-below-root",
                "gamma(T_i - r_i) <= 3k-5");
        if (i >= 1)
            certify(excl >= k - 1, "partition-weighted-excl-low", "gamma(T_i - r_i) >= k-1");
    }
    return div;
}

TreeDecomposition quotient(const TreeDecomposition& td, const Division& div) {
    if (!check_division(td.tree, div))
        throw UserError("quotient: division is not valid for the decomposition tree");
    const int m = div.m();
    std::vector<int> parent(m, 0);
    for (int i = 1; i < m; ++i) {
        int alpha = -1;
        for (int a = 0; a < i && alpha == -1; ++a)
            if (set_contains(div.subtrees[a], div.roots[i])) alpha = a;
        certify(alpha >= 0, "quotient-parent", "every part root lies in an earlier part");
        parent[i] = alpha;
    }
    TreeDecomposition out;
    out.tree = RootedTree::from_parents(parent, 0);
    out.kind = td.kind;
    out.graph_universe = td.graph_universe;
    out.bags.assign(m, {});
    for (int i = 0; i < m; ++i)
        for (int x : div.subtrees[i])
            if (i == 0 || x != div.roots[i]) out.bags[i] = set_union(out.bags[i], td.bags[x]);
    return out;
}

TreeDecomposition small_tree_decomp(const Graph& g, const TreeDecomposition& td, int k) {
    if (k < std::max(1, width(td)))
        throw UserError("small_tree_decomp: k must be at least max(width(td), 1)");
    if (!validate_ok(g, td))
        throw UserError("small_tree_decomp: input decomposition is invalid");
    const int n = g.num_vertices();
    if (n <= 2 * k) return single_bag_decomposition(g);

    auto smooth = smooth_decomposition(g, td, k);
    auto div = partition_tree(smooth.tree, k + 1);
    auto out = quotient(smooth, div);

    certify(validate_ok(g, out), "small-tree-decomp-valid", "quotient must be valid");
    certify(width(out) <= 3 * k - 1, "small-tree-decomp-width", "width <= 3k-1");
    long long m = out.order();
    certify(m == 1 || m * static_cast<long long>(k) <= static_cast<long long>(n) - k,
            "small-tree-decomp-order", "order <= max(n/k - 1, 1)");
    return out;
}

TreeDecomposition make_small(const Graph& g, const TreeDecomposition& slick_td, int ell) {
    if (ell < 2) throw UserError("make_small: l must be >= 2");
    if (width(slick_td) > ell - 2)
        throw UserError("make_small: decomposition width exceeds l-2");
    const int n = g.num_vertices();
    if (n < 2 * ell - 2) throw UserError("make_small: needs at least 2l-2 vertices");
    if (!is_slick(g, slick_td, 1).ok) throw UserError("make_small: input is not slick");

    auto td = drop_empty_bags(slick_td);
    const RootedTree& tree = td.tree;
    std::vector<long long> gamma(tree.size());
    long long sum = 0;
    for (int x = 0; x < tree.size(); ++x) {
        gamma[x] = x == tree.root()
                       ? static_cast<long long>(td.bags[x].size())
                       : static_cast<long long>(
                             set_difference(td.bags[x], td.bags[tree.parent(x)]).size());
        certify(gamma[x] >= 1, "make-small-weight-positive",
                "slickness rules out bags nested in their parent");
        certify(gamma[x] <= ell - 1, "make-small-weight-cap", "weights stay within l-1");
        sum += gamma[x];
    }
    certify(sum == n, "make-small-weight-total",
            "introduced-vertex weights add up to |V(G)|");

    auto div = partition_weighted_tree(tree, gamma, ell);
    auto out = quotient(td, div);

    certify(validate_ok(g, out), "make-small-valid", "quotient must be valid");
    certify(is_slick(g, out, 1).ok, "make-small-slick", "quotient of a slick td is slick");
    certify(width(out) <= 4 * ell - 7, "make-small-width", "width <= 4l-7");
    certify(static_cast<long long>(out.order()) * (ell - 1) <= n, "make-small-order",
            "order <= n/(l-1)");
    return out;
}

TreeDecomposition slick_and_small(const Graph& g, const TreeDecomposition& td, int k,
                                  BuildCounters* counters) {
    if (width(td) > k) throw UserError("slick_and_small: decomposition width exceeds k");
    if (!validate_ok(g, td)) throw UserError("slick_and_small: input decomposition is invalid");
    const int n = g.num_vertices();
    const int ell = 14 * k + 15;

    TreeDecomposition out;
    if (n <= 2 * ell - 3) {
        out = single_bag_decomposition(g);
    } else {
        auto slick = slick_main(g, td, counters);
        certify(width(slick) <= ell - 2, "slick-and-small-stage1", "slick width <= l-2");
        out = make_small(g, slick, ell);
    }
    certify(validate_ok(g, out), "slick-and-small-valid", "output must be valid");
    certify(is_slick(g, out, 1).ok, "slick-and-small-slick", "output must be slick");
    certify(width(out) <= 56 * k + 58, "slick-and-small-width", "width <= 56k+58");
    long long m = out.order();
    certify(m == 1 || m * (14LL * k + 14) <= n, "slick-and-small-order",
            "order <= max(n/(14k+14), 1)");
    certify(spread_bound_check(g, out, 1) == -1, "slick-and-small-spread",
            "spread(v) <= deg(v)+1 everywhere");
    return out;
}

}  // namespace tdr
