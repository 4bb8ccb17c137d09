#include "tdrefine/separators.hpp"

#include <algorithm>
#include <numeric>

#include "tdrefine/errors.hpp"

namespace tdr {

bool check_separation(const Graph& g, const Separation& sep) {
    if (sep.parts.empty()) return static_cast<int>(sep.x_set.size()) == g.num_vertices();
    std::vector<int> vunion = sep.x_set;
    for (const auto& p : sep.parts) {
        if (!is_subset(sep.x_set, p.vertices())) return false;
        vunion = set_union(vunion, p.vertices());
        // parts must be induced subgraphs of g
        bool induced_ok = true;
        p.for_each_edge([&](int v, int w) { induced_ok = induced_ok && g.has_edge(v, w); });
        for (int v : p.vertices())
            for (int w : g.neighbors(v))
                if (w > v && p.has_vertex(w) && !p.has_edge(v, w)) induced_ok = false;
        if (!induced_ok) return false;
    }
    if (vunion != g.vertices()) return false;
    for (int i = 0; i < sep.m(); ++i)
        for (int j = i + 1; j < sep.m(); ++j)
            if (set_intersection(sep.parts[i].vertices(), sep.parts[j].vertices()) != sep.x_set)
                return false;
    // every edge of g inside some part
    bool covered = true;
    g.for_each_edge([&](int v, int w) {
        for (const auto& p : sep.parts)
            if (p.has_edge(v, w)) return;
        covered = false;
    });
    return covered;
}

std::vector<int> tree_dec_sep(const Graph& g, const Weighting& gamma,
                              const TreeDecomposition& td, int q) {
    if (q < 0) throw UserError("tree_dec_sep: q must be >= 0");
    const RootedTree& tree = td.tree;
    const int nt = tree.size();

    std::vector<char> in_graph(g.universe(), 0);
    for (int v : g.vertices()) in_graph[v] = 1;
    std::vector<char> node_alive(nt, 1);

    std::vector<int> z_set;
    int q_cur = q;
    Rat original_total = Rat(0);
    for (int v : g.vertices()) original_total += gamma[v];

    std::vector<int> top(g.universe(), -1);
    std::vector<Rat> top_weight(nt), subtree_weight(nt);
    auto post = tree.post_order();

    while (q_cur > 0) {
        Rat total(0);
        for (int v : g.vertices())
            if (in_graph[v]) total += gamma[v];
        if (total == Rat(0)) break;
        Rat threshold = total / Rat(q_cur + 1);

        // top[v] = shallowest alive node whose bag holds v (occupancy of a
        // surviving vertex lies wholly in the alive, upward-closed node set)
        std::fill(top.begin(), top.end(), -1);
        for (int x = 0; x < nt; ++x) {
            if (!node_alive[x]) continue;
            for (int v : td.bags[x])
                if (in_graph[v] && (top[v] == -1 || tree.depth(x) < tree.depth(top[v])))
                    top[v] = x;
        }
        std::fill(top_weight.begin(), top_weight.end(), Rat(0));
        for (int v : g.vertices())
            if (in_graph[v] && top[v] >= 0) top_weight[top[v]] += gamma[v];
        for (int x : post) {
            if (!node_alive[x]) continue;
            subtree_weight[x] = top_weight[x];
            for (int c : tree.children(x))
                if (node_alive[c]) subtree_weight[x] += subtree_weight[c];
        }

        // weight of G_v = subtree top-sum plus bag vertices whose occupancy
        // reaches above v
        int best = -1;
        for (int x = 0; x < nt; ++x) {
            if (!node_alive[x]) continue;
            Rat wv = subtree_weight[x];
            for (int v : td.bags[x])
                if (in_graph[v] && top[v] >= 0 && tree.depth(top[v]) < tree.depth(x))
                    wv += gamma[v];
            if (wv > threshold) {
                if (best == -1 || tree.depth(x) > tree.depth(best) ||
                    (tree.depth(x) == tree.depth(best) && x < best))
                    best = x;
            }
        }
        if (best == -1) break;  // only possible when all remaining weight is zero

        z_set.push_back(best);
        // remove the subtree T_v and every vertex occurring in its bags
        std::vector<int> stack = {best};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            node_alive[x] = 0;
            for (int v : td.bags[x]) in_graph[v] = 0;
            for (int c : tree.children(x))
                if (node_alive[c]) stack.push_back(c);
        }
        --q_cur;
    }

    std::sort(z_set.begin(), z_set.end());
    certify(static_cast<int>(z_set.size()) <= q, "tree-dec-sep-size", "|Z| <= q");

    // re-check the component bound from scratch
    std::vector<int> removed;
    for (int z : z_set) removed = set_union(removed, td.bags[z]);
    Graph rest = g.minus(set_intersection(removed, g.vertices()));
    Rat bound = original_total / Rat(q + 1);
    for (const auto& comp : rest.components())
        certify(gamma.sum(comp) <= bound, "tree-dec-sep-balance",
                "residual component overweight");
    return z_set;
}

std::vector<int> treewidth_sep(const Graph& g, const Weighting& gamma,
                               const TreeDecomposition& td, int q) {
    auto z_set = tree_dec_sep(g, gamma, td, q);
    std::vector<int> x_set;
    for (int z : z_set) x_set = set_union(x_set, td.bags[z]);
    x_set = set_intersection(x_set, g.vertices());
    certify(static_cast<long long>(x_set.size()) <=
                static_cast<long long>(q) * (width(td) + 1),
            "treewidth-sep-size", "|X| <= q(k+1)");
    return x_set;
}

std::vector<int> set_sep(const Graph& g, const TreeDecomposition& td,
                         const std::vector<int>& s_set, int q) {
    auto gamma = Weighting::indicator(g, s_set);
    auto x_set = treewidth_sep(g, gamma, td, q);
    return x_set;
}

Separation pseudo_components(const Graph& g, const Weighting& gamma,
                             const std::vector<int>& x_set, const Rat& w) {
    if (w <= Rat(0)) throw UserError("pseudo_components: w must be positive");
    Separation sep;
    sep.x_set = x_set;
    Graph rest = g.minus(x_set);
    auto comps = rest.components();
    for (const auto& c : comps)
        if (gamma.sum(c) > w)
            throw UserError("pseudo_components: a component of G-X exceeds weight cap");
    if (comps.empty()) return sep;

    // heaviest-first first-fit; zero-weight components land wherever they fit
    std::vector<int> idx(comps.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Rat> cw(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) cw[i] = gamma.sum(comps[i]);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (cw[a] != cw[b]) return cw[a] > cw[b];
        return comps[a][0] < comps[b][0];
    });
    std::vector<std::vector<int>> groups;  // vertex lists
    std::vector<Rat> gw;
    for (int i : idx) {
        bool placed = false;
        for (std::size_t gi = 0; gi < groups.size(); ++gi)
            if (gw[gi] + cw[i] <= w) {
                groups[gi] = set_union(groups[gi], comps[i]);
                gw[gi] += cw[i];
                placed = true;
                break;
            }
        if (!placed) {
            groups.push_back(comps[i]);
            gw.push_back(cw[i]);
        }
    }
    // first-fit already leaves no mergeable pair; keep the sweep as a guard
    for (bool merged = true; merged;) {
        merged = false;
        for (std::size_t i = 0; i < groups.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < groups.size() && !merged; ++j)
                if (gw[i] + gw[j] <= w) {
                    groups[i] = set_union(groups[i], groups[j]);
                    gw[i] += gw[j];
                    groups.erase(groups.begin() + j);
                    gw.erase(gw.begin() + j);
                    merged = true;
                }
    }

    Rat outside(0);
    for (const auto& c : comps) outside += gamma.sum(c);
    long long m = static_cast<long long>(groups.size());
    long long m_bound = std::max<long long>(ceil_rat(Rat(2) * outside / w) - 1, 1);
    certify(m <= m_bound, "pseudo-components-m", "m <= ceil(2*gamma(G-X)/w)-1");
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j)
            certify(gw[i] + gw[j] > w, "pseudo-components-pair",
                    "any two pseudo-components together exceed w");

    for (auto& grp : groups) sep.parts.push_back(g.induced(set_union(grp, x_set)));
    return sep;
}

Separation gen_separation(const Graph& g, const Weighting& gamma, const TreeDecomposition& td,
                          const Rat& beta) {
    if (beta <= Rat(0)) throw UserError("gen_separation: beta must be positive");
    Rat total(0);
    for (int v : g.vertices()) total += gamma[v];
    long long q = ceil_rat(Rat(1) / beta) - 1;

    if (total == Rat(0)) {
        Separation sep;
        if (!g.empty()) sep.parts.push_back(g);
        return sep;
    }
    auto x_set = treewidth_sep(g, gamma, td, static_cast<int>(q));
    Rat w = beta * total;
    auto sep = pseudo_components(g, gamma, x_set, w);
    certify(static_cast<long long>(sep.x_set.size()) <= q * (width(td) + 1),
            "gen-separation-x", "|X| <= (ceil(1/beta)-1)(k+1)");
    certify(sep.m() <= ceil_rat(Rat(2) / beta) - 1, "gen-separation-m",
            "m <= ceil(2/beta)-1");
    return sep;
}

Separation separation_set_sep(const Graph& g, const TreeDecomposition& td,
                              const std::vector<int>& s_set, const Rat& beta) {
    auto gamma = Weighting::indicator(g, s_set);
    auto sep = gen_separation(g, gamma, td, beta);
    while (sep.m() < 2) sep.parts.push_back(g.induced(sep.x_set));
    return sep;
}

}  // namespace tdr
