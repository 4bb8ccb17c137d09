#include "tdrefine/slick.hpp"

#include <algorithm>

#include "tdrefine/errors.hpp"
#include "tdrefine/separators.hpp"

namespace tdr {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Recursion driver. Frames keep only compact vertex lists; the working
// subgraph and restricted decomposition are rebuilt from the originals and
// released before descending, so deep recursions stay cheap.
struct SlickBuild {
    const Graph& g0;
    const TreeDecomposition& td0;
    int ell, t;
    BuildCounters* counters;

    struct ChildSpec {
        std::vector<int> verts;
        std::vector<int> seed;
    };

    TreeDecomposition rec(const std::vector<int>& verts, std::vector<int> r_set) {
        const int n = static_cast<int>(verts.size());
        const long long bag_cap = 2LL * t + 3LL * ell;
        if (n <= bag_cap) {
            if (counters) ++counters->alpha_beta_base;
            return single_bag(verts);
        }
        if (counters) ++counters->alpha_beta_recursive;

        const long long seed_size = 2LL * t + 2LL * ell;
        std::vector<int> x_set;
        std::vector<ChildSpec> specs;
        {
            Graph g = g0.induced(verts);
            auto td = restrict_decomposition(td0, g);

            for (int v : verts) {
                if (static_cast<long long>(r_set.size()) >= seed_size) break;
                if (!set_contains(r_set, v))
                    r_set.insert(std::lower_bound(r_set.begin(), r_set.end(), v), v);
            }
            certify(static_cast<long long>(r_set.size()) == seed_size, "alpha-beta-seed",
                    "seed padded to 2t+2l");

            x_set = set_sep(g, td, r_set, 2);
            certify(static_cast<int>(x_set.size()) <= ell, "alpha-beta-separator",
                    "set_sep with q=2 must return at most l vertices");

            auto gamma = Weighting::indicator(g, r_set);
            auto sep = pseudo_components(g, gamma, x_set, Rat(t));
            const int m = sep.m();
            certify(m >= 3, "alpha-beta-m-low", "m >= 3 in every non-base step");
            certify(m <= 3 + ceil_div(4LL * ell, t), "alpha-beta-m-high", "m <= 3+ceil(4l/t)");

            for (const auto& part : sep.parts) {
                auto c_verts = set_difference(part.vertices(), x_set);
                auto r_i = set_union(x_set, set_intersection(r_set, c_verts));
                certify(static_cast<long long>(r_i.size()) <= static_cast<long long>(t) + ell,
                        "alpha-beta-ri", "|R_i| <= t+l");
                std::vector<int> r_minus;
                std::vector<int> r_second;
                for (int v : r_i) {
                    int fresh = -1;
                    bool all_inside = true;
                    for (int u : part.neighbors(v)) {
                        if (!set_contains(r_i, u)) {
                            all_inside = false;
                            fresh = u;  // sorted adjacency: first hit is the smallest id
                            break;
                        }
                    }
                    if (all_inside) {
                        r_minus.push_back(v);
                    } else {
                        r_second.push_back(v);
                        r_second.push_back(fresh);
                    }
                }
                std::sort(r_second.begin(), r_second.end());
                r_second.erase(std::unique(r_second.begin(), r_second.end()), r_second.end());
                certify(static_cast<long long>(r_second.size()) <= seed_size,
                        "alpha-beta-rsecond", "|R''_i| <= 2t+2l");

                ChildSpec spec;
                spec.verts = set_difference(part.vertices(), r_minus);
                certify(static_cast<int>(spec.verts.size()) < n, "alpha-beta-shrink",
                        "every recursive call strictly decreases |V(G)|");
                spec.seed = std::move(r_second);
                specs.push_back(std::move(spec));
            }
        }  // working subgraph and separation released before descending

        std::vector<TreeDecomposition> children;
        children.reserve(specs.size());
        for (auto& spec : specs) children.push_back(rec(spec.verts, std::move(spec.seed)));

        int total = 1;
        for (const auto& c : children) total += c.tree.size();
        std::vector<int> parent(total, 0);
        TreeDecomposition out;
        out.bags.resize(total);
        out.bags[0] = set_union(x_set, r_set);
        certify(static_cast<long long>(out.bags[0].size()) <= bag_cap, "alpha-beta-root-bag",
                "|B_r| <= 2t+3l");
        int base = 1;
        for (const auto& c : children) {
            for (int x = 0; x < c.tree.size(); ++x) {
                int nx = base + x;
                parent[nx] = x == c.tree.root() ? 0 : base + c.tree.parent(x);
                out.bags[nx] = c.bags[x];
            }
            base += c.tree.size();
        }
        out.tree = RootedTree::from_parents(parent, 0);
        out.kind = DecompKind::strong;
        out.graph_universe = g0.universe();
        return out;
    }

    TreeDecomposition single_bag(const std::vector<int>& verts) const {
        TreeDecomposition td;
        td.tree = RootedTree::single();
        td.bags = {verts};
        td.kind = DecompKind::strong;
        td.graph_universe = g0.universe();
        return td;
    }
};

}  // namespace

TreeDecomposition alpha_beta(const Graph& g, const TreeDecomposition& td, int ell, int t,
                             const std::vector<int>& r_seed, BuildCounters* counters) {
    if (ell < 1 || t < 1) throw UserError("alpha_beta: l and t must be positive");
    int k = std::max(width(td), 0);
    if (ell < 2 * (k + 1))
        throw UserError("alpha_beta: l=" + std::to_string(ell) +
                        " too small for witness width " + std::to_string(k) +
                        " (needs l >= 2(k+1))");
    if (t < 2 * ell)
        throw UserError("alpha_beta: t must be at least 2l for the separator guarantee");
    if (static_cast<long long>(r_seed.size()) > 2LL * t + 2LL * ell)
        throw UserError("alpha_beta: seed larger than 2t+2l");
    for (int v : r_seed)
        if (!g.has_vertex(v)) throw UserError("alpha_beta: seed vertex not in graph");
    auto seed = r_seed;
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

    SlickBuild build{g, td, ell, t, counters};
    auto out = build.rec(g.vertices(), seed);

    certify(is_subset(seed, out.bags[out.tree.root()]), "alpha-beta-seed-in-root",
            "R must end up inside the root bag");
    for (const auto& b : out.bags)
        certify(static_cast<long long>(b.size()) <= 2LL * t + 3LL * ell, "alpha-beta-bag",
                "|B_x| <= 2t+3l");
    certify(out.tree.max_degree() <= 4 + ceil_div(4LL * ell, t), "alpha-beta-degree",
            "max degree <= 4+ceil(4l/t)");
    certify(out.tree.degree(out.tree.root()) <= 3 + ceil_div(4LL * ell, t),
            "alpha-beta-root-degree", "root degree <= 3+ceil(4l/t)");
    return out;
}

TreeDecomposition slick_main(const Graph& g, const TreeDecomposition& td,
                             BuildCounters* counters) {
    int k = std::max(width(td), 0);
    int ell = 2 * (k + 1);
    int t = 2 * ell;
    auto out = alpha_beta(g, td, ell, t, {}, counters);

    certify(validate_ok(g, out), "slick-main-valid", "output must be a valid strong td");
    certify(is_slick(g, out, 1).ok, "slick-main-slick", "output must be slick");
    certify(width(out) <= 14 * k + 13, "slick-main-width", "width <= 14k+13");
    certify(degree(out) <= 6, "slick-main-degree", "degree <= 6");
    certify(spread_bound_check(g, out, 1) == -1, "slick-main-spread",
            "spread(v) <= deg(v)+1 everywhere");
    return out;
}

}  // namespace tdr
