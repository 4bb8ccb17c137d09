#include "tdrefine/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "tdrefine/errors.hpp"

namespace tdr {
namespace oracle {

namespace {

// Decomposition from an elimination order via the fill-in cliques (dense
// matrix; exact-budget scale only). verts/order are local indices.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& verts,
                                           const std::vector<int>& order) {
    const int n = static_cast<int>(verts.size());
    std::vector<int> local(g.universe(), -1);
    for (int i = 0; i < n; ++i) local[verts[i]] = i;

    std::vector<std::vector<char>> fill(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int w : g.neighbors(verts[i])) fill[i][local[w]] = 1;

    std::vector<int> pos(n);
    for (int step = 0; step < n; ++step) pos[order[step]] = step;

    TreeDecomposition td;
    td.graph_universe = g.universe();
    td.kind = DecompKind::strong;
    td.bags.assign(n, {});
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);

    for (int step = 0; step < n; ++step) {
        int u = order[step];
        std::vector<int> later;
        for (int w = 0; w < n; ++w)
            if (fill[u][w] && pos[w] > step) later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                fill[later[a]][later[b]] = fill[later[b]][later[a]] = 1;
        td.bags[u].push_back(verts[u]);
        for (int w : later) td.bags[u].push_back(verts[w]);
        std::sort(td.bags[u].begin(), td.bags[u].end());
        if (!later.empty()) {
            int nxt = *std::min_element(later.begin(), later.end(),
                                        [&](int a, int b) { return pos[a] < pos[b]; });
            parent[u] = nxt;
        } else if (step + 1 < n) {
            parent[u] = order[step + 1];
        }
    }
    td.tree = RootedTree::from_parents(parent, order[n - 1]);
    return td;
}

// number of vertices outside S∪{v} reachable from v through S
int q_through(const std::vector<std::uint32_t>& adj, int n, std::uint32_t s_mask, int v) {
    std::uint32_t seen = adj[v];
    for (;;) {
        std::uint32_t frontier = seen & s_mask;
        std::uint32_t grow = 0;
        while (frontier) {
            int u = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            grow |= adj[u];
        }
        grow &= ~seen;
        if (!grow) break;
        seen |= grow;
    }
    std::uint32_t outside = seen & ~s_mask & ~(1u << v);
    outside &= (n >= 32 ? ~0u : ((1u << n) - 1));
    return __builtin_popcount(outside);
}

template <bool Parallel>
ExactTreewidth exact_impl(const Graph& g, const OracleBudget& budget) {
    const int n = g.num_vertices();
    if (n > budget.max_vertices)
        throw UserError("exact_treewidth: " + std::to_string(n) + " vertices exceeds budget " +
                        std::to_string(budget.max_vertices));
    if (n > 26) throw UserError("exact_treewidth: hard cap is 26 vertices");
    ExactTreewidth out;
    if (n == 0) {
        out.width = -1;
        out.witness.tree = RootedTree::single();
        out.witness.bags = {{}};
        out.witness.kind = DecompKind::strong;
        out.witness.graph_universe = g.universe();
        return out;
    }
    const auto& verts = g.vertices();
    std::vector<int> local(g.universe(), -1);
    for (int i = 0; i < n; ++i) local[verts[i]] = i;
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int w : g.neighbors(verts[i])) adj[i] |= 1u << local[w];

    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::int8_t> f(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::int8_t> choice(static_cast<std::size_t>(full) + 1, -1);
    f[0] = -1;

    std::vector<std::vector<std::uint32_t>> layers(n + 1);
    for (std::uint32_t s = 1; s <= full; ++s) layers[__builtin_popcount(s)].push_back(s);

    for (int layer = 1; layer <= n; ++layer) {
        auto& masks = layers[layer];
        const int cnt = static_cast<int>(masks.size());
#pragma omp parallel for schedule(dynamic, 256) if (Parallel)
        for (int mi = 0; mi < cnt; ++mi) {
            std::uint32_t s = masks[mi];
            int best = std::numeric_limits<int>::max();
            int best_v = -1;
            std::uint32_t it = s;
            while (it) {
                int v = __builtin_ctz(it);
                it &= it - 1;
                std::uint32_t rest = s & ~(1u << v);
                int cost = std::max<int>(f[rest], q_through(adj, n, rest, v));
                if (cost < best) {
                    best = cost;
                    best_v = v;
                }
            }
            f[s] = static_cast<std::int8_t>(best);
            choice[s] = static_cast<std::int8_t>(best_v);
        }
    }

    out.width = f[full];
    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[s];
        order[i] = v;
        s &= ~(1u << v);
    }
    out.witness = decomposition_from_order(g, verts, order);
    certify(width(out.witness) == out.width, "exact-tw-witness",
            "witness width must match the DP optimum");
    certify(verify_decomposition_bruteforce(g, out.witness), "exact-tw-witness-valid",
            "witness must be a valid decomposition");
    return out;
}

}  // namespace

ExactTreewidth exact_treewidth(const Graph& g, const OracleBudget& budget) {
    return exact_impl<true>(g, budget);
}

ExactTreewidth exact_treewidth_serial(const Graph& g, const OracleBudget& budget) {
    return exact_impl<false>(g, budget);
}

// --- naive definitional checks (no shared helpers with the fast path) -------

bool verify_decomposition_bruteforce(const Graph& g, const TreeDecomposition& td) {
    if (td.graph_universe != g.universe()) return false;
    const int nodes = td.tree.size();
    for (int x = 0; x < nodes; ++x)
        for (int v : td.bags[x])
            if (!g.has_vertex(v)) return false;

    // tree adjacency rebuilt from parent links
    std::vector<std::vector<int>> nb(nodes);
    for (int x = 0; x < nodes; ++x)
        if (x != td.tree.root()) {
            nb[x].push_back(td.tree.parent(x));
            nb[td.tree.parent(x)].push_back(x);
        }

    auto in_bag = [&](int x, int v) {
        for (int u : td.bags[x])
            if (u == v) return true;
        return false;
    };

    for (int v : g.vertices()) {
        std::vector<int> holders;
        for (int x = 0; x < nodes; ++x)
            if (in_bag(x, v)) holders.push_back(x);
        if (holders.empty()) return false;
        std::vector<char> mark(nodes, 0), inh(nodes, 0);
        for (int x : holders) inh[x] = 1;
        std::function<void(int)> flood = [&](int x) {
            mark[x] = 1;
            for (int y : nb[x])
                if (inh[y] && !mark[y]) flood(y);
        };
        flood(holders[0]);
        for (int x : holders)
            if (!mark[x]) return false;
        if (td.kind == DecompKind::partition && holders.size() > 1) return false;
    }

    bool edges_ok = true;
    g.for_each_edge([&](int v, int w) {
        if (!edges_ok) return;
        bool found = false;
        for (int x = 0; x < nodes && !found; ++x) {
            if (in_bag(x, v) && in_bag(x, w)) found = true;
            if (td.kind != DecompKind::strong && !found)
                for (int y : nb[x]) {
                    bool v_in = in_bag(x, v) || in_bag(y, v);
                    bool w_in = in_bag(x, w) || in_bag(y, w);
                    if (v_in && w_in) {
                        found = true;
                        break;
                    }
                }
        }
        edges_ok = found;
    });
    return edges_ok;
}

bool verify_separator(const Graph& g, const Weighting& gamma, const std::vector<int>& x_set,
                      const Rat& bound) {
    std::vector<char> removed(g.universe(), 0);
    for (int v : x_set) removed[v] = 1;
    std::vector<char> seen(g.universe(), 0);
    for (int s : g.vertices()) {
        if (removed[s] || seen[s]) continue;
        Rat weight(0);
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            weight += gamma[v];
            for (int w : g.neighbors(v))
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (weight > bound) return false;
    }
    return true;
}

int oracle_spread(const TreeDecomposition& td, int v) {
    int count = 0;
    for (const auto& bag : td.bags)
        for (int u : bag)
            if (u == v) ++count;
    return count;
}

bool oracle_is_slick(const Graph& g, const TreeDecomposition& td, int s) {
    for (int y = 0; y < td.tree.size(); ++y) {
        if (y == td.tree.root()) continue;
        int x = td.tree.parent(y);
        for (int v : td.bags[y]) {
            bool shared = false;
            for (int u : td.bags[x]) shared = shared || u == v;
            if (!shared) continue;
            int fresh = 0;
            for (int u : g.neighbors(v)) {
                bool in_y = false, in_x = false;
                for (int t : td.bags[y]) in_y = in_y || t == u;
                for (int t : td.bags[x]) in_x = in_x || t == u;
                if (in_y && !in_x) ++fresh;
            }
            if (fresh < s) return false;
        }
    }
    return true;
}

// --- minimum-fill heuristic ---------------------------------------------------

TreeDecomposition min_fill_heuristic(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) {
        TreeDecomposition td;
        td.tree = RootedTree::single();
        td.bags = {{}};
        td.kind = DecompKind::strong;
        td.graph_universe = g.universe();
        return td;
    }
    const auto& verts = g.vertices();
    std::vector<int> local(g.universe(), -1);
    for (int i = 0; i < n; ++i) local[verts[i]] = i;

    const int words = (n + 63) / 64;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * words, 0);
    auto row = [&](int v) { return &adj[static_cast<std::size_t>(v) * words]; };
    auto set_bit = [&](int a, int b) { row(a)[b / 64] |= 1ull << (b % 64); };
    auto get_bit = [&](int a, int b) { return row(a)[b / 64] >> (b % 64) & 1; };
    std::vector<std::vector<int>> nbr(n);
    for (int i = 0; i < n; ++i)
        for (int w : g.neighbors(verts[i])) {
            set_bit(i, local[w]);
            nbr[i].push_back(local[w]);
        }
    std::vector<char> alive(n, 1);

    std::vector<std::uint64_t> scratch(words);
    auto fill_count = [&](int v) -> long long {
        // pairs of alive fill-neighbors of v that are themselves non-adjacent
        for (int w = 0; w < words; ++w) scratch[w] = 0;
        for (int a : nbr[v])
            if (alive[a]) scratch[a / 64] |= 1ull << (a % 64);
        long long total = 0;
        for (int a : nbr[v]) {
            if (!alive[a]) continue;
            const std::uint64_t* ra = row(a);
            for (int w = 0; w < words; ++w)
                total += __builtin_popcountll(scratch[w] & ~ra[w]);
            --total;  // a itself sits in scratch but never in its own row
        }
        return total / 2;
    };

    using Entry = std::pair<long long, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    std::vector<char> dirty(n, 0);
    std::vector<long long> cached(n);
    for (int v = 0; v < n; ++v) {
        cached[v] = fill_count(v);
        heap.push({cached[v], v});
    }

    std::vector<int> order;
    order.reserve(n);
    TreeDecomposition td;
    td.graph_universe = g.universe();
    td.kind = DecompKind::strong;
    td.bags.assign(n, {});
    std::vector<int> pos(n, -1);

    for (int step = 0; step < n; ++step) {
        int u = -1;
        while (true) {
            auto [key, v] = heap.top();
            heap.pop();
            if (!alive[v] || key != cached[v]) continue;  // stale
            if (dirty[v]) {
                dirty[v] = 0;
                cached[v] = fill_count(v);
                heap.push({cached[v], v});
                continue;
            }
            u = v;
            break;
        }
        std::vector<int> reach;
        for (int a : nbr[u])
            if (alive[a]) reach.push_back(a);
        std::sort(reach.begin(), reach.end());
        reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
        for (std::size_t i = 0; i < reach.size(); ++i)
            for (std::size_t j = i + 1; j < reach.size(); ++j) {
                int a = reach[i], b = reach[j];
                if (!get_bit(a, b)) {
                    set_bit(a, b);
                    set_bit(b, a);
                    nbr[a].push_back(b);
                    nbr[b].push_back(a);
                }
            }
        alive[u] = 0;
        for (int a : reach) {
            dirty[a] = 1;
            for (int b : nbr[a])
                if (alive[b]) dirty[b] = 1;
        }
        td.bags[u].push_back(verts[u]);
        for (int a : reach) td.bags[u].push_back(verts[a]);
        std::sort(td.bags[u].begin(), td.bags[u].end());
        pos[u] = step;
        order.push_back(u);
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int step = 0; step < n; ++step) {
        int u = order[step];
        int nxt = -1;
        for (int w : td.bags[u]) {
            int lw = local[w];
            if (lw == u) continue;
            if (nxt == -1 || pos[lw] < pos[nxt]) nxt = lw;
        }
        if (nxt != -1)
            parent[u] = nxt;
        else if (step + 1 < n)
            parent[u] = order[step + 1];
    }
    td.tree = RootedTree::from_parents(parent, order[n - 1]);
    certify(validate_ok(g, td), "min-fill-valid", "min-fill decomposition must be valid");
    return td;
}

TreeDecomposition width_witness(const Graph& g, const OracleBudget& budget) {
    if (g.num_vertices() <= budget.max_vertices) return exact_treewidth(g, budget).witness;
    return min_fill_heuristic(g);
}

}  // namespace oracle
}  // namespace tdr
