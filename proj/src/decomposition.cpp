#include "tdrefine/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "tdrefine/errors.hpp"

namespace tdr {

std::string kind_name(DecompKind k) {
    switch (k) {
        case DecompKind::strong: return "strong";
        case DecompKind::weak: return "weak";
        case DecompKind::partition: return "partition";
    }
    return "?";
}

DecompKind kind_from_name(const std::string& s) {
    if (s == "strong") return DecompKind::strong;
    if (s == "weak") return DecompKind::weak;
    if (s == "partition") return DecompKind::partition;
    throw UserError("unknown decomposition kind: " + s);
}

TreeDecomposition single_bag_decomposition(const Graph& g, DecompKind kind) {
    TreeDecomposition td;
    td.tree = RootedTree::single();
    td.bags = {g.vertices()};
    td.kind = kind;
    td.graph_universe = g.universe();
    return td;
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const Graph& sub) {
    TreeDecomposition out;
    out.tree = td.tree;
    out.kind = td.kind;
    out.graph_universe = td.graph_universe;
    out.bags.resize(td.bags.size());
    for (std::size_t x = 0; x < td.bags.size(); ++x)
        for (int v : td.bags[x])
            if (sub.has_vertex(v)) out.bags[x].push_back(v);
    return out;
}

int width(const TreeDecomposition& td) {
    std::size_t mx = 0;
    for (const auto& b : td.bags) mx = std::max(mx, b.size());
    int m = static_cast<int>(mx);
    return td.kind == DecompKind::partition ? m : m - 1;
}

int order(const TreeDecomposition& td) { return td.tree.size(); }

int degree(const TreeDecomposition& td) { return td.tree.max_degree(); }

int spread(const TreeDecomposition& td, int v) {
    int s = 0;
    for (const auto& b : td.bags) s += set_contains(b, v) ? 1 : 0;
    return s;
}

std::vector<int> spreads(const TreeDecomposition& td) {
    std::vector<int> s(td.graph_universe, 0);
    for (const auto& b : td.bags)
        for (int v : b)
            if (v >= 0 && v < td.graph_universe) ++s[v];
    return s;
}

int max_spread(const TreeDecomposition& td) {
    auto s = spreads(td);
    return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
}

// --- validation --------------------------------------------------------------

std::string Violation::to_string() const {
    std::ostringstream os;
    switch (type) {
        case Type::bag_unknown_vertex:
            os << "bag " << node << " contains unknown vertex " << a;
            break;
        case Type::vertex_uncovered:
            os << "vertex " << a << " appears in no bag";
            break;
        case Type::vertex_disconnected:
            os << "occupancy of vertex " << a << " is disconnected in the tree";
            break;
        case Type::edge_uncovered:
            os << "edge " << a << "-" << b << " not covered";
            break;
        case Type::bags_not_disjoint:
            os << "vertex " << a << " appears in " << b << " bags of a partition";
            break;
    }
    return os.str();
}

std::string ValidationReport::text() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.to_string() << "\n";
    return os.str();
}

namespace {

// occupancy[v] = sorted list of tree nodes whose bag holds v
std::vector<std::vector<int>> occupancy(const Graph& g, const TreeDecomposition& td) {
    std::vector<std::vector<int>> occ(g.universe());
    for (int x = 0; x < td.tree.size(); ++x)
        for (int v : td.bags[x])
            if (v >= 0 && v < g.universe()) occ[v].push_back(x);
    return occ;
}

// The occupancy set is connected iff exactly one of its nodes has its parent
// outside the set (or is the tree root).
bool occupancy_connected(const RootedTree& tree, const std::vector<int>& occ) {
    if (occ.empty()) return false;
    int tops = 0;
    for (int x : occ) {
        int p = tree.parent(x);
        if (x == tree.root() || !set_contains(occ, p)) ++tops;
    }
    return tops == 1;
}

bool strong_edge_covered(const std::vector<int>& ov, const std::vector<int>& ow) {
    return !set_intersection(ov, ow).empty();
}

bool weak_edge_covered(const RootedTree& tree, const std::vector<int>& ov,
                       const std::vector<int>& ow) {
    if (strong_edge_covered(ov, ow)) return true;
    for (int x : ov)
        if (x != tree.root() && set_contains(ow, tree.parent(x))) return true;
    for (int y : ow)
        if (y != tree.root() && set_contains(ov, tree.parent(y))) return true;
    return false;
}

}  // namespace

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
    if (td.graph_universe != g.universe())
        throw UserError("decomposition universe (" + std::to_string(td.graph_universe) +
                        ") does not match graph universe (" + std::to_string(g.universe()) + ")");
    ValidationReport rep;
    for (int x = 0; x < td.tree.size(); ++x)
        for (int v : td.bags[x])
            if (!g.has_vertex(v))
                rep.violations.push_back({Violation::Type::bag_unknown_vertex, v, -1, x});

    auto occ = occupancy(g, td);
    for (int v : g.vertices()) {
        if (occ[v].empty())
            rep.violations.push_back({Violation::Type::vertex_uncovered, v, -1, -1});
        else if (!occupancy_connected(td.tree, occ[v]))
            rep.violations.push_back({Violation::Type::vertex_disconnected, v, -1, -1});
    }

    g.for_each_edge([&](int v, int w) {
        bool covered = td.kind == DecompKind::strong
                           ? strong_edge_covered(occ[v], occ[w])
                           : weak_edge_covered(td.tree, occ[v], occ[w]);
        if (!covered)
            rep.violations.push_back({Violation::Type::edge_uncovered, v, w, -1});
    });

    if (td.kind == DecompKind::partition)
        for (int v : g.vertices())
            if (occ[v].size() > 1)
                rep.violations.push_back(
                    {Violation::Type::bags_not_disjoint, v, static_cast<int>(occ[v].size()), -1});
    return rep;
}

namespace {

template <bool Parallel>
bool validate_ok_impl(const Graph& g, const TreeDecomposition& td) {
    if (td.graph_universe != g.universe()) return false;
    for (int x = 0; x < td.tree.size(); ++x)
        for (int v : td.bags[x])
            if (!g.has_vertex(v)) return false;

    auto occ = occupancy(g, td);
    const auto& verts = g.vertices();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.num_edges());
    g.for_each_edge([&](int v, int w) { edges.push_back({v, w}); });

    std::atomic<bool> bad{false};
    const int nv = static_cast<int>(verts.size());
#pragma omp parallel for schedule(static) if (Parallel)
    for (int i = 0; i < nv; ++i) {
        if (bad.load(std::memory_order_relaxed)) continue;
        int v = verts[i];
        if (occ[v].empty() || !occupancy_connected(td.tree, occ[v]))
            bad.store(true, std::memory_order_relaxed);
        else if (td.kind == DecompKind::partition && occ[v].size() > 1)
            bad.store(true, std::memory_order_relaxed);
    }
    if (bad.load()) return false;

    const int ne = static_cast<int>(edges.size());
#pragma omp parallel for schedule(static) if (Parallel)
    for (int i = 0; i < ne; ++i) {
        if (bad.load(std::memory_order_relaxed)) continue;
        auto [v, w] = edges[i];
        bool covered = td.kind == DecompKind::strong
                           ? strong_edge_covered(occ[v], occ[w])
                           : weak_edge_covered(td.tree, occ[v], occ[w]);
        if (!covered) bad.store(true, std::memory_order_relaxed);
    }
    return !bad.load();
}

}  // namespace

bool validate_ok(const Graph& g, const TreeDecomposition& td) {
    return validate_ok_impl<true>(g, td);
}

bool validate_ok_serial(const Graph& g, const TreeDecomposition& td) {
    return validate_ok_impl<false>(g, td);
}

// --- slickness ----------------------------------------------------------------

SlickWitness is_slick(const Graph& g, const TreeDecomposition& td, int s) {
    for (int y = 0; y < td.tree.size(); ++y) {
        if (y == td.tree.root()) continue;
        int x = td.tree.parent(y);
        const auto& bx = td.bags[x];
        const auto& by = td.bags[y];
        for (int v : set_intersection(bx, by)) {
            int fresh = 0;
            for (int u : g.neighbors(v))
                if (set_contains(by, u) && !set_contains(bx, u)) ++fresh;
            if (fresh < s) return {false, y, v};
        }
    }
    return {};
}

int spread_bound_check(const Graph& g, const TreeDecomposition& td, int s) {
    auto sp = spreads(td);
    for (int v : g.vertices())
        if (static_cast<long long>(sp[v] - 1) * s > g.degree(v)) return v;
    return -1;
}

// --- smooth normalizer ---------------------------------------------------------

TreeDecomposition smooth_decomposition(const Graph& g, const TreeDecomposition& td,
                                       int target_width) {
    int w = std::max(width(td), target_width);
    int n = g.num_vertices();
    if (n <= w)
        throw UserError("no smooth decomposition: graph has " + std::to_string(n) +
                        " vertices, width " + std::to_string(w));

    // mutable unrooted copy
    int n0 = td.tree.size();
    std::vector<std::vector<int>> bags = td.bags;
    std::vector<std::vector<int>> adj(n0);
    std::vector<char> alive(n0, 1);
    for (int y = 0; y < n0; ++y)
        if (y != td.tree.root()) {
            adj[y].push_back(td.tree.parent(y));
            adj[td.tree.parent(y)].push_back(y);
        }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    auto detach = [&](int y, int x) {
        // contract y into neighbor x (bag[y] subset of bag[x])
        for (int z : adj[y]) {
            if (z == x) continue;
            adj[z].erase(std::find(adj[z].begin(), adj[z].end(), y));
            adj[z].insert(std::lower_bound(adj[z].begin(), adj[z].end(), x), x);
            adj[x].insert(std::lower_bound(adj[x].begin(), adj[x].end(), z), z);
        }
        adj[x].erase(std::find(adj[x].begin(), adj[x].end(), y));
        adj[y].clear();
        alive[y] = 0;
    };

    for (;;) {
        bool changed = false;
        // contract nested adjacent bags
        for (int x = 0; x < n0 && !changed; ++x) {
            if (!alive[x]) continue;
            for (int y : adj[x]) {
                if (is_subset(bags[y], bags[x])) {
                    detach(y, x);
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;
        // pad an undersized bag from a neighbor
        for (int x = 0; x < n0 && !changed; ++x) {
            if (!alive[x] || static_cast<int>(bags[x].size()) >= w + 1) continue;
            for (int y : adj[x]) {
                auto diff = set_difference(bags[y], bags[x]);
                if (!diff.empty()) {
                    bags[x].insert(
                        std::lower_bound(bags[x].begin(), bags[x].end(), diff[0]), diff[0]);
                    changed = true;
                    break;
                }
            }
            if (!changed && adj[x].empty()) {
                // lone node: bag must already be all of V(g)
                certify(static_cast<int>(bags[x].size()) == w + 1, "smooth-lone-bag",
                        "single node with undersized bag");
            }
        }
        if (!changed) break;
    }

    // subdivide multi-exchange edges, emitting the final node set
    struct Node {
        std::vector<int> bag;
        std::vector<std::pair<int, int>> edges;  // to earlier-emitted nodes only
    };
    std::vector<int> id_map(n0, -1);
    std::vector<std::vector<int>> out_bags;
    std::vector<std::pair<int, int>> out_edges;
    for (int x = 0; x < n0; ++x)
        if (alive[x]) {
            id_map[x] = static_cast<int>(out_bags.size());
            out_bags.push_back(bags[x]);
        }
    for (int x = 0; x < n0; ++x) {
        if (!alive[x]) continue;
        for (int y : adj[x]) {
            if (y < x) continue;  // each unrooted edge once
            auto a = set_difference(bags[x], bags[y]);
            auto b = set_difference(bags[y], bags[x]);
            certify(a.size() == b.size() && !a.empty(), "smooth-exchange",
                    "adjacent bags must differ symmetrically");
            int prev = id_map[x];
            std::vector<int> cur = bags[x];
            for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                cur.erase(std::find(cur.begin(), cur.end(), a[i]));
                cur.insert(std::lower_bound(cur.begin(), cur.end(), b[i]), b[i]);
                int fresh = static_cast<int>(out_bags.size());
                out_bags.push_back(cur);
                out_edges.push_back({prev, fresh});
                prev = fresh;
            }
            out_edges.push_back({prev, id_map[y]});
        }
    }

    // root at node 0, BFS to orient
    int total = static_cast<int>(out_bags.size());
    std::vector<std::vector<int>> nadj(total);
    for (auto [u, v] : out_edges) {
        nadj[u].push_back(v);
        nadj[v].push_back(u);
    }
    for (auto& a : nadj) std::sort(a.begin(), a.end());
    std::vector<int> parent(total, -1);
    parent[0] = 0;
    std::vector<int> bfs = {0};
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (int c : nadj[bfs[i]])
            if (parent[c] == -1) {
                parent[c] = bfs[i];
                bfs.push_back(c);
            }
    certify(static_cast<int>(bfs.size()) == total, "smooth-tree-connected",
            "normalized bag tree must stay connected");

    TreeDecomposition out;
    out.tree = RootedTree::from_parents(parent, 0);
    out.bags = std::move(out_bags);
    out.kind = DecompKind::strong;
    out.graph_universe = g.universe();

    for (const auto& b : out.bags)
        certify(static_cast<int>(b.size()) == w + 1, "smooth-bag-size",
                "every smooth bag has size width+1");
    certify(out.tree.size() == n - w, "smooth-order",
            "smooth decomposition has |V(G)|-k nodes, got " + std::to_string(out.tree.size()));
    certify(validate_ok(g, out), "smooth-valid", "normalized decomposition must stay valid");
    return out;
}

TreeDecomposition partition_to_decomposition(const Graph& g, const TreeDecomposition& tp) {
    auto rep = validate(g, tp);
    if (tp.kind != DecompKind::partition || !rep.ok())
        throw UserError("partition_to_decomposition: input is not a valid tree-partition");
    TreeDecomposition out;
    out.tree = tp.tree;
    out.kind = DecompKind::strong;
    out.graph_universe = tp.graph_universe;
    out.bags.resize(tp.bags.size());
    for (int x = 0; x < tp.tree.size(); ++x)
        out.bags[x] = x == tp.tree.root() ? tp.bags[x]
                                          : set_union(tp.bags[x], tp.bags[tp.tree.parent(x)]);
    certify(width(out) <= 2 * width(tp) - 1, "partition-to-strong-width",
            "width must be at most 2*tpw-1");
    certify(validate_ok(g, out), "partition-to-strong-valid", "output must be a valid strong td");
    return out;
}

TreeDecomposition drop_empty_bags(const TreeDecomposition& td) {
    int n = td.tree.size();
    std::vector<int> alive;
    for (int x = 0; x < n; ++x)
        if (!td.bags[x].empty()) alive.push_back(x);
    if (alive.empty()) {
        TreeDecomposition out;
        out.tree = RootedTree::single();
        out.bags = {{}};
        out.kind = td.kind;
        out.graph_universe = td.graph_universe;
        return out;
    }
    std::vector<int> id_map(n, -1);
    for (std::size_t i = 0; i < alive.size(); ++i) id_map[alive[i]] = static_cast<int>(i);

    // nearest non-empty strict ancestor; nodes without one hang off the new root
    auto anchor = [&](int x) {
        int p = x;
        while (p != td.tree.root()) {
            p = td.tree.parent(p);
            if (!td.bags[p].empty()) return p;
        }
        return -1;
    };
    int new_root_old = -1;
    for (int x : alive)
        if (anchor(x) == -1) {
            new_root_old = x;
            break;
        }
    std::vector<int> parent(alive.size());
    for (int x : alive) {
        int a = anchor(x);
        if (x == new_root_old)
            parent[id_map[x]] = id_map[x];
        else
            parent[id_map[x]] = id_map[a == -1 ? new_root_old : a];
    }
    TreeDecomposition out;
    out.tree = RootedTree::from_parents(parent, id_map[new_root_old]);
    out.bags.resize(alive.size());
    for (int x : alive) out.bags[id_map[x]] = td.bags[x];
    out.kind = td.kind;
    out.graph_universe = td.graph_universe;
    return out;
}

}  // namespace tdr
