#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "tdrefine/errors.hpp"
#include "tdrefine/generators.hpp"
#include "tdrefine/graph.hpp"
#include "test_util.hpp"

using namespace tdr;

namespace {

// independent union-find component oracle
std::vector<std::vector<int>> uf_components(const Graph& g) {
    std::vector<int> parent(g.universe());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    g.for_each_edge([&](int v, int w) { parent[find(v)] = find(w); });
    std::vector<std::vector<int>> by_root(g.universe());
    for (int v : g.vertices()) by_root[find(v)].push_back(v);
    std::vector<std::vector<int>> comps;
    for (auto& c : by_root)
        if (!c.empty()) {
            std::sort(c.begin(), c.end());
            comps.push_back(c);
        }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return comps;
}

}  // namespace

TEST_CASE("induced subgraph of C4 minus a vertex is a path") {
    auto g = make_cycle(4);
    auto h = g.induced({0, 1, 2});
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 2);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
    CHECK_FALSE(h.has_edge(0, 2));
}

TEST_CASE("induced subgraph on the empty set") {
    auto g = make_cycle(4);
    auto h = g.induced({});
    CHECK(h.num_vertices() == 0);
    CHECK(h.num_edges() == 0);
    CHECK(h.empty());
}

TEST_CASE("induced middle row of the 3x3 grid is P3") {
    auto g = make_grid(3);
    auto h = g.induced({3, 4, 5});
    CHECK(h.num_edges() == 2);
    CHECK(h.has_edge(3, 4));
    CHECK(h.has_edge(4, 5));
}

TEST_CASE("induced rejects unknown ids") {
    auto g = make_path(3);
    CHECK_THROWS_AS((void)g.induced({0, 7}), UserError);
    auto h = g.induced({0, 1});
    CHECK_THROWS_AS((void)h.induced({2}), UserError);
}

TEST_CASE("components: connected, edgeless, disjoint union") {
    CHECK(make_cycle(5).components().size() == 1);
    CHECK(make_cycle(5).components()[0].size() == 5);

    auto edgeless = Graph::from_edges(4, {});
    auto comps = edgeless.components();
    REQUIRE(comps.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(comps[i] == std::vector<int>{i});

    // C4 plus a disjoint P2
    auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}});
    comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(comps[1] == std::vector<int>{4, 5});
}

TEST_CASE("generator shapes") {
    auto grid = make_grid(3);
    CHECK(grid.num_vertices() == 9);
    CHECK(grid.num_edges() == 12);

    auto fan = make_fan(5);
    CHECK(fan.num_vertices() == 5);
    CHECK(fan.num_edges() == 7);  // (n-2) path edges + (n-1) apex edges
    CHECK(fan.degree(4) == 4);

    auto k4 = make_complete(4);
    CHECK(k4.num_edges() == 6);

    CHECK_THROWS_AS(make_cycle(2), UserError);
    CHECK_THROWS_AS((void)generate("nosuch", {}, 0), UserError);
    CHECK_THROWS_AS(make_random_gnm(4, 7, 0), UserError);
}

TEST_CASE("random generators are reproducible from the seed") {
    auto a = make_random_gnm(30, 60, 7);
    auto b = make_random_gnm(30, 60, 7);
    auto c = make_random_gnm(30, 60, 8);
    CHECK(a.num_edges() == 60);
    bool same = true, diff = false;
    a.for_each_edge([&](int v, int w) { same = same && b.has_edge(v, w); });
    c.for_each_edge([&](int v, int w) { diff = diff || !a.has_edge(v, w); });
    CHECK(same);
    CHECK(diff);

    auto t1 = make_random_tree(40, 3);
    auto t2 = make_random_tree(40, 3);
    CHECK(t1.num_edges() == 39);
    bool tsame = true;
    t1.for_each_edge([&](int v, int w) { tsame = tsame && t2.has_edge(v, w); });
    CHECK(tsame);
}

TEST_CASE("partial k-tree keeps treewidth witnessable") {
    auto g = make_random_partial_ktree(60, 3, 100, 5);
    // a full k-tree on n > k vertices has exactly k*n - k(k+1)/2 edges
    CHECK(g.num_edges() == 3 * 60 - 6);
}

TEST_CASE("components agree with union-find oracle on random induced subgraphs") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        std::uniform_int_distribution<int> nd(1, 9);
        int n = nd(rng);
        auto g = tdtest::random_graph(n, 0.35, rng);
        // random induced subset
        std::vector<int> s;
        std::bernoulli_distribution keep(0.7);
        for (int v = 0; v < n; ++v)
            if (keep(rng)) s.push_back(v);
        auto h = g.induced(s);
        CHECK(h.components() == uf_components(h));
    }
}

TEST_CASE("degree sum is twice the edge count across generators") {
    std::vector<Graph> gs = {make_path(9),         make_cycle(11),       make_grid(4),
                             make_fan(9),          make_complete(6),     make_random_gnm(25, 40, 1),
                             make_random_tree(20, 2)};
    for (const auto& g : gs) {
        long long total = 0;
        for (int v : g.vertices()) total += g.degree(v);
        CHECK(total == 2 * g.num_edges());
        auto h = g.induced(std::vector<int>(g.vertices().begin(),
                                            g.vertices().begin() + g.num_vertices() / 2));
        long long ht = 0;
        for (int v : h.vertices()) ht += h.degree(v);
        CHECK(ht == 2 * h.num_edges());
    }
}

TEST_CASE("components form a partition with no crossing edges") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        auto g = tdtest::random_graph(8, 0.3, rng);
        auto comps = g.components();
        std::vector<int> seen(g.universe(), -1);
        int ci = 0;
        for (const auto& c : comps) {
            for (int v : c) {
                CHECK(seen[v] == -1);
                seen[v] = ci;
            }
            ++ci;
        }
        for (int v : g.vertices()) CHECK(seen[v] >= 0);
        g.for_each_edge([&](int v, int w) { CHECK(seen[v] == seen[w]); });
    }
}

TEST_CASE("weighting totals stay exact") {
    auto g = make_path(5);
    Weighting w(g.universe());
    w.set(0, Rat(1, 3));
    w.set(1, Rat(2, 3));
    w.set(2, Rat(1));
    CHECK(w.total() == Rat(2));
    w.set(0, Rat(0));
    CHECK(w.total() == Rat(5, 3));
    CHECK(w.sum({1, 2}) == Rat(5, 3));
    CHECK_THROWS_AS(w.set(1, Rat(-1)), UserError);
}
