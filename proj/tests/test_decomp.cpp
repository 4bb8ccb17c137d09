#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tdrefine/decomposition.hpp"
#include "tdrefine/errors.hpp"
#include "tdrefine/generators.hpp"
#include "tdrefine/oracle.hpp"
#include "test_util.hpp"

using namespace tdr;
using namespace tdtest;

TEST_CASE("width: strong vs partition counting") {
    auto g = make_complete(3);
    auto td = single_bag_decomposition(g);
    CHECK(width(td) == 2);
    td.kind = DecompKind::partition;
    CHECK(width(td) == 3);
}

TEST_CASE("grid row-pair decomposition has width 2n-1 and validates") {
    for (int side : {3, 4, 5}) {
        auto g = make_grid(side);
        auto td = grid_row_pairs(side);
        CHECK(width(td) == 2 * side - 1);
        CHECK(validate(g, td).ok());
        CHECK(order(td) == side - 1);
        CHECK(degree(td) <= 2);
    }
}

TEST_CASE("cycle fixture: v0 has spread n-2") {
    for (int n : {6, 10}) {
        auto g = make_cycle(n);
        auto td = cycle_fixture(n);
        CHECK(validate(g, td).ok());
        CHECK(width(td) == 2);
        CHECK(spread(td, 0) == n - 2);
        CHECK(spread(td, 1) == 1);
    }
}

TEST_CASE("spread on a star decomposition") {
    // K_{1,3}, center 0; bags {0,i} on a 3-node path tree
    auto g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    TreeDecomposition td;
    td.tree = RootedTree::from_parents({0, 0, 1}, 0);
    td.bags = {{0, 1}, {0, 2}, {0, 3}};
    td.kind = DecompKind::strong;
    td.graph_universe = 4;
    CHECK(validate(g, td).ok());
    CHECK(spread(td, 0) == 3);
    CHECK(max_spread(td) == 3);
}

TEST_CASE("single-bag metrics") {
    auto g = make_complete(4);
    auto td = single_bag_decomposition(g);
    CHECK(order(td) == 1);
    CHECK(degree(td) == 0);
    CHECK(max_spread(td) == 1);
}

TEST_CASE("validate reports witnesses for constructed violations") {
    // P3 with bags {0,1},{2}: edge 1-2 uncovered under strong, covered weak
    auto g = make_path(3);
    TreeDecomposition td;
    td.tree = RootedTree::from_parents({0, 0}, 0);
    td.bags = {{0, 1}, {2}};
    td.kind = DecompKind::strong;
    td.graph_universe = 3;
    auto rep = validate(g, td);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].type == Violation::Type::edge_uncovered);
    CHECK(rep.violations[0].a == 1);
    CHECK(rep.violations[0].b == 2);
    td.kind = DecompKind::weak;
    CHECK(validate(g, td).ok());

    // deleting an interior occupancy node disconnects a vertex
    auto c6 = make_cycle(6);
    auto fix = cycle_fixture(6);
    fix.bags[1] = {2, 3};  // drop vertex 0 from the middle bag
    auto rep2 = validate(c6, fix);
    bool found = false;
    for (const auto& v : rep2.violations)
        found = found || (v.type == Violation::Type::vertex_disconnected && v.a == 0);
    CHECK(found);

    // universe mismatch is an error, not a report
    CHECK_THROWS_AS((void)validate(make_path(4), fix), UserError);
}

TEST_CASE("partition validation checks disjointness") {
    auto g = make_path(3);
    TreeDecomposition td;
    td.tree = RootedTree::from_parents({0, 0}, 0);
    td.bags = {{0, 1}, {1, 2}};
    td.kind = DecompKind::partition;
    td.graph_universe = 3;
    auto rep = validate(g, td);
    bool found = false;
    for (const auto& v : rep.violations)
        found = found || (v.type == Violation::Type::bags_not_disjoint && v.a == 1);
    CHECK(found);

    td.bags = {{0, 1}, {2}};
    CHECK(validate(g, td).ok());
}

TEST_CASE("fast validators agree with the report validator") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        auto g = random_graph(7, 0.3, rng);
        auto td = random_bags(g, rng);
        for (auto kind : {DecompKind::strong, DecompKind::weak, DecompKind::partition}) {
            td.kind = kind;
            bool ref = validate(g, td).ok();
            CHECK(validate_ok(g, td) == ref);
            CHECK(validate_ok_serial(g, td) == ref);
        }
    }
}

TEST_CASE("slickness: vacuous, fixture failure, witness order") {
    // adjacent disjoint bags are slick for every s
    auto g = make_path(4);
    TreeDecomposition td;
    td.tree = RootedTree::from_parents({0, 0}, 0);
    td.bags = {{0, 1}, {2, 3}};
    td.kind = DecompKind::weak;
    td.graph_universe = 4;
    CHECK(is_slick(g, td, 5).ok);

    // the cycle fixture is not slick: v0 gains no fresh neighbour anywhere
    auto c8 = make_cycle(8);
    auto fix = cycle_fixture(8);
    auto w = is_slick(c8, fix, 1);
    CHECK_FALSE(w.ok);
    CHECK(w.vertex == 0);
    CHECK(w.child == 1);  // first tree edge scanned
}

TEST_CASE("spread_bound_check holds on s-slick inputs") {
    // isolated vertex: spread 1 <= 0/s + 1
    auto g = Graph::from_edges(3, {{0, 1}});
    TreeDecomposition td = single_bag_decomposition(g);
    CHECK(spread_bound_check(g, td, 3) == -1);

    // catch a violation on a non-slick decomposition
    auto c6 = make_cycle(6);
    auto fix = cycle_fixture(6);
    CHECK(spread_bound_check(c6, fix, 1) == 0);  // spread(v0)=4 > deg+1=3
}

TEST_CASE("smooth normalization: path, cycle, clique") {
    // P4 edge bags are already smooth
    auto p4 = make_path(4);
    auto td = path_edge_bags(4);
    auto smooth = smooth_decomposition(p4, td);
    CHECK(order(smooth) == 3);
    CHECK(width(smooth) == 1);
    for (const auto& b : smooth.bags) CHECK(b.size() == 2);

    // C5 at width 2: exactly 3 bags of size 3, adjacent bags share 2
    auto c5 = make_cycle(5);
    auto w2 = oracle::exact_treewidth(c5).witness;
    auto s5 = smooth_decomposition(c5, w2);
    CHECK(order(s5) == 3);
    for (const auto& b : s5.bags) CHECK(b.size() == 3);
    for (int y = 0; y < s5.tree.size(); ++y)
        if (y != s5.tree.root())
            CHECK(set_intersection(s5.bags[y], s5.bags[s5.tree.parent(y)]).size() == 2);
    CHECK(oracle::verify_decomposition_bruteforce(c5, s5));

    // K4 single bag: n-k = 1 node
    auto k4 = make_complete(4);
    auto sk = smooth_decomposition(k4, single_bag_decomposition(k4));
    CHECK(order(sk) == 1);
}

TEST_CASE("smooth normalization: disconnected graphs mix components") {
    // two disjoint triangles, width 2: order must still be n-k = 4
    auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    TreeDecomposition td;
    td.tree = RootedTree::from_parents({0, 0}, 0);
    td.bags = {{0, 1, 2}, {3, 4, 5}};
    td.kind = DecompKind::strong;
    td.graph_universe = 6;
    REQUIRE(validate(g, td).ok());
    auto smooth = smooth_decomposition(g, td);
    CHECK(order(smooth) == 4);
    CHECK(width(smooth) == 2);
    CHECK(validate(g, smooth).ok());
    CHECK(oracle::verify_decomposition_bruteforce(g, smooth));
}

TEST_CASE("smooth normalization across random graphs") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = random_graph(10, 0.3, rng);
        auto witness = oracle::min_fill_heuristic(g);
        int k = width(witness);
        if (g.num_vertices() <= k + 1) continue;
        auto smooth = smooth_decomposition(g, witness);
        CHECK(order(smooth) == g.num_vertices() - k);
        for (const auto& b : smooth.bags) CHECK(static_cast<int>(b.size()) == k + 1);
        for (int y = 0; y < smooth.tree.size(); ++y)
            if (y != smooth.tree.root()) {
                CHECK(set_difference(smooth.bags[y], smooth.bags[smooth.tree.parent(y)]).size() ==
                      1);
                CHECK(set_difference(smooth.bags[smooth.tree.parent(y)], smooth.bags[y]).size() ==
                      1);
            }
        CHECK(oracle::verify_decomposition_bruteforce(g, smooth));
    }
}

TEST_CASE("smooth rejects graphs with too few vertices") {
    auto k4 = make_complete(4);
    CHECK_THROWS_AS((void)smooth_decomposition(k4, single_bag_decomposition(k4), 4), UserError);
}

TEST_CASE("partition to strong decomposition") {
    // singleton bags along a path graph: tree-partition of width 1
    auto p5 = make_path(5);
    TreeDecomposition tp;
    tp.tree = RootedTree::from_parents({0, 0, 1, 2, 3}, 0);
    tp.bags = {{0}, {1}, {2}, {3}, {4}};
    tp.kind = DecompKind::partition;
    tp.graph_universe = 5;
    REQUIRE(validate(p5, tp).ok());
    auto td = partition_to_decomposition(p5, tp);
    CHECK(width(td) == 1);
    CHECK(validate(p5, td).ok());

    // single-node partition stays a single bag
    auto k3 = make_complete(3);
    auto tp2 = single_bag_decomposition(k3, DecompKind::partition);
    auto td2 = partition_to_decomposition(k3, tp2);
    CHECK(order(td2) == 1);
    CHECK(td2.bags[0] == tp2.bags[0]);

    // invalid partitions are rejected
    TreeDecomposition bad = tp;
    bad.bags[1] = {0, 1};
    CHECK_THROWS_AS((void)partition_to_decomposition(p5, bad), UserError);
}

TEST_CASE("partition width bound 2p-1 holds on block partitions") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 60; ++iter) {
        auto g = random_graph(9, 0.25, rng);
        // keep only edges within or between adjacent blocks of 3
        std::vector<std::pair<int, int>> edges;
        g.for_each_edge([&](int v, int w) {
            if (std::abs(v / 3 - w / 3) <= 1) edges.push_back({v, w});
        });
        auto h = Graph::from_edges(9, edges);
        TreeDecomposition tp;
        tp.tree = RootedTree::from_parents({0, 0, 1}, 0);
        tp.bags = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
        tp.kind = DecompKind::partition;
        tp.graph_universe = 9;
        REQUIRE(validate(h, tp).ok());
        auto td = partition_to_decomposition(h, tp);
        CHECK(width(td) <= 2 * width(tp) - 1);
        CHECK(validate(h, td).ok());
    }
}

TEST_CASE("empty graph gets a single empty bag") {
    auto g = Graph::from_edges(0, {});
    auto td = single_bag_decomposition(g);
    CHECK(validate(g, td).ok());
    CHECK(order(td) == 1);
    CHECK(max_spread(td) == 0);
}

TEST_CASE("drop_empty_bags preserves validity") {
    auto g = make_path(4);
    TreeDecomposition td;
    td.tree = RootedTree::from_parents({0, 0, 1, 1}, 0);
    td.bags = {{0, 1}, {1, 2}, {2, 3}, {}};  // empty leaf bag
    td.kind = DecompKind::strong;
    td.graph_universe = 4;
    REQUIRE(validate(g, td).ok());
    auto out = drop_empty_bags(td);
    CHECK(out.tree.size() == 3);
    CHECK(validate(g, out).ok());

    // empty root: a child takes over as root
    TreeDecomposition td2;
    td2.tree = RootedTree::from_parents({0, 0, 0}, 0);
    td2.bags = {{}, {0, 1}, {2, 3}};
    td2.kind = DecompKind::strong;
    td2.graph_universe = 4;
    auto g2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    REQUIRE(validate(g2, td2).ok());
    auto out2 = drop_empty_bags(td2);
    CHECK(out2.tree.size() == 2);
    CHECK(validate(g2, out2).ok());
}
