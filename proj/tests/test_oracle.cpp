#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tdrefine/errors.hpp"
#include "tdrefine/generators.hpp"
#include "tdrefine/oracle.hpp"
#include "test_util.hpp"

using namespace tdr;
using namespace tdtest;
using namespace tdr::oracle;

TEST_CASE("exact treewidth on the fixture table") {
    CHECK(exact_treewidth(make_path(1)).width == 0);
    for (int n : {2, 5, 9, 14}) CHECK(exact_treewidth(make_path(n)).width == 1);
    for (std::uint64_t s : {1, 2, 3}) CHECK(exact_treewidth(make_random_tree(12, s)).width == 1);
    for (int n : {3, 6, 11, 18}) CHECK(exact_treewidth(make_cycle(n)).width == 2);
    for (int n : {2, 4, 7, 10}) CHECK(exact_treewidth(make_complete(n)).width == n - 1);
    CHECK(exact_treewidth(make_grid(2)).width == 2);
    CHECK(exact_treewidth(make_grid(3)).width == 3);
    for (int n : {3, 6, 12, 18}) CHECK(exact_treewidth(make_fan(n)).width == 2);
    CHECK(exact_treewidth(make_complete(5)).width == 4);
}

TEST_CASE("exact treewidth refuses over-budget inputs") {
    CHECK_THROWS_AS((void)exact_treewidth(make_path(19)), UserError);
    OracleBudget big;
    big.max_vertices = 19;
    CHECK(exact_treewidth(make_path(19), big).width == 1);
}

TEST_CASE("exact treewidth: empty and edgeless graphs") {
    CHECK(exact_treewidth(Graph::from_edges(0, {})).width == -1);
    CHECK(exact_treewidth(Graph::from_edges(5, {})).width == 0);
}

TEST_CASE("parallel and serial subset DP agree") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 20; ++iter) {
        auto g = random_graph(11, 0.3, rng);
        auto a = exact_treewidth(g);
        auto b = exact_treewidth_serial(g);
        CHECK(a.width == b.width);
        CHECK(width(a.witness) == width(b.witness));
    }
}

TEST_CASE("witness decompositions are brute-force valid at optimum width") {
    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 30; ++iter) {
        auto g = random_graph(9, 0.35, rng);
        auto res = exact_treewidth(g);
        CHECK(verify_decomposition_bruteforce(g, res.witness));
        CHECK(width(res.witness) == res.width);
    }
}

TEST_CASE("brute-force verifier rejects constructed violations") {
    auto g = make_cycle(6);
    auto fix = cycle_fixture(6);
    CHECK(verify_decomposition_bruteforce(g, fix));
    auto broken = fix;
    broken.bags[1] = {2, 3};  // drop one occurrence of vertex 0
    CHECK_FALSE(verify_decomposition_bruteforce(g, broken));
}

TEST_CASE("verify_separator: full removal is vacuous") {
    auto g = make_grid(3);
    auto gamma = Weighting::uniform(g, Rat(1));
    CHECK(verify_separator(g, gamma, g.vertices(), Rat(0)));
    CHECK_FALSE(verify_separator(g, gamma, {}, Rat(8)));
    CHECK(verify_separator(g, gamma, {}, Rat(9)));
}

TEST_CASE("min-fill: trees, cycles, grid(4)") {
    for (std::uint64_t s : {4, 5}) {
        auto t = make_random_tree(30, s);
        auto td = min_fill_heuristic(t);
        CHECK(width(td) == 1);
        CHECK(verify_decomposition_bruteforce(t, td));
    }
    for (int n : {5, 9, 16, 18}) {
        auto c = make_cycle(n);
        auto td = min_fill_heuristic(c);
        CHECK(width(td) == 2);
        CHECK(width(td) >= exact_treewidth(c).width);
        CHECK(verify_decomposition_bruteforce(c, td));
    }
    auto g = make_grid(4);
    auto td = min_fill_heuristic(g);
    CHECK(width(td) >= 4);  // exact_treewidth(grid(4)) == 4 at n=16
    CHECK(width(td) >= exact_treewidth(g).width);
    CHECK(verify_decomposition_bruteforce(g, td));
}

TEST_CASE("min-fill never beats the exact optimum and always validates") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = random_graph(10, 0.3, rng);
        auto heur = min_fill_heuristic(g);
        auto exact = exact_treewidth(g);
        CHECK(width(heur) >= exact.width);
        CHECK(verify_decomposition_bruteforce(g, heur));
    }
}

TEST_CASE("oracle spread and slickness recounts match the fast path") {
    std::mt19937_64 rng(24);
    for (int iter = 0; iter < 100; ++iter) {
        auto g = random_graph(7, 0.35, rng);
        auto td = random_bags(g, rng);
        for (int v : g.vertices()) CHECK(oracle_spread(td, v) == spread(td, v));
        for (int s : {1, 2}) CHECK(oracle_is_slick(g, td, s) == is_slick(g, td, s).ok);
    }
}
