#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tdrefine/errors.hpp"
#include "tdrefine/generators.hpp"
#include "tdrefine/oracle.hpp"
#include "tdrefine/separators.hpp"
#include "test_util.hpp"

using namespace tdr;
using namespace tdtest;

TEST_CASE("tree_dec_sep: q=0 and zero weights give the empty set") {
    auto g = make_path(9);
    auto td = path_edge_bags(9);
    auto gamma = Weighting::uniform(g, Rat(1));
    CHECK(tree_dec_sep(g, gamma, td, 0).empty());

    Weighting zero(g.universe());
    CHECK(tree_dec_sep(g, zero, td, 3).empty());
}

TEST_CASE("tree_dec_sep on P9 with q=2 balances to weight 3") {
    auto g = make_path(9);
    auto td = path_edge_bags(9);
    auto gamma = Weighting::uniform(g, Rat(1));
    auto z = tree_dec_sep(g, gamma, td, 2);
    REQUIRE(z.size() <= 2);
    std::vector<int> removed;
    for (int node : z) removed = set_union(removed, td.bags[node]);
    CHECK(oracle::verify_separator(g, gamma, removed, Rat(9, 3)));

    // brute-force feasibility: some <=2-node subset achieves the bound
    bool feasible = false;
    for (int a = 0; a < td.tree.size() && !feasible; ++a)
        for (int b = a; b < td.tree.size() && !feasible; ++b) {
            auto x = set_union(td.bags[a], td.bags[b]);
            feasible = oracle::verify_separator(g, gamma, x, Rat(3));
        }
    CHECK(feasible);
}

TEST_CASE("treewidth_sep on grid(4) with the sliding-window decomposition") {
    auto g = make_grid(4);
    auto td = grid_window(4);
    REQUIRE(validate(g, td).ok());
    REQUIRE(width(td) == 4);
    auto gamma = Weighting::uniform(g, Rat(1));
    auto x = treewidth_sep(g, gamma, td, 2);
    CHECK(static_cast<int>(x.size()) <= 2 * 5);
    CHECK(oracle::verify_separator(g, gamma, x, Rat(16, 3)));
}

TEST_CASE("treewidth_sep: single-bag decomposition removes the bag") {
    auto g = make_complete(5);
    auto td = single_bag_decomposition(g);
    auto gamma = Weighting::uniform(g, Rat(1));
    auto x = treewidth_sep(g, gamma, td, 1);
    CHECK(x == g.vertices());
}

TEST_CASE("set_sep: empty S, cycle thirds, SlickMain precondition") {
    auto g9 = make_cycle(9);
    auto td9 = oracle::exact_treewidth(g9).witness;
    CHECK(set_sep(g9, td9, {}, 2).empty());

    auto s_all = g9.vertices();
    auto x = set_sep(g9, td9, s_all, 2);
    auto gamma = Weighting::indicator(g9, s_all);
    CHECK(oracle::verify_separator(g9, gamma, x, Rat(9, 3)));

    // q=2 with |S| = 6l gives components with <= 2l vertices of S
    auto g = make_grid(5);
    auto td = oracle::min_fill_heuristic(g);
    int ell = 4;
    std::vector<int> s(g.vertices().begin(), g.vertices().begin() + 6 * ell);
    auto xs = set_sep(g, td, s, 2);
    auto ind = Weighting::indicator(g, s);
    CHECK(oracle::verify_separator(g, ind, xs, Rat(2 * ell)));
}

TEST_CASE("pseudo_components: single comp, four unit comps, empty rest") {
    // one component of weight <= w
    auto p5 = make_path(5);
    auto gamma = Weighting::uniform(p5, Rat(1));
    auto sep = pseudo_components(p5, gamma, {}, Rat(10));
    CHECK(sep.m() == 1);
    CHECK(check_separation(p5, sep));

    // four singletons of weight 1, w = 2 -> two groups, bound 3
    auto e4 = Graph::from_edges(4, {});
    auto u = Weighting::uniform(e4, Rat(1));
    auto sep2 = pseudo_components(e4, u, {}, Rat(2));
    CHECK(sep2.m() == 2);
    CHECK(check_separation(e4, sep2));

    // G - X empty -> no parts
    auto k3 = make_complete(3);
    auto uk = Weighting::uniform(k3, Rat(1));
    auto sep3 = pseudo_components(k3, uk, k3.vertices(), Rat(1));
    CHECK(sep3.m() == 0);
    CHECK(check_separation(k3, sep3));

    // precondition violation: an overweight component
    CHECK_THROWS_AS((void)pseudo_components(p5, gamma, {}, Rat(2)), UserError);
}

TEST_CASE("pseudo_components minimal-pair certificate under random weights") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 150; ++iter) {
        auto g = random_graph(10, 0.15, rng);
        Weighting gamma(g.universe());
        std::uniform_int_distribution<int> wd(0, 3);
        for (int v : g.vertices()) gamma.set(v, Rat(wd(rng)));
        // X = random small subset
        std::vector<int> x;
        std::bernoulli_distribution inx(0.2);
        for (int v : g.vertices())
            if (inx(rng)) x.push_back(v);
        Rat cap(0);
        auto rest = g.minus(x);
        for (const auto& comp : rest.components()) cap = std::max(cap, gamma.sum(comp));
        if (cap == Rat(0)) cap = Rat(1);
        auto sep = pseudo_components(g, gamma, x, cap);
        CHECK(check_separation(g, sep));
        // pair certificate re-checked from scratch
        for (int i = 0; i < sep.m(); ++i)
            for (int j = i + 1; j < sep.m(); ++j) {
                auto ci = set_difference(sep.parts[i].vertices(), x);
                auto cj = set_difference(sep.parts[j].vertices(), x);
                CHECK(gamma.sum(ci) + gamma.sum(cj) > cap);
            }
    }
}

TEST_CASE("gen_separation: beta >= 1 collapses to a single part") {
    auto g = make_grid(3);
    auto td = oracle::exact_treewidth(g).witness;
    auto gamma = Weighting::uniform(g, Rat(1));
    auto sep = gen_separation(g, gamma, td, Rat(3, 2));
    CHECK(sep.x_set.empty());
    CHECK(sep.m() == 1);
    CHECK(check_separation(g, sep));
}

TEST_CASE("gen_separation: beta=1/3 on grid(4)") {
    auto g = make_grid(4);
    auto td = grid_window(4);
    auto gamma = Weighting::uniform(g, Rat(1));
    auto sep = gen_separation(g, gamma, td, Rat(1, 3));
    CHECK(sep.m() <= 5);
    CHECK(static_cast<int>(sep.x_set.size()) <= 2 * 5);
    CHECK(check_separation(g, sep));
    for (const auto& part : sep.parts) {
        auto outside = set_difference(part.vertices(), sep.x_set);
        CHECK(gamma.sum(outside) <= Rat(16, 3));
    }
}

TEST_CASE("separation_set_sep pads to two parts and respects the S bound") {
    // beta = 2/3 on C12 with S = V and an exact-width witness
    auto g = make_cycle(12);
    auto td = oracle::exact_treewidth(g).witness;
    REQUIRE(width(td) == 2);
    auto sep = separation_set_sep(g, td, g.vertices(), Rat(2, 3));
    CHECK(sep.m() == 2);
    CHECK(static_cast<int>(sep.x_set.size()) <= 3);
    for (const auto& part : sep.parts) {
        auto s_outside = set_difference(part.vertices(), sep.x_set);
        CHECK(static_cast<int>(s_outside.size()) <= 8);
    }

    // s_set swallowed by x_set: the bound beta*|S| = 1/2 forces zero
    // S-vertices outside X in every part
    auto k4 = make_complete(4);
    auto td4 = single_bag_decomposition(k4);
    auto sep2 = separation_set_sep(k4, td4, {0}, Rat(1, 2));
    CHECK(sep2.m() >= 2);
    CHECK(set_contains(sep2.x_set, 0));
    for (const auto& part : sep2.parts) {
        auto outside = set_difference(part.vertices(), sep2.x_set);
        bool s_free = set_intersection(outside, {0}).empty();
        CHECK(s_free);
    }
}

TEST_CASE("monotonicity: larger q certifies a smaller component bound") {
    auto g = make_cycle(30);
    auto td = oracle::min_fill_heuristic(g);
    auto gamma = Weighting::uniform(g, Rat(1));
    Rat prev_bound = gamma.total();
    for (int q = 0; q <= 4; ++q) {
        auto x = treewidth_sep(g, gamma, td, q);
        Rat bound = gamma.total() / Rat(q + 1);
        CHECK(bound <= prev_bound);
        CHECK(oracle::verify_separator(g, gamma, x, bound));
        prev_bound = bound;
    }
}

TEST_CASE("separator suite: random instances at n <= 30 under exact rationals") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 120; ++iter) {
        std::uniform_int_distribution<int> nd(2, 30);
        int n = nd(rng);
        std::uniform_int_distribution<long long> md(0, std::min<long long>(2LL * n, n * (n - 1) / 2));
        auto g = make_random_gnm(n, md(rng), rng());
        auto td = oracle::min_fill_heuristic(g);
        Weighting gamma(g.universe());
        std::uniform_int_distribution<int> wnum(0, 4), wden(1, 3);
        for (int v : g.vertices()) gamma.set(v, Rat(wnum(rng), wden(rng)));
        std::uniform_int_distribution<int> qd(0, 4);
        int q = qd(rng);
        auto z = tree_dec_sep(g, gamma, td, q);
        CHECK(static_cast<int>(z.size()) <= q);
        std::vector<int> removed;
        for (int node : z) removed = set_union(removed, td.bags[node]);
        CHECK(oracle::verify_separator(g, gamma, removed, gamma.total() / Rat(q + 1)));
    }
}
