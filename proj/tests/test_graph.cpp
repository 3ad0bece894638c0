#include <random>

#include "doctest.h"
#include "enumeration.hpp"
#include "trifold/errors.hpp"
#include "trifold/tree_decomposition.hpp"

using namespace trifold;
using namespace trifold::testing;

TEST_CASE("validate_decomposition examples") {
    // Path P3 with bags {0,1},{1,2}.
    Multigraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    TreeDecomposition x;
    x.bags = {{0, 1}, {1, 2}};
    x.tree_edges = {{0, 1}};
    auto r = validate_decomposition(p3, x);
    CHECK(r.valid);
    CHECK(x.width() == 1);

    // Subtree violation: vertex 1's bags separated by a bag without it.
    TreeDecomposition bad;
    bad.bags = {{0, 1}, {2}, {1, 2}};
    bad.tree_edges = {{0, 1}, {1, 2}};
    auto rb = validate_decomposition(p3, bad);
    CHECK_FALSE(rb.valid);
    CHECK(rb.violation.find("subtree") != std::string::npos);
    CHECK(rb.violation.find("1") != std::string::npos);

    // Triangle in one bag.
    Multigraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    TreeDecomposition single;
    single.bags = {{0, 1, 2}};
    auto rs = validate_decomposition(k3, single);
    CHECK(rs.valid);
    CHECK(single.width() == 2);

    // Edge coverage violation.
    TreeDecomposition nocover;
    nocover.bags = {{0, 1}, {2}};
    nocover.tree_edges = {{0, 1}};
    auto rn = validate_decomposition(k3, nocover);
    CHECK_FALSE(rn.valid);
    CHECK(rn.violation.find("edge coverage") != std::string::npos);
}

TEST_CASE("heuristic_decomposition basics") {
    // A tree gets width 1.
    Multigraph tree(6);
    tree.add_edge(0, 1);
    tree.add_edge(0, 2);
    tree.add_edge(1, 3);
    tree.add_edge(1, 4);
    tree.add_edge(2, 5);
    for (auto s : {Strategy::MinDegree, Strategy::MinFill}) {
        auto x = heuristic_decomposition(tree, s);
        CHECK(validate_decomposition(tree, x).valid);
        CHECK(x.width() == 1);
    }

    // K5 -> width 4.
    Multigraph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    auto xk = heuristic_decomposition(k5, Strategy::MinFill);
    CHECK(validate_decomposition(k5, xk).valid);
    CHECK(xk.width() == 4);
    CHECK(brute_force_treewidth(k5) == 4);

    // Single node.
    Multigraph one(1);
    auto xo = heuristic_decomposition(one, Strategy::MinDegree);
    CHECK(validate_decomposition(one, xo).valid);
    CHECK(xo.width() == 0);

    // Loops and multiedges are ignored by the width machinery but still
    // need edge coverage.
    Multigraph loopy(2);
    loopy.add_edge(0, 0);
    loopy.add_edge(0, 1);
    loopy.add_edge(0, 1);
    auto xl = heuristic_decomposition(loopy, Strategy::MinFill);
    CHECK(validate_decomposition(loopy, xl).valid);
    CHECK(xl.width() == 1);
    CHECK(loopy.degree(0) == 4);
}

TEST_CASE("heuristics match brute force on small random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);  // 4..7 nodes
        Multigraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 100 < 45) g.add_edge(i, j);
        int best = brute_force_treewidth(g);
        int got = std::min(heuristic_decomposition(g, Strategy::MinDegree).width(),
                           heuristic_decomposition(g, Strategy::MinFill).width());
        CHECK(validate_decomposition(g, heuristic_decomposition(g, Strategy::MinFill)).valid);
        CHECK(got == best);
    }
}

TEST_CASE("pace graph round trip") {
    Multigraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    auto text = write_pace_graph(k3);
    CHECK(text.substr(0, 9) == "p tw 3 3\n");
    auto back = read_pace_graph(text);
    CHECK(back.node_count == 3);
    CHECK(back.edges == k3.edges);

    CHECK_THROWS_AS(read_pace_graph("p tw 2 1\n1 3\n"), parse_error);
    CHECK_THROWS_AS(read_pace_graph("p tw 2 2\n1 2\n"), parse_error);  // declared 2, found 1
    CHECK_THROWS_AS(read_pace_graph("1 2\n"), parse_error);
}

TEST_CASE("pace decomposition round trip") {
    Multigraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    auto x = heuristic_decomposition(k3, Strategy::MinFill);
    auto text = write_pace_decomposition(x, 3);
    int nodes = 0;
    auto back = read_pace_decomposition(text, &nodes);
    CHECK(nodes == 3);
    CHECK(back.width() == x.width());
    CHECK(validate_decomposition(k3, back).valid);
    CHECK(write_pace_decomposition(back, 3) == text);

    // Bag exceeding the declared width is a parse error.
    CHECK_THROWS_AS(read_pace_decomposition("s td 1 1 3\nb 1 1 2 3\n", nullptr), parse_error);
}
