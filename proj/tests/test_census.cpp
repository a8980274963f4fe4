#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "schemelab/census.hpp"

using namespace schemelab;

TEST_CASE("tree counts match the published table") {
    // w:        0  1  2  3  4   5
    // N_1:      0  1  2  5  13  37
    // N_tree:   1  1  3  8  24  71
    const std::int64_t n1_expect[] = {0, 1, 2, 5, 13, 37};
    const std::int64_t ntree_expect[] = {1, 1, 3, 8, 24, 71};
    for (int w = 0; w <= 5; ++w) {
        auto [ntree, n1] = count_trees(w);
        INFO("w = " << w);
        REQUIRE(n1 == n1_expect[w]);
        REQUIRE(ntree == ntree_expect[w]);
    }
}

TEST_CASE("the five partitions of 4 contribute 1+2+5+3+13 trees") {
    // Worked example: N_tree(4) = 24 as a 5-fold sum over partitions.
    auto [ntree4, n1_4] = count_trees(4);
    REQUIRE(ntree4 == 1 + 2 + 5 + 3 + 13);
    REQUIRE(n1_4 == 13);
}

TEST_CASE("tree enumeration agrees with the counting formula") {
    for (int w = 0; w <= 6; ++w) {
        auto trees = enumerate_trees(w);
        auto [ntree, n1] = count_trees(w);
        INFO("w = " << w);
        REQUIRE(static_cast<std::int64_t>(trees.size()) == ntree);
        for (const auto& t : trees) {
            REQUIRE(t.weight() == w);
            REQUIRE(t.nodes[0].parent == -1);
            REQUIRE(t.nodes[0].weight == 0);
            for (std::size_t i = 1; i < t.nodes.size(); ++i) {
                REQUIRE(t.nodes[i].weight >= 1);
                REQUIRE(t.nodes[i].parent >= 0);
                REQUIRE(t.nodes[i].parent < static_cast<int>(i));
            }
        }
    }
}

TEST_CASE("weight-2 trees are the three expected shapes") {
    auto trees = enumerate_trees(2);
    REQUIRE(trees.size() == 3);
    // one node of weight 2; a chain of two weight-1 nodes; two weight-1 trunks
    std::multiset<std::pair<int, int>> shapes;  // (node count, max depth ... encoded)
    for (const auto& t : trees) shapes.insert({static_cast<int>(t.nodes.size()), t.weight()});
    REQUIRE(shapes.count({2, 2}) == 1);  // single node of weight 2
    REQUIRE(shapes.count({3, 2}) == 2);  // chain and wedge both have 3 nodes
}

TEST_CASE("table B2 cells reproduce exactly") {
    // rows: cycle weight 1..6; columns: tree weight 0..(6 - cycle weight)
    const std::vector<std::vector<std::int64_t>> table = {
        {1, 1, 3, 8, 24, 71},
        {2, 2, 7, 19, 62},
        {3, 4, 14, 45},
        {5, 8, 31},
        {7, 16},
        {13},
    };
    for (int cw = 1; cw <= 6; ++cw) {
        for (int tw = 0; tw + cw <= 6; ++tw) {
            INFO("cycle weight " << cw << ", tree weight " << tw);
            REQUIRE(count_connected_cell(cw, tw) == table[cw - 1][tw]);
        }
    }
}

TEST_CASE("connected counts add up along diagonals") {
    REQUIRE(enumerate_connected(5).size() == 7 + 8 + 14 + 19 + 24);  // = 72
    const std::int64_t nc_expect[] = {1, 3, 8, 24, 72, 238};
    for (int w = 1; w <= 6; ++w) {
        INFO("w = " << w);
        REQUIRE(static_cast<std::int64_t>(enumerate_connected(w).size()) == nc_expect[w - 1]);
    }
}

TEST_CASE("full census matches the headline table") {
    const std::int64_t n_expect[] = {1, 4, 12, 42, 138, 494};
    for (int w = 1; w <= 6; ++w) {
        INFO("w = " << w);
        REQUIRE(static_cast<std::int64_t>(enumerate_all(w).size()) == n_expect[w - 1]);
    }
}

TEST_CASE("weight-1 and weight-2 censuses are the known schemes") {
    auto w1 = enumerate_all(1);
    REQUIRE(w1.size() == 1);
    REQUIRE(is_isomorphic(w1[0], fixed_vertex_scheme(1)));

    auto w2 = enumerate_all(2);
    REQUIRE(w2.size() == 4);
    int hits = 0;
    for (const auto& s : w2) {
        if (is_isomorphic(s, fixed_vertex_scheme(2))) ++hits;
        if (is_isomorphic(s, bitransitive_scheme())) ++hits;
        if (is_isomorphic(s, capture_scheme())) ++hits;
        if (is_isomorphic(s, decomposable_scheme())) ++hits;
    }
    REQUIRE(hits == 4);
}

TEST_CASE("generated schemes are valid, reduced and pairwise distinct") {
    for (int w = 1; w <= 4; ++w) {
        auto all = enumerate_all(w);
        std::set<std::string> bytes;
        for (const auto& s : all) {
            REQUIRE(is_reduced(s));
            REQUIRE(total_weight(s) == w);
            REQUIRE(is_isomorphic(reduce(s), s));
            bytes.insert(canonical_form(s).bytes);
        }
        REQUIRE(bytes.size() == all.size());
    }
}

TEST_CASE("multiset composition identity ties N to N_c") {
    std::vector<std::int64_t> nc(7, 0);
    for (int u = 1; u <= 6; ++u) nc[u] = static_cast<std::int64_t>(enumerate_connected(u).size());
    const std::int64_t n_expect[] = {1, 4, 12, 42, 138, 494};
    for (int w = 1; w <= 6; ++w) {
        INFO("w = " << w);
        REQUIRE(compose_total_count(w, nc) == n_expect[w - 1]);
    }
}

TEST_CASE("census rejects weights beyond the cap") {
    REQUIRE_THROWS_AS(enumerate_all(kCensusWeightCap + 1), Error);
    REQUIRE_THROWS_AS(census_table(0), Error);
}

TEST_CASE("census table rows carry all four counts") {
    auto rows = census_table(3);
    REQUIRE(rows.size() == 3);
    REQUIRE(rows[2].w == 3);
    REQUIRE(rows[2].n_trees == 8);
    REQUIRE(rows[2].n1_trees == 5);
    REQUIRE(rows[2].n_connected == 8);
    REQUIRE(rows[2].n_total == 12);
}
