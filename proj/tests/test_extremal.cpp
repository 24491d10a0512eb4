#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "urv/extremal.hpp"
#include "urv/synth.hpp"

#include <cmath>
#include <map>

using namespace urv;

TEST_CASE("T_Bs edge counts and caterpillar shape") {
    const long long expected[] = {0, 3, 8, 15, 24, 35, 48};
    for (int s = 1; s <= 6; ++s) {
        RootedTree t = gen_tbs(s);
        CHECK(t.graph.edges.size() == static_cast<std::size_t>(expected[s]));
        CHECK(t.graph.edges.size() == static_cast<std::size_t>(s) * s + 2 * s);
        CHECK(graph_predicates(t.graph).is_tree);
        CHECK(subdivided_caterpillar_forest_deg3(t.graph).has_value());
    }
    CHECK_THROWS_AS(gen_tbs(0), std::invalid_argument);
}

TEST_CASE("T_Bs depth equals s") {
    for (int s : {2, 4}) {
        RootedTree t = gen_tbs(s);
        // BFS depth from the root
        std::map<std::string, int> depth{{t.root, 0}};
        std::vector<std::string> frontier{t.root};
        int max_depth = 0;
        while (!frontier.empty()) {
            std::vector<std::string> next;
            for (const auto& v : frontier)
                for (const auto& w : t.graph.neighbors(v))
                    if (!depth.count(w)) {
                        depth[w] = depth[v] + 1;
                        max_depth = std::max(max_depth, depth[w]);
                        next.push_back(w);
                    }
            frontier = next;
        }
        CHECK(max_depth == s);
    }
}

TEST_CASE("level counts match the recurrences") {
    LevelCounts lc = level_counts(5);
    CHECK(lc.a[1] == 4);
    CHECK(lc.b[1] == 2);
    CHECK(lc.c[1] == 6);
    CHECK(lc.c[2] == 28);
    CHECK(lc.a[2] == 16);
    CHECK(lc.c[3] == 128);

    // (a, b) recurrence form agrees with the (a, c) form for k <= 20
    LevelCounts big = level_counts(20);
    long long a = 4, bcount = 2;
    for (int k = 2; k <= 20; ++k) {
        long long na = 3 * a + 2 * bcount;
        long long nb = 2 * a + 2 * bcount;
        a = na;
        bcount = nb;
        CHECK(big.a[k] == a);
        CHECK(big.b[k] == bcount);
        CHECK(big.c[k] == a + bcount);
    }
}

TEST_CASE("closed forms match exact recurrences within 1e-9 relative") {
    LevelCounts lc = level_counts(20);
    for (int k = 1; k <= 20; ++k) {
        double exact = static_cast<double>(lc.c[k]);
        CHECK(std::abs(c_closed(k) - exact) / exact <= 1e-9);
    }
    long long sum = 0;
    for (int s = 1; s <= 20; ++s) {
        sum += lc.c[s];
        double exact = static_cast<double>(sum);
        CHECK(std::abs(edges_closed(s) - exact) / exact <= 1e-9);
    }
    CHECK(std::abs(c_closed(1) - 6.0) <= 1e-9);
    CHECK(std::abs(edges_closed(1) - 6.0) <= 1e-9);
    CHECK(std::abs(edges_closed(2) - 34.0) <= 1e-9);
}

TEST_CASE("T_Rs level sizes equal the recurrence values") {
    for (int s = 1; s <= 5; ++s) {
        auto [t, d] = gen_trs(s);
        LevelCounts lc = level_counts(s);
        std::map<std::string, int> depth{{t.root, 0}};
        std::vector<std::string> frontier{t.root};
        std::vector<long long> per_level(s + 1, 0);
        while (!frontier.empty()) {
            std::vector<std::string> next;
            for (const auto& v : frontier)
                for (const auto& w : t.graph.neighbors(v))
                    if (!depth.count(w)) {
                        depth[w] = depth[v] + 1;
                        ++per_level[depth[w]];
                        next.push_back(w);
                    }
            frontier = next;
        }
        for (int k = 1; k <= s; ++k) CHECK(per_level[k] == lc.c[k]);
        CHECK(verify_decomposition(t.graph, d));
    }
}

TEST_CASE("T_Rs(2) has 35 vertices and round trips through the tree layout") {
    auto [t, d] = gen_trs(2);
    CHECK(t.graph.vertices.size() == 35);
    CHECK(t.graph.edges.size() == 34);
    Layout l = layout_tree(t.graph, d);
    CHECK(validate_layout(l).ok());
    CHECK(extract_graph(l) == t.graph);
    auto s = split_xy(l);
    CHECK(s.gx.edges == d.f1);
    CHECK(s.gy.edges == d.f2);
}

TEST_CASE("bounds formulas, exact integers") {
    BoundsReport b64 = bounds(64);
    CHECK(b64.urvg_bound == 353);
    CHECK(b64.dense_target == 294);
    BoundsReport b81 = bounds(81);
    CHECK(b81.bipartite_bound == 311);
    CHECK(b81.dense_bipartite_target == 256);
    CHECK(bounds(1).urvg_bound == 3);
    CHECK(bounds(2).urvg_bound == 5);

    // ceil/floor behavior across squares
    CHECK(isqrt_floor(63) == 7);
    CHECK(isqrt_floor(64) == 8);
    CHECK(isqrt_ceil(64) == 8);
    CHECK(isqrt_ceil(65) == 9);
}

TEST_CASE("dense target is subadditive with step 6") {
    for (long long n = 64; n < 10000; ++n)
        CHECK(bounds(n + 1).dense_target <= bounds(n).dense_target + 6);
}

TEST_CASE("dense layout at n = 64: exact count, degree sum, multiset") {
    Layout l = gen_dense_layout(64);
    REQUIRE(l.squares.size() == 64);
    CHECK(validate_layout(l).ok());
    Graph g = extract_graph(l);
    CHECK(g.edges.size() == 294);

    std::map<std::size_t, int> hist;
    long long degree_sum = 0;
    for (const auto& v : g.vertices) {
        std::size_t d = g.degree(v);
        ++hist[d];
        degree_sum += static_cast<long long>(d);
    }
    CHECK(degree_sum == 588); // 12(k-1)^2 at k = 8
    // four of degree 4, four of degree 6, 4(k-3) of degree 7,
    // four of degree 10, 4(k-4) of degree 11, (k-4)^2 of degree 12
    CHECK(hist[4] == 4);
    CHECK(hist[6] == 4);
    CHECK(hist[7] == 20);
    CHECK(hist[10] == 4);
    CHECK(hist[11] == 16);
    CHECK(hist[12] == 16);
}

TEST_CASE("dense layouts stay inside the bounds for intermediate n") {
    for (long long n : {64, 70, 81, 100}) {
        Layout l = gen_dense_layout(n);
        REQUIRE(l.squares.size() == static_cast<std::size_t>(n));
        CHECK(validate_layout(l).ok());
        long long edges = static_cast<long long>(extract_graph(l).edges.size());
        BoundsReport b = bounds(n);
        CHECK(edges >= b.dense_target);
        CHECK(edges <= b.urvg_bound);
    }
    CHECK_THROWS_AS(gen_dense_layout(63), std::invalid_argument);
}

TEST_CASE("dense bipartite layouts: bipartite and inside the bounds") {
    for (long long n : {81, 90, 100}) {
        Layout l = gen_dense_bipartite_layout(n);
        REQUIRE(l.squares.size() == static_cast<std::size_t>(n));
        CHECK(validate_layout(l).ok());
        Graph g = extract_graph(l);
        CHECK(graph_predicates(g).is_bipartite);
        long long edges = static_cast<long long>(g.edges.size());
        BoundsReport b = bounds(n);
        CHECK(edges >= b.dense_bipartite_target);
        CHECK(edges <= b.bipartite_bound);
    }
    CHECK(extract_graph(gen_dense_bipartite_layout(81)).edges.size() == 256);
    CHECK_THROWS_AS(gen_dense_bipartite_layout(80), std::invalid_argument);
}
