#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/random_inputs.hpp"
#include "support/tree_enum.hpp"
#include "urv/graph.hpp"

#include <random>

using namespace urv;

namespace {

Graph path_graph(int n) {
    Graph g;
    g.add_vertex("1");
    for (int i = 1; i < n; ++i) g.add_edge(std::to_string(i), std::to_string(i + 1));
    return g;
}

Graph star(int n) {
    Graph g;
    g.add_vertex("c");
    for (int i = 1; i <= n; ++i) g.add_edge("c", std::to_string(i));
    return g;
}

// Definitional oracle: forest, max degree 3, and in each component some
// vertex-pair path contains every degree-3 vertex.
bool caterpillar_oracle(const Graph& g) {
    auto p = graph_predicates(g);
    if (!p.is_forest || p.max_degree > 3) return false;
    std::map<std::string, int> comp;
    int comps = 0;
    for (const auto& s : g.vertices) {
        if (comp.count(s)) continue;
        std::vector<std::string> stack{s};
        comp[s] = comps;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto& w : g.neighbors(v))
                if (!comp.count(w)) {
                    comp[w] = comps;
                    stack.push_back(w);
                }
        }
        ++comps;
    }
    for (int c = 0; c < comps; ++c) {
        std::vector<std::string> members, deg3;
        for (const auto& [v, cv] : comp)
            if (cv == c) members.push_back(v);
        for (const auto& v : members)
            if (g.degree(v) == 3) deg3.push_back(v);
        if (deg3.empty()) continue;
        bool found = false;
        for (std::size_t i = 0; i < members.size() && !found; ++i)
            for (std::size_t j = i; j < members.size() && !found; ++j) {
                auto path = tree_path(g, members[i], members[j]);
                std::set<std::string> on(path.begin(), path.end());
                bool all = true;
                for (const auto& v : deg3)
                    if (!on.count(v)) all = false;
                if (all) found = true;
            }
        if (!found) return false;
    }
    return true;
}

} // namespace

TEST_CASE("graph predicates on canonical graphs") {
    auto c6 = cycle_graph(6);
    auto pc6 = graph_predicates(c6);
    CHECK(pc6.is_bipartite);
    CHECK(pc6.vertices_on_cycles == c6.vertices);
    CHECK_FALSE(pc6.is_forest);

    auto k5 = complete_graph(5);
    CHECK(graph_predicates(k5).contains_k5);
    CHECK_FALSE(graph_predicates(complete_graph(4)).contains_k5);

    auto k17 = star(7);
    auto pk = graph_predicates(k17);
    CHECK(pk.is_tree);
    CHECK(pk.max_degree == 7);
    CHECK(pk.vertices_on_cycles.empty());
}

TEST_CASE("contains_k5 agrees with exhaustive 5-subset search") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 200; ++round) {
        int n = 5 + static_cast<int>(rng() % 8); // up to 12 vertices
        Graph g;
        for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
        std::uniform_int_distribution<int> coin(0, 99);
        int density = 20 + static_cast<int>(rng() % 70);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (coin(rng) < density) g.add_edge(std::to_string(i), std::to_string(j));

        std::vector<std::string> ids(g.vertices.begin(), g.vertices.end());
        bool brute = false;
        std::vector<int> pick(5);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (brute) return;
            if (depth == 5) {
                for (int a = 0; a < 5; ++a)
                    for (int b = a + 1; b < 5; ++b)
                        if (!g.has_edge(ids[pick[a]], ids[pick[b]])) return;
                brute = true;
                return;
            }
            for (int i = start; i < static_cast<int>(ids.size()); ++i) {
                pick[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
        CHECK(contains_k5(g) == brute);
    }
}

TEST_CASE("caterpillar certificate: named examples") {
    CHECK(subdivided_caterpillar_forest_deg3(path_graph(9)).has_value());
    CHECK(subdivided_caterpillar_forest_deg3(star(3)).has_value());
    CHECK_FALSE(subdivided_caterpillar_forest_deg3(star(4)).has_value());

    // two K_{1,3} centers joined by a path of length 3
    Graph h;
    h.add_edge("c1", "a");
    h.add_edge("c1", "b");
    h.add_edge("c2", "d");
    h.add_edge("c2", "e");
    h.add_edge("c1", "m");
    h.add_edge("m", "c2");
    auto cert = subdivided_caterpillar_forest_deg3(h);
    REQUIRE(cert.has_value());
    REQUIRE(cert->spines.size() == 1);
    std::set<std::string> on(cert->spines[0].begin(), cert->spines[0].end());
    CHECK(on.count("c1"));
    CHECK(on.count("c2"));
    CHECK(on.count("m"));
    CHECK(cert->roles.at(make_edge("c1", "m")) == EdgeRole::Spine);
}

TEST_CASE("caterpillar test agrees with the all-pairs-path oracle, trees <= 9") {
    int checked = 0;
    for (int n = 1; n <= 9; ++n) {
        for (const auto& t : testing::all_trees(n)) {
            CHECK(subdivided_caterpillar_forest_deg3(t).has_value() == caterpillar_oracle(t));
            ++checked;
        }
    }
    CHECK(checked == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
}

TEST_CASE("caterpillar certificate is internally consistent on random forests") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 120; ++round) {
        Graph t = testing::random_tree(rng, 2 + static_cast<int>(rng() % 9));
        auto cert = subdivided_caterpillar_forest_deg3(t);
        if (!cert) continue;
        // spine covers all degree-3 vertices; non-spine edges are legs
        std::set<std::string> on;
        for (const auto& spine : cert->spines) on.insert(spine.begin(), spine.end());
        for (const auto& v : t.vertices)
            if (t.degree(v) == 3) CHECK(on.count(v) == 1);
        for (const auto& [e, role] : cert->roles) {
            (void)e;
            CHECK((role == EdgeRole::Spine || role == EdgeRole::Leg));
        }
    }
}

TEST_CASE("unlabeled tree counts match the classical table") {
    CHECK(testing::all_trees(1).size() == 1);
    CHECK(testing::all_trees(4).size() == 2);
    CHECK(testing::all_trees(7).size() == 11);
    CHECK(testing::all_trees(10).size() == 106);
}

TEST_CASE("longest monotone subsequence") {
    using R = Rational;
    auto w = longest_monotone_subsequence({R(1), R(2), R(3)});
    CHECK(w.indices.size() == 3);

    auto w2 = longest_monotone_subsequence({R(2), R(4), R(1), R(5), R(3)});
    CHECK(w2.indices.size() == 3);

    CHECK(longest_monotone_subsequence({}).indices.empty());

    // witness really is monotone and increasing in position
    std::mt19937_64 rng(99);
    for (int round = 0; round < 200; ++round) {
        std::vector<Rational> seq;
        int n = 1 + static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i) seq.push_back(Rational(static_cast<long long>(rng() % 20), 1));
        auto wit = longest_monotone_subsequence(seq);
        REQUIRE_FALSE(wit.indices.empty());
        for (std::size_t i = 1; i < wit.indices.size(); ++i) {
            CHECK(wit.indices[i - 1] < wit.indices[i]);
            if (wit.direction == MonotoneWitness::Direction::NonDecreasing)
                CHECK(seq[wit.indices[i - 1]] <= seq[wit.indices[i]]);
            else
                CHECK(seq[wit.indices[i - 1]] >= seq[wit.indices[i]]);
        }
    }
}

TEST_CASE("monotone length matches exhaustive search on short sequences") {
    std::mt19937_64 rng(123);
    for (int round = 0; round < 300; ++round) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Rational> seq;
        for (int i = 0; i < n; ++i) seq.push_back(Rational(static_cast<long long>(rng() % 6), 1));
        std::size_t best = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Rational> sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(seq[i]);
            bool up = true, down = true;
            for (std::size_t i = 1; i < sub.size(); ++i) {
                if (sub[i - 1] > sub[i]) up = false;
                if (sub[i - 1] < sub[i]) down = false;
            }
            if (up || down) best = std::max(best, sub.size());
        }
        CHECK(longest_monotone_subsequence(seq).indices.size() == best);
    }
}

TEST_CASE("Erdos-Szekeres bound holds on random sequences") {
    std::mt19937_64 rng(0xE5);
    for (int n : {2, 3, 4}) {
        int len = n * n + 1;
        for (int trial = 0; trial < 10000; ++trial) {
            std::vector<Rational> seq;
            for (int i = 0; i < len; ++i)
                seq.push_back(Rational(static_cast<long long>(rng() % 1000), 1));
            CHECK(longest_monotone_subsequence(seq).indices.size() >=
                  static_cast<std::size_t>(n + 1));
        }
    }
}
