#pragma once

#include "urv/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace urv {

using Edge = std::pair<std::string, std::string>; // normalized: first < second

inline Edge make_edge(std::string u, std::string v) {
    if (v < u) std::swap(u, v);
    return {std::move(u), std::move(v)};
}

// Labeled undirected simple graph.
struct Graph {
    std::set<std::string> vertices;
    std::set<Edge> edges;

    void add_vertex(const std::string& v) { vertices.insert(v); }
    void add_edge(const std::string& u, const std::string& v);
    bool has_edge(const std::string& u, const std::string& v) const {
        return edges.count(make_edge(u, v)) > 0;
    }
    std::size_t degree(const std::string& v) const;
    std::vector<std::string> neighbors(const std::string& v) const;

    bool operator==(const Graph& o) const = default;
};

Graph complete_graph(int n);                 // ids "1".."n"
Graph cycle_graph(int n);                    // ids "1".."n"
Graph complete_bipartite(int m, int n);      // ids "a1..am", "b1..bn"

struct GraphPredicates {
    bool is_tree = false;
    bool is_forest = false;
    std::size_t max_degree = 0;
    bool is_bipartite = false;
    std::map<std::string, int> bipartition;  // vertex -> 0/1 when bipartite
    std::set<std::string> vertices_on_cycles;
    bool contains_k5 = false;
};

GraphPredicates graph_predicates(const Graph& g);

// True iff some 5 vertices are pairwise adjacent.
bool contains_k5(const Graph& g);

// Unique tree path between two vertices; empty when u == v is false and
// callers pass vertices of the same tree component.
std::vector<std::string> tree_path(const Graph& tree, const std::string& u, const std::string& v);

enum class EdgeRole { Spine, Leg };

// Certificate for "forest, max degree <= 3, degree-3 vertices of each
// component on a common path": one spine per component plus a role for
// every edge.
struct CaterpillarCertificate {
    std::vector<std::vector<std::string>> spines; // vertex sequences, one per component
    std::map<Edge, EdgeRole> roles;
};

std::optional<CaterpillarCertificate> subdivided_caterpillar_forest_deg3(const Graph& g);

struct MonotoneWitness {
    enum class Direction { NonDecreasing, NonIncreasing };
    std::vector<std::size_t> indices; // increasing positions into the input
    Direction direction = Direction::NonDecreasing;
};

MonotoneWitness longest_monotone_subsequence(const std::vector<Rational>& seq);

} // namespace urv
