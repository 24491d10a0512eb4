#pragma once

#include "urv/graph.hpp"

#include <optional>
#include <utility>

namespace urv {

// Edge 2-coloring of a tree into caterpillar forests with spine/leg roles.
struct Decomposition {
    std::set<Edge> f1;
    std::set<Edge> f2;
    std::map<Edge, EdgeRole> roles;
};

// Independent certificate checker: partition, both classes pass the
// caterpillar test, roles match the classes' spine certificates.
bool verify_decomposition(const Graph& tree, const Decomposition& d);

// Exhaustive backtracking over edge 2-colorings with degree-cap and
// caterpillar-violation pruning. Exponential worst case; desk scale only.
std::optional<Decomposition> tree_caterpillar_bipartition(const Graph& tree);

struct TreeClass {
    enum class Kind { Urvg, WeakOnly };
    Kind kind = Kind::WeakOnly;
    std::optional<Decomposition> decomposition; // present iff Urvg
};

TreeClass classify_tree(const Graph& tree);

// Edge 2-coloring where each class is a disjoint union of paths, or nullopt
// when the linear arboricity exceeds 2. Exhaustive with pruning.
std::optional<std::pair<std::set<Edge>, std::set<Edge>>> linear_forest_bipartition(const Graph& g);

bool is_linear_forest(const Graph& host, const std::set<Edge>& edges);

} // namespace urv
