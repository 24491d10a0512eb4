#pragma once

#include "urv/decompose.hpp"
#include "urv/geometry.hpp"
#include "urv/graph.hpp"

#include <optional>

namespace urv {

// Extents of the anchor corners of the placed squares.
struct LayoutExtents {
    Rational x_m, x_M, y_m, y_M;
};

LayoutExtents extents(const Layout& layout);

// Thrown when a placement step breaks the construction invariants; indicates
// an invalid certificate or an internal bug, never expected on valid input.
struct SynthesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// BFS placement with flush legs, protruding spines and band insertion.
// Output satisfies extract_graph == tree, gx == f1, gy == f2.
Layout layout_tree(const Graph& tree, const Decomposition& d);

// Bar construction realized with unit squares; extraction contains the tree.
Layout layout_tree_weak(const Graph& tree);

Layout layout_cycle(int n); // n >= 3

std::optional<Layout> layout_complete(int n); // layout for n <= 4, nullopt beyond

enum class KmnClass { Urvg, WeakOnly, NotWeak };

KmnClass classify_kmn(int m, int n); // requires 1 <= m <= n

std::optional<Layout> layout_kmn(int m, int n, bool weak);

// Interval-product construction: vertices take a y slot from their f1 path
// and an x slot from their f2 path, staggered by 2/3 so only consecutive
// slots interact. Output satisfies extract_graph == g, gx == f1, gy == f2.
Layout layout_linear_arb2(const Graph& g, const std::set<Edge>& f1, const std::set<Edge>& f2);

} // namespace urv
