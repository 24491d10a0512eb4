#pragma once

#include "urv/decompose.hpp"
#include "urv/geometry.hpp"
#include "urv/graph.hpp"

#include <utility>
#include <vector>

namespace urv {

struct RootedTree {
    Graph graph;
    std::string root;
};

// Depth-s caterpillar: spine of 2s+1 vertices rooted at the center, a leg
// from each spine vertex reaching depth s. Exactly s^2 + 2s edges.
RootedTree gen_tbs(int s);

// Depth-s two-colored extremal tree: the root centers one spine per forest,
// child counts follow the level recurrences. Returns the tree plus its
// verified decomposition (red = f1, blue = f2).
std::pair<RootedTree, Decomposition> gen_trs(int s);

// Per-level counts: a[k] spine-parented, b[k] leg-parented, c[k] total.
// Index 1..s; a1 = 4, b1 = 2, c1 = 6.
struct LevelCounts {
    std::vector<long long> a, b, c;
};

LevelCounts level_counts(int s);

double c_closed(int k);      // closed form for c_k
double edges_closed(int s);  // closed form for sum of c_1..c_s

long long isqrt_floor(long long n);
long long isqrt_ceil(long long n);

struct BoundsReport {
    long long n = 0;
    long long urvg_bound = 0;             // 6n - 4 ceil(sqrt n) + 1
    long long bipartite_bound = 0;        // 4n - 2 ceil(sqrt n) + 5
    long long dense_target = 0;           // 6n - 12 floor(sqrt n) + 6
    long long dense_bipartite_target = 0; // 4n - 8 ceil(sqrt n) + 4
};

BoundsReport bounds(long long n);

// Staggered lattice with interior degree 12 plus greedy boundary appends,
// each adding at least 6 edges. Requires n >= 64.
Layout gen_dense_layout(long long n);

// Bipartite lattice with interior degree 8; appends keep the extraction
// bipartite and add at least 4 edges each. Requires n >= 81.
Layout gen_dense_bipartite_layout(long long n);

} // namespace urv
