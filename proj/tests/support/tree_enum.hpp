#pragma once

// Enumeration of unlabeled trees by leaf extension with AHU canonical forms.
// Counts match the classical table (1, 1, 1, 2, 3, 6, 11, 23, 47, 106).

#include "urv/graph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace urv::testing {

namespace detail {

// Adjacency-list tree on vertices 0..n-1.
using IntTree = std::vector<std::vector<int>>;

inline std::string ahu(const IntTree& t, int v, int parent) {
    std::vector<std::string> parts;
    for (int w : t[v])
        if (w != parent) parts.push_back(ahu(t, w, v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    return s;
}

inline std::vector<int> centers(const IntTree& t) {
    int n = static_cast<int>(t.size());
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(t[v].size());
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) layer.push_back(v);
    int removed = 0;
    std::vector<int> current = layer;
    while (n - removed > 2) {
        std::vector<int> next;
        for (int v : current) {
            ++removed;
            for (int w : t[v])
                if (--deg[w] == 1) next.push_back(w);
        }
        current = next;
    }
    return current;
}

inline std::string canonical(const IntTree& t) {
    auto c = centers(t);
    if (c.size() == 1) return ahu(t, c[0], -1);
    std::string a = ahu(t, c[0], c[1]);
    std::string b = ahu(t, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return "(" + a + b + ")";
}

} // namespace detail

// All unlabeled trees on exactly n vertices, as Graphs with ids "1".."n".
inline std::vector<Graph> all_trees(int n) {
    using detail::IntTree;
    std::vector<IntTree> level{IntTree(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, IntTree> seen;
        for (const auto& t : level) {
            for (int host = 0; host < static_cast<int>(t.size()); ++host) {
                IntTree grown = t;
                grown.push_back({host});
                grown[host].push_back(static_cast<int>(t.size()));
                seen.emplace(detail::canonical(grown), grown);
            }
        }
        level.clear();
        for (auto& [key, tree] : seen) level.push_back(std::move(tree));
    }
    std::vector<Graph> out;
    for (const auto& t : level) {
        Graph g;
        for (int v = 0; v < static_cast<int>(t.size()); ++v) g.add_vertex(std::to_string(v + 1));
        for (int v = 0; v < static_cast<int>(t.size()); ++v)
            for (int w : t[v])
                if (v < w) g.add_edge(std::to_string(v + 1), std::to_string(w + 1));
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace urv::testing
