#include "urv/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace urv {

namespace {

Graph subgraph_of(const Graph& host, const std::set<Edge>& edges) {
    Graph g;
    g.vertices = host.vertices;
    for (const auto& e : edges) g.add_edge(e.first, e.second);
    return g;
}

} // namespace

bool is_linear_forest(const Graph& host, const std::set<Edge>& edges) {
    Graph g = subgraph_of(host, edges);
    GraphPredicates p = graph_predicates(g);
    return p.is_forest && p.max_degree <= 2;
}

bool verify_decomposition(const Graph& tree, const Decomposition& d) {
    GraphPredicates tp = graph_predicates(tree);
    if (!tp.is_tree) return false;

    std::set<Edge> all;
    for (const auto& e : d.f1) {
        if (!tree.edges.count(e)) return false;
        all.insert(e);
    }
    for (const auto& e : d.f2) {
        if (!tree.edges.count(e) || all.count(e)) return false;
        all.insert(e);
    }
    if (all != tree.edges) return false;

    for (const std::set<Edge>* cls : {&d.f1, &d.f2}) {
        auto cert = subdivided_caterpillar_forest_deg3(subgraph_of(tree, *cls));
        if (!cert) return false;
        for (const auto& e : *cls) {
            auto it = d.roles.find(e);
            if (it == d.roles.end()) return false;
            if (it->second != cert->roles.at(e)) return false;
        }
    }
    return true;
}

namespace {

struct ColoringSearch {
    const Graph& tree;
    std::vector<Edge> order;
    std::set<Edge> cls[2];

    explicit ColoringSearch(const Graph& t) : tree(t), order(t.edges.begin(), t.edges.end()) {}

    bool class_ok(int c) const {
        Graph g;
        g.vertices = tree.vertices;
        for (const auto& e : cls[c]) g.add_edge(e.first, e.second);
        return subdivided_caterpillar_forest_deg3(g).has_value();
    }

    std::size_t class_degree(int c, const std::string& v) const {
        std::size_t d = 0;
        for (const auto& e : cls[c])
            if (e.first == v || e.second == v) ++d;
        return d;
    }

    bool dfs(std::size_t i) {
        if (i == order.size()) return class_ok(0) && class_ok(1);
        const Edge& e = order[i];
        for (int c : {0, 1}) {
            if (class_degree(c, e.first) >= 3 || class_degree(c, e.second) >= 3) continue;
            cls[c].insert(e);
            // A failing partial class cannot be repaired by adding more tree
            // edges, so this prune is sound.
            if (class_ok(c) && dfs(i + 1)) return true;
            cls[c].erase(e);
        }
        return false;
    }
};

} // namespace

std::optional<Decomposition> tree_caterpillar_bipartition(const Graph& tree) {
    GraphPredicates p = graph_predicates(tree);
    if (!p.is_tree) throw std::invalid_argument("input graph is not a tree");
    if (p.max_degree > 6) return std::nullopt; // both classes would need degree >= 4

    ColoringSearch search(tree);
    if (!search.dfs(0)) return std::nullopt;

    Decomposition d;
    d.f1 = search.cls[0];
    d.f2 = search.cls[1];
    for (int c : {0, 1}) {
        Graph g;
        g.vertices = tree.vertices;
        for (const auto& e : search.cls[c]) g.add_edge(e.first, e.second);
        auto cert = subdivided_caterpillar_forest_deg3(g);
        for (const auto& e : search.cls[c]) d.roles[e] = cert->roles.at(e);
    }
    return d;
}

TreeClass classify_tree(const Graph& tree) {
    TreeClass out;
    auto d = tree_caterpillar_bipartition(tree);
    if (d) {
        out.kind = TreeClass::Kind::Urvg;
        out.decomposition = std::move(d);
    } else {
        out.kind = TreeClass::Kind::WeakOnly;
    }
    return out;
}

namespace {

struct LinearForestSearch {
    std::vector<Edge> order;
    std::map<std::string, int> deg[2];
    // Path components tracked with a rollback-friendly union-find.
    std::map<std::string, std::string> parent[2];

    std::string find_root(int c, std::string v) {
        while (true) {
            auto it = parent[c].find(v);
            if (it == parent[c].end() || it->second == v) return v;
            v = it->second;
        }
    }

    bool dfs(std::size_t i) {
        if (i == order.size()) return true;
        const Edge& e = order[i];
        for (int c : {0, 1}) {
            if (deg[c][e.first] >= 2 || deg[c][e.second] >= 2) continue;
            std::string ru = find_root(c, e.first);
            std::string rv = find_root(c, e.second);
            if (ru == rv) continue; // would close a cycle in this class
            ++deg[c][e.first];
            ++deg[c][e.second];
            bool had = parent[c].count(ru) > 0;
            std::string old = had ? parent[c][ru] : std::string();
            parent[c][ru] = rv;
            chosen[i] = c;
            if (dfs(i + 1)) return true;
            if (had) parent[c][ru] = old;
            else parent[c].erase(ru);
            --deg[c][e.first];
            --deg[c][e.second];
        }
        return false;
    }

    std::vector<int> chosen;
};

} // namespace

std::optional<std::pair<std::set<Edge>, std::set<Edge>>> linear_forest_bipartition(const Graph& g) {
    LinearForestSearch search;
    search.order.assign(g.edges.begin(), g.edges.end());
    search.chosen.assign(search.order.size(), 0);
    if (!search.dfs(0)) return std::nullopt;
    std::pair<std::set<Edge>, std::set<Edge>> out;
    for (std::size_t i = 0; i < search.order.size(); ++i)
        (search.chosen[i] == 0 ? out.first : out.second).insert(search.order[i]);
    return out;
}

} // namespace urv
