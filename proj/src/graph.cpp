#include "urv/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace urv {

void Graph::add_edge(const std::string& u, const std::string& v) {
    if (u == v) throw std::invalid_argument("loop edge on vertex " + u);
    vertices.insert(u);
    vertices.insert(v);
    edges.insert(make_edge(u, v));
}

std::size_t Graph::degree(const std::string& v) const {
    std::size_t d = 0;
    for (const auto& e : edges)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<std::string> Graph::neighbors(const std::string& v) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    return out;
}

Graph complete_graph(int n) {
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(std::to_string(i), std::to_string(j));
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_edge(std::to_string(i), std::to_string(i % n + 1));
    return g;
}

Graph complete_bipartite(int m, int n) {
    Graph g;
    for (int i = 1; i <= m; ++i) g.add_vertex("a" + std::to_string(i));
    for (int j = 1; j <= n; ++j) g.add_vertex("b" + std::to_string(j));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) g.add_edge("a" + std::to_string(i), "b" + std::to_string(j));
    return g;
}

namespace {

struct AdjacencyView {
    std::vector<std::string> ids;                 // sorted
    std::map<std::string, int> index;
    std::vector<std::vector<int>> adj;

    explicit AdjacencyView(const Graph& g) {
        ids.assign(g.vertices.begin(), g.vertices.end());
        for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;
        adj.resize(ids.size());
        for (const auto& e : g.edges) {
            int u = index.at(e.first), v = index.at(e.second);
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
    }
};

} // namespace

bool contains_k5(const Graph& g) {
    AdjacencyView view(g);
    const int n = static_cast<int>(view.ids.size());
    auto adjacent = [&](int a, int b) {
        return std::binary_search(view.adj[a].begin(), view.adj[a].end(), b);
    };
    for (const auto& e : g.edges) {
        int u = view.index.at(e.first), v = view.index.at(e.second);
        std::vector<int> common;
        for (int w : view.adj[u])
            if (w != v && adjacent(v, w)) common.push_back(w);
        const int m = static_cast<int>(common.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                if (!adjacent(common[a], common[b])) continue;
                for (int c = b + 1; c < m; ++c)
                    if (adjacent(common[a], common[c]) && adjacent(common[b], common[c])) return true;
            }
    }
    (void)n;
    return false;
}

GraphPredicates graph_predicates(const Graph& g) {
    GraphPredicates out;
    AdjacencyView view(g);
    const int n = static_cast<int>(view.ids.size());

    for (int i = 0; i < n; ++i)
        out.max_degree = std::max(out.max_degree, view.adj[i].size());

    // Components + acyclicity by BFS.
    std::vector<int> comp(n, -1);
    int comps = 0;
    bool acyclic = true;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = comps;
        std::deque<int> q{s};
        std::vector<int> parent(n, -2);
        parent[s] = -1;
        std::size_t comp_edges = 0, comp_vertices = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            ++comp_vertices;
            comp_edges += view.adj[v].size();
            for (int w : view.adj[v]) {
                if (comp[w] == -1) {
                    comp[w] = comps;
                    parent[w] = v;
                    q.push_back(w);
                }
            }
        }
        comp_edges /= 2;
        if (comp_edges + 1 != comp_vertices) acyclic = false;
        ++comps;
    }
    out.is_forest = acyclic;
    out.is_tree = acyclic && comps == 1 && n > 0;

    // Bipartition by BFS 2-coloring.
    std::vector<int> color(n, -1);
    bool bipartite = true;
    for (int s = 0; s < n && bipartite; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty() && bipartite) {
            int v = q.front();
            q.pop_front();
            for (int w : view.adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    bipartite = false;
                    break;
                }
            }
        }
    }
    out.is_bipartite = bipartite;
    if (bipartite)
        for (int i = 0; i < n; ++i) out.bipartition[view.ids[i]] = color[i] < 0 ? 0 : color[i];

    // Bridges via lowlink; a vertex lies on a cycle iff it has a non-bridge edge.
    std::vector<int> disc(n, -1), low(n, 0);
    std::set<Edge> bridges;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int pe) {
        disc[v] = low[v] = timer++;
        int skip_parallel = pe; // tree parent index; simple graph so one skip
        for (int w : view.adj[v]) {
            if (w == skip_parallel) {
                skip_parallel = -1; // only skip the parent edge once
                continue;
            }
            if (disc[w] == -1) {
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridges.insert(make_edge(view.ids[v], view.ids[w]));
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (disc[s] == -1) dfs(s, -1);
    for (const auto& e : g.edges)
        if (!bridges.count(e)) {
            out.vertices_on_cycles.insert(e.first);
            out.vertices_on_cycles.insert(e.second);
        }

    out.contains_k5 = contains_k5(g);
    return out;
}

std::vector<std::string> tree_path(const Graph& tree, const std::string& u, const std::string& v) {
    std::map<std::string, std::string> parent;
    parent[u] = u;
    std::deque<std::string> q{u};
    while (!q.empty()) {
        std::string cur = q.front();
        q.pop_front();
        if (cur == v) break;
        for (const auto& w : tree.neighbors(cur)) {
            if (!parent.count(w)) {
                parent[w] = cur;
                q.push_back(w);
            }
        }
    }
    if (!parent.count(v)) return {};
    std::vector<std::string> path;
    for (std::string cur = v;; cur = parent[cur]) {
        path.push_back(cur);
        if (cur == u) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

// Spine of one tree component: a maximum-length leaf-to-leaf path containing
// every degree-3 vertex; ties broken by lexicographically least endpoint pair.
std::optional<std::vector<std::string>> component_spine(const Graph& g,
                                                        const std::vector<std::string>& comp) {
    if (comp.size() == 1) return std::vector<std::string>{comp.front()};

    std::set<std::string> deg3;
    std::vector<std::string> leaves;
    for (const auto& v : comp) {
        std::size_t d = g.degree(v);
        if (d == 3) deg3.insert(v);
        if (d == 1) leaves.push_back(v);
    }
    std::sort(leaves.begin(), leaves.end());

    std::optional<std::vector<std::string>> best;
    std::pair<std::string, std::string> best_ends;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
            auto path = tree_path(g, leaves[i], leaves[j]);
            std::set<std::string> on_path(path.begin(), path.end());
            bool covers = std::all_of(deg3.begin(), deg3.end(),
                                      [&](const std::string& v) { return on_path.count(v) > 0; });
            if (!covers) continue;
            auto ends = std::make_pair(leaves[i], leaves[j]);
            if (!best || path.size() > best->size() ||
                (path.size() == best->size() && ends < best_ends)) {
                best = path;
                best_ends = ends;
            }
        }
    }
    return best;
}

} // namespace

std::optional<CaterpillarCertificate> subdivided_caterpillar_forest_deg3(const Graph& g) {
    GraphPredicates p = graph_predicates(g);
    if (!p.is_forest || p.max_degree > 3) return std::nullopt;

    // Split into components.
    std::map<std::string, int> comp;
    int comps = 0;
    for (const auto& s : g.vertices) {
        if (comp.count(s)) continue;
        std::deque<std::string> q{s};
        comp[s] = comps;
        while (!q.empty()) {
            std::string v = q.front();
            q.pop_front();
            for (const auto& w : g.neighbors(v))
                if (!comp.count(w)) {
                    comp[w] = comps;
                    q.push_back(w);
                }
        }
        ++comps;
    }
    std::vector<std::vector<std::string>> members(comps);
    for (const auto& [v, c] : comp) members[c].push_back(v);

    CaterpillarCertificate cert;
    for (const auto& m : members) {
        auto spine = component_spine(g, m);
        if (!spine) return std::nullopt;
        cert.spines.push_back(*spine);
    }
    std::set<Edge> spine_edges;
    for (const auto& spine : cert.spines)
        for (std::size_t i = 0; i + 1 < spine.size(); ++i)
            spine_edges.insert(make_edge(spine[i], spine[i + 1]));
    for (const auto& e : g.edges)
        cert.roles[e] = spine_edges.count(e) ? EdgeRole::Spine : EdgeRole::Leg;
    return cert;
}

MonotoneWitness longest_monotone_subsequence(const std::vector<Rational>& seq) {
    const std::size_t n = seq.size();
    MonotoneWitness out;
    if (n == 0) return out;

    auto solve = [&](bool nondecreasing) {
        std::vector<std::size_t> len(n, 1), prev(n, n);
        std::size_t best = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                bool ok = nondecreasing ? seq[j] <= seq[i] : seq[j] >= seq[i];
                if (ok && len[j] + 1 > len[i]) {
                    len[i] = len[j] + 1;
                    prev[i] = j;
                }
            }
            if (len[i] > len[best]) best = i;
        }
        std::vector<std::size_t> idx;
        for (std::size_t cur = best;; cur = prev[cur]) {
            idx.push_back(cur);
            if (prev[cur] == n) break;
        }
        std::reverse(idx.begin(), idx.end());
        return idx;
    };

    auto up = solve(true);
    auto down = solve(false);
    if (up.size() >= down.size()) {
        out.indices = up;
        out.direction = MonotoneWitness::Direction::NonDecreasing;
    } else {
        out.indices = down;
        out.direction = MonotoneWitness::Direction::NonIncreasing;
    }
    return out;
}

} // namespace urv
