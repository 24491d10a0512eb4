#include "urv/synth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace urv {

LayoutExtents extents(const Layout& layout) {
    if (layout.squares.empty()) throw std::invalid_argument("extents of an empty layout");
    LayoutExtents e{layout.squares[0].x, layout.squares[0].x, layout.squares[0].y,
                    layout.squares[0].y};
    for (const auto& s : layout.squares) {
        e.x_m = min(e.x_m, s.x);
        e.x_M = max(e.x_M, s.x);
        e.y_m = min(e.y_m, s.y);
        e.y_M = max(e.y_M, s.y);
    }
    return e;
}

namespace {

const Rational kStagger(2, 3); // any value in (1/2, 1) works

// Decompose a linear forest over the host's vertex set into oriented paths,
// singletons included; deterministic order.
std::vector<std::vector<std::string>> linear_paths(const Graph& host, const std::set<Edge>& edges) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& v : host.vertices) adj[v];
    for (const auto& e : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<std::vector<std::string>> paths;
    std::set<std::string> used;
    for (const auto& [v, nbrs] : adj) {
        if (used.count(v) || nbrs.size() > 1) continue; // start from endpoints
        std::vector<std::string> path{v};
        used.insert(v);
        std::string prev = v;
        std::string cur = v;
        while (true) {
            const auto& ns = adj[cur];
            std::string next;
            bool found = false;
            for (const auto& w : ns)
                if (w != prev && !used.count(w)) {
                    next = w;
                    found = true;
                    break;
                }
            if (!found) break;
            path.push_back(next);
            used.insert(next);
            prev = cur;
            cur = next;
        }
        paths.push_back(std::move(path));
    }
    if (used.size() != host.vertices.size())
        throw std::invalid_argument("edge class is not a linear forest");
    return paths;
}

} // namespace

Layout layout_linear_arb2(const Graph& g, const std::set<Edge>& f1, const std::set<Edge>& f2) {
    for (const auto& e : f1)
        if (!g.edges.count(e)) throw std::invalid_argument("f1 edge not in graph");
    for (const auto& e : f2)
        if (!g.edges.count(e) || f1.count(e))
            throw std::invalid_argument("f2 edge not in graph or shared with f1");
    if (f1.size() + f2.size() != g.edges.size())
        throw std::invalid_argument("f1 and f2 do not partition the edges");
    if (!is_linear_forest(g, f1) || !is_linear_forest(g, f2))
        throw std::invalid_argument("class is not a union of paths");

    // f1 paths advance along y (horizontal visibilities), f2 paths along x.
    std::map<std::string, Rational> xs, ys;
    auto assign = [&](const std::set<Edge>& cls, std::map<std::string, Rational>& coord) {
        Rational base(0);
        for (const auto& path : linear_paths(g, cls)) {
            for (std::size_t i = 0; i < path.size(); ++i)
                coord[path[i]] = base + Rational(static_cast<long long>(i)) * kStagger;
            Rational span = Rational(static_cast<long long>(path.size() - 1)) * kStagger + 1;
            base += span + 2; // gaps > 1 keep distinct paths out of each other's slots
        }
    };
    assign(f1, ys);
    assign(f2, xs);

    Layout layout;
    for (const auto& v : g.vertices) layout.add(v, xs.at(v), ys.at(v));

    auto split = split_xy(layout);
    if (!(split.gx.edges == f1) || !(split.gy.edges == f2))
        throw SynthesisError("interval construction failed to realize the requested split");
    return layout;
}

Layout layout_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle layout needs n >= 3");
    Graph g = cycle_graph(n);
    auto split = linear_forest_bipartition(g);
    if (!split) throw SynthesisError("cycle failed to split into two paths");
    return layout_linear_arb2(g, split->first, split->second);
}

std::optional<Layout> layout_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete layout needs n >= 1");
    if (n >= 5) return std::nullopt;
    Layout layout;
    if (n == 1) {
        layout.add("1", 0, 0);
        return layout;
    }
    if (n == 2) {
        layout.add("1", 0, 0);
        layout.add("2", 2, 0);
        return layout;
    }
    Graph g = complete_graph(n);
    auto split = linear_forest_bipartition(g);
    if (!split) throw SynthesisError("small complete graph failed to split into paths");
    Layout out = layout_linear_arb2(g, split->first, split->second);
    if (extract_graph(out) != g) throw SynthesisError("complete-graph layout is not complete");
    return out;
}

KmnClass classify_kmn(int m, int n) {
    if (m < 1 || m > n) throw std::invalid_argument("classify_kmn requires 1 <= m <= n");
    if ((m <= 2 && n <= 6) || (m == 3 && n <= 4)) return KmnClass::Urvg;
    if (m <= 2 || (m <= 3 && n <= 4)) return KmnClass::WeakOnly;
    return KmnClass::NotWeak;
}

namespace {

// One square seeing three others per direction: one flush, two protruding.
// Prefixes of the b-list realize every K_{1,n}, n <= 6.
Layout kmn_star_layout(int n) {
    static const std::pair<Rational, Rational> kBranch[6] = {
        {Rational(-2), Rational(0)},          // flush left
        {Rational(0), Rational(-2)},          // flush below
        {Rational(2), Rational(2, 3)},        // protruding right, upper
        {Rational(2, 3), Rational(2)},        // protruding above, right
        {Rational(4), Rational(-2, 3)},       // protruding right, lower
        {Rational(-2, 3), Rational(4)},       // protruding above, left
    };
    Layout layout;
    layout.add("a1", 0, 0);
    for (int k = 0; k < n; ++k)
        layout.add("b" + std::to_string(k + 1), kBranch[k].first, kBranch[k].second);
    return layout;
}

// Reconstructions of the maximal bipartite layouts; coordinates found by
// exhaustive lattice search and locked in by the extraction round-trip tests.
Layout kmn_table_layout(int m, int n);

// Leaning stack: every b-square shows a left sliver to a1 below and a right
// sliver to a2 above. Weak layout, so the stack's internal edges are allowed.
Layout kmn_weak_stack(int m, int n) {
    Layout layout;
    layout.add("a1", 0, 0);
    for (int k = 1; k <= n; ++k)
        layout.add("b" + std::to_string(k), Rational(1) - Rational(k, 2LL * n), Rational(k));
    if (m == 2) layout.add("a2", Rational(1) - Rational(1, 2LL * n), n + 1);
    return layout;
}

} // namespace

std::optional<Layout> layout_kmn(int m, int n, bool weak) {
    KmnClass cls = classify_kmn(m, n);
    if (cls == KmnClass::NotWeak) return std::nullopt;
    if (cls == KmnClass::WeakOnly && !weak) return std::nullopt;

    Graph target = complete_bipartite(m, n);
    if (cls == KmnClass::Urvg) {
        Layout layout;
        if (m == 1) {
            layout = kmn_star_layout(n);
        } else if (m == 2 && n >= 5) {
            layout = kmn_table_layout(m, n);
        } else {
            auto split = linear_forest_bipartition(target);
            if (!split) throw SynthesisError("expected linear-arboricity-2 bipartite case");
            layout = layout_linear_arb2(target, split->first, split->second);
        }
        if (extract_graph(layout) != target)
            throw SynthesisError("bipartite layout failed the extraction round trip");
        return layout;
    }

    // WeakOnly and weak requested; only m <= 2 reaches here.
    Layout layout = kmn_weak_stack(m, n);
    Graph got = extract_graph(layout);
    for (const auto& e : target.edges)
        if (!got.edges.count(e))
            throw SynthesisError("weak layout is missing edge " + e.first + "-" + e.second);
    return layout;
}

// ---------------------------------------------------------------------------
// Tree layout (strong): flush legs, protruding spines, band surgery.

namespace {

enum class Cls { F1, F2 };

struct TreePlacer {
    const Graph& tree;
    const Decomposition& decomp;
    Layout layout;
    std::set<std::string> placed;
    std::map<std::string, std::string> parent;

    TreePlacer(const Graph& t, const Decomposition& d) : tree(t), decomp(d) {}

    Cls edge_class(const Edge& e) const { return decomp.f1.count(e) ? Cls::F1 : Cls::F2; }

    Rational main_of(const std::string& id, Cls c) const {
        const Square& s = layout.at(id);
        return c == Cls::F1 ? s.x : s.y;
    }
    Rational cross_of(const std::string& id, Cls c) const {
        const Square& s = layout.at(id);
        return c == Cls::F1 ? s.y : s.x;
    }

    void flip_main(Cls c) {
        layout = c == Cls::F1 ? reflect_x(layout) : reflect_y(layout);
    }
    void flip_cross(Cls c) {
        layout = c == Cls::F1 ? reflect_y(layout) : reflect_x(layout);
    }

    Rational main_min(Cls c) const {
        LayoutExtents e = extents(layout);
        return c == Cls::F1 ? e.x_m : e.y_m;
    }
    Rational main_max(Cls c) const {
        LayoutExtents e = extents(layout);
        return c == Cls::F1 ? e.x_M : e.y_M;
    }

    std::optional<Rational> min_piercer(Cls c, const Rational& t) const {
        std::optional<Rational> best;
        for (const auto& s : layout.squares) {
            const Rational& r = c == Cls::F1 ? s.y : s.x;
            if (r < t && t < r + Rational(1))
                if (!best || r < *best) best = r;
        }
        return best;
    }

    // Insert a cross-axis band at t, first pushing any pierced rows upward
    // with admissible pre-bands. Graph-preserving by composition.
    void banded_insert(Cls c, Rational t, int depth = 0) {
        if (depth > 64) throw SynthesisError("band repair did not converge");
        for (int guard = 0; guard < 64; ++guard) {
            auto piercer = min_piercer(c, t);
            if (!piercer) {
                layout = c == Cls::F1 ? insert_horizontal_band(layout, t)
                                      : insert_vertical_band(layout, t);
                return;
            }
            banded_insert(c, *piercer, depth + 1);
        }
        throw SynthesisError("band repair did not converge");
    }

    void place(const std::string& id, Cls c, const Rational& main_v, const Rational& cross_v) {
        if (c == Cls::F1) layout.add(id, main_v, cross_v);
        else layout.add(id, cross_v, main_v);
        placed.insert(id);

        // Invariant 5 and friends: the placed prefix must extract to exactly
        // the induced subtree.
        Graph expected;
        for (const auto& v : placed) expected.add_vertex(v);
        for (const auto& e : tree.edges)
            if (placed.count(e.first) && placed.count(e.second)) expected.add_edge(e.first, e.second);
        Graph got = extract_graph(layout);
        if (got != expected) {
            std::ostringstream msg;
            msg << "placement of " << id << " broke the prefix contract;";
            for (const auto& e : expected.edges)
                if (!got.edges.count(e)) msg << " missing " << e.first << "-" << e.second;
            for (const auto& e : got.edges)
                if (!expected.edges.count(e)) msg << " unwanted " << e.first << "-" << e.second;
            throw SynthesisError(msg.str());
        }
    }

    void place_spine_child(const std::string& v, const std::string& kid, Cls c, bool positive_side) {
        for (int guard = 0;; ++guard) {
            if (guard > 64) throw SynthesisError("band repair did not converge");
            Rational t = cross_of(v, c) + Rational(1);
            auto piercer = min_piercer(c, t);
            if (!piercer) {
                layout = c == Cls::F1 ? insert_horizontal_band(layout, t)
                                      : insert_vertical_band(layout, t);
                break;
            }
            banded_insert(c, *piercer);
        }
        Rational mv = positive_side ? main_max(c) + Rational(2) : main_min(c) - Rational(2);
        place(kid, c, mv, cross_of(v, c) + Rational(2, 3));
    }

    // Flush occupants of v's row: the parent when joined by a same-class leg
    // edge, plus already placed same-class leg children.
    std::vector<std::string> row_occupants(const std::string& v, Cls c) const {
        std::vector<std::string> out;
        if (parent.count(v)) {
            Edge pe = make_edge(v, parent.at(v));
            if (edge_class(pe) == c && decomp.roles.at(pe) == EdgeRole::Leg)
                out.push_back(parent.at(v));
        }
        for (const auto& w : tree.neighbors(v)) {
            if (!placed.count(w) || !parent.count(w) || parent.at(w) != v) continue;
            Edge e = make_edge(v, w);
            if (edge_class(e) == c && decomp.roles.at(e) == EdgeRole::Leg) out.push_back(w);
        }
        return out;
    }

    void place_legs(const std::string& v, Cls c, const std::vector<std::string>& kids) {
        if (kids.empty()) return;
        bool parent_in_class =
            parent.count(v) && edge_class(make_edge(v, parent.at(v))) == c;
        if (parent_in_class) {
            if (kids.size() > 1)
                throw SynthesisError("vertex " + v + " has two leg children and a same-class parent");
            // extend the flush chain away from the parent
            bool parent_positive = main_of(parent.at(v), c) > main_of(v, c);
            Rational mv = parent_positive ? main_min(c) - Rational(2) : main_max(c) + Rational(2);
            place(kids[0], c, mv, cross_of(v, c));
            return;
        }
        if (kids.size() > 2) throw SynthesisError("vertex " + v + " has more than two leg children");
        place(kids[0], c, main_min(c) - Rational(2), cross_of(v, c));
        if (kids.size() == 2) place(kids[1], c, main_max(c) + Rational(2), cross_of(v, c));
    }

    void place_spines(const std::string& v, Cls c, const std::vector<std::string>& kids) {
        if (kids.empty()) return;
        if (kids.size() > 2) throw SynthesisError("vertex " + v + " has more than two spine children");
        bool has_parent = parent.count(v) > 0;
        Edge pe;
        if (has_parent) pe = make_edge(v, parent.at(v));
        bool parent_same_class = has_parent && edge_class(pe) == c;
        bool parent_spine = parent_same_class && decomp.roles.at(pe) == EdgeRole::Spine;
        if (parent_spine && kids.size() > 1)
            throw SynthesisError("vertex " + v + " continues a spine in two directions");

        // Spine children go to the extreme on the side of v's flush chain
        // that is empty, so v blocks its chain from the newcomers.
        bool has_pos = false, has_neg = false;
        for (const auto& occ : row_occupants(v, c)) {
            if (main_of(occ, c) > main_of(v, c)) has_pos = true;
            else has_neg = true;
        }
        if (has_pos && has_neg)
            throw SynthesisError("vertex " + v + " has flush neighbors on both sides plus spines");
        bool positive_side = !has_pos;

        if (parent_spine && cross_of(parent.at(v), c) > cross_of(v, c))
            flip_cross(c); // child protrudes away from the parent
        place_spine_child(v, kids[0], c, positive_side);
        if (kids.size() == 2) {
            flip_cross(c);
            place_spine_child(v, kids[1], c, positive_side);
        }
    }

    Layout run() {
        std::string root = *tree.vertices.begin();
        std::vector<std::string> order{root};
        std::deque<std::string> queue{root};
        std::set<std::string> seen{root};
        while (!queue.empty()) {
            std::string v = queue.front();
            queue.pop_front();
            for (const auto& w : tree.neighbors(v)) { // neighbors come sorted
                if (seen.insert(w).second) {
                    parent[w] = v;
                    order.push_back(w);
                    queue.push_back(w);
                }
            }
        }
        if (order.size() != tree.vertices.size())
            throw std::invalid_argument("tree input is not connected");

        layout.add(root, 0, 0);
        placed.insert(root);

        for (const auto& v : order) {
            std::vector<std::string> legs[2], spines[2];
            for (const auto& w : tree.neighbors(v)) {
                if (parent.count(w) == 0 || parent.at(w) != v) continue;
                Edge e = make_edge(v, w);
                int c = edge_class(e) == Cls::F1 ? 0 : 1;
                (decomp.roles.at(e) == EdgeRole::Leg ? legs[c] : spines[c]).push_back(w);
            }
            place_legs(v, Cls::F1, legs[0]);
            place_legs(v, Cls::F2, legs[1]);
            place_spines(v, Cls::F1, spines[0]);
            place_spines(v, Cls::F2, spines[1]);
        }
        return layout;
    }
};

} // namespace

Layout layout_tree(const Graph& tree, const Decomposition& d) {
    if (!verify_decomposition(tree, d))
        throw std::invalid_argument("decomposition certificate does not verify");

    TreePlacer placer(tree, d);
    Layout out = placer.run();

    if (extract_graph(out) != tree)
        throw SynthesisError("tree layout failed the extraction round trip");
    auto split = split_xy(out);
    if (!(split.gx.edges == d.f1) || !(split.gy.edges == d.f2))
        throw SynthesisError("tree layout realized the wrong split");
    return out;
}

Layout layout_tree_weak(const Graph& tree) {
    GraphPredicates p = graph_predicates(tree);
    if (!p.is_tree) throw std::invalid_argument("weak layout input is not a tree");

    std::string root = *tree.vertices.begin();
    std::map<std::string, std::string> parent;
    std::vector<std::string> order{root};
    std::deque<std::string> queue{root};
    std::set<std::string> seen{root};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const auto& w : tree.neighbors(v))
            if (seen.insert(w).second) {
                parent[w] = v;
                order.push_back(w);
                queue.push_back(w);
            }
    }

    Layout layout;
    layout.add(root, 0, 0);
    for (const auto& p_id : order) {
        std::vector<std::string> kids;
        for (const auto& w : tree.neighbors(p_id))
            if (parent.count(w) && parent.at(w) == p_id) kids.push_back(w);
        if (kids.empty()) continue;
        long long k = static_cast<long long>(kids.size());
        Rational t = layout.at(p_id).y; // all anchors stay integral on this axis
        for (long long i = 0; i < k; ++i) layout = insert_horizontal_band(layout, t);
        Rational px = layout.at(p_id).x;
        Rational py = layout.at(p_id).y;
        for (long long i = 1; i <= k; ++i)
            layout.add(kids[i - 1], px + Rational(1) - Rational(i, k), py - Rational(i));
    }

    Graph got = extract_graph(layout);
    for (const auto& e : tree.edges)
        if (!got.edges.count(e))
            throw SynthesisError("weak tree layout is missing edge " + e.first + "-" + e.second);
    return layout;
}

// Frozen coordinates for the two bipartite cases outside the other
// constructions; see data/golden for the committed layouts.
namespace {

Layout kmn_table_layout(int m, int n) {
    if (m != 2 || n < 5 || n > 6)
        throw std::invalid_argument("no table layout for this bipartite case");
    // Pinwheel around two corner-touching centers; found on a 1/3 lattice.
    Layout layout;
    layout.add("a1", 0, 0);
    layout.add("a2", 1, 1);
    static const std::pair<Rational, Rational> kArm[6] = {
        {Rational(-3), Rational(1, 3)},
        {Rational(-2, 3), Rational(4, 3)},
        {Rational(1, 3), Rational(-3)},
        {Rational(1, 3), Rational(7, 3)},
        {Rational(4, 3), Rational(-2, 3)},
        {Rational(7, 3), Rational(1, 3)},
    };
    for (int k = 0; k < n; ++k)
        layout.add("b" + std::to_string(k + 1), kArm[k].first, kArm[k].second);
    return layout;
}

} // namespace

} // namespace urv
