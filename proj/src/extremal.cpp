#include "urv/extremal.hpp"

#include "scaled_vis.hpp"
#include "urv/synth.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace urv {

RootedTree gen_tbs(int s) {
    if (s < 1) throw std::invalid_argument("gen_tbs needs s >= 1");
    RootedTree t;
    t.root = "r";
    t.graph.add_vertex("r");

    auto chain = [&](const std::string& from, const std::string& prefix, int length) {
        std::string prev = from;
        for (int d = 1; d <= length; ++d) {
            std::string v = prefix + std::to_string(d);
            t.graph.add_edge(prev, v);
            prev = v;
        }
    };
    chain("r", "L", s); // spine arms
    chain("r", "R", s);
    chain("r", "M", s); // root leg
    for (int k = 1; k < s; ++k) { // legs reach down to depth s
        chain("L" + std::to_string(k), "L" + std::to_string(k) + ".", s - k);
        chain("R" + std::to_string(k), "R" + std::to_string(k) + ".", s - k);
    }
    return t;
}

LevelCounts level_counts(int s) {
    if (s < 1) throw std::invalid_argument("level_counts needs s >= 1");
    LevelCounts lc;
    lc.a.assign(s + 1, 0);
    lc.b.assign(s + 1, 0);
    lc.c.assign(s + 1, 0);
    lc.a[1] = 4;
    lc.b[1] = 2;
    lc.c[1] = 6;
    for (int k = 2; k <= s; ++k) {
        lc.a[k] = lc.a[k - 1] + 2 * lc.c[k - 1];
        lc.c[k] = lc.a[k - 1] + 4 * lc.c[k - 1];
        lc.b[k] = lc.c[k] - lc.a[k];
    }
    return lc;
}

std::pair<RootedTree, Decomposition> gen_trs(int s) {
    if (s < 1) throw std::invalid_argument("gen_trs needs s >= 1");
    RootedTree t;
    t.root = "0";
    t.graph.add_vertex("0");

    enum Kind { RedSpine, BlueSpine, RedLeg, BlueLeg };
    struct Pending {
        std::string id;
        Kind parent_edge;
        int level;
    };
    std::set<Edge> red, blue;
    int counter = 0;
    std::deque<Pending> queue;

    auto attach = [&](const std::string& parent, Kind kind, int level) {
        std::string id = std::to_string(++counter);
        t.graph.add_edge(parent, id);
        ((kind == RedSpine || kind == RedLeg) ? red : blue).insert(make_edge(parent, id));
        queue.push_back(Pending{id, kind, level});
    };

    for (Kind k : {RedSpine, RedSpine, BlueSpine, BlueSpine, RedLeg, BlueLeg}) attach("0", k, 1);

    while (!queue.empty()) {
        Pending p = queue.front();
        queue.pop_front();
        if (p.level >= s) continue; // leaves at depth s
        switch (p.parent_edge) {
        case RedSpine:
            for (Kind k : {RedSpine, BlueSpine, BlueSpine, RedLeg, BlueLeg})
                attach(p.id, k, p.level + 1);
            break;
        case BlueSpine:
            for (Kind k : {BlueSpine, RedSpine, RedSpine, BlueLeg, RedLeg})
                attach(p.id, k, p.level + 1);
            break;
        case RedLeg:
            for (Kind k : {RedLeg, BlueSpine, BlueSpine, BlueLeg}) attach(p.id, k, p.level + 1);
            break;
        case BlueLeg:
            for (Kind k : {BlueLeg, RedSpine, RedSpine, RedLeg}) attach(p.id, k, p.level + 1);
            break;
        }
    }

    // Roles come from the canonical spine certificates so the certificate
    // checker and the layout algorithm agree on them.
    Decomposition d;
    d.f1 = red;
    d.f2 = blue;
    for (const std::set<Edge>* cls : {&d.f1, &d.f2}) {
        Graph sub;
        sub.vertices = t.graph.vertices;
        for (const auto& e : *cls) sub.add_edge(e.first, e.second);
        auto cert = subdivided_caterpillar_forest_deg3(sub);
        if (!cert) throw SynthesisError("generated class is not a caterpillar forest");
        for (const auto& e : *cls) d.roles[e] = cert->roles.at(e);
    }
    return {std::move(t), std::move(d)};
}

double c_closed(int k) {
    const double r17 = std::sqrt(17.0);
    return (1.0 / 17.0) * std::pow(2.0, -1.0 - 2.0 * k) *
           ((17.0 - 7.0 * r17) * std::pow(10.0 - 2.0 * r17, k) +
            std::pow(2.0, 1.0 + k) * r17 * std::pow(5.0 + r17, k) +
            std::pow(2.0 * (5.0 + r17), k) * (17.0 + 5.0 * r17));
}

double edges_closed(int s) {
    const double r17 = std::sqrt(17.0);
    return -2.0 + (1.0 - 3.0 / r17) * std::pow((5.0 - r17) / 2.0, s) +
           (1.0 + 3.0 / r17) * std::pow((5.0 + r17) / 2.0, s);
}

long long isqrt_floor(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt of a negative number");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

long long isqrt_ceil(long long n) {
    if (n <= 0) return 0;
    return isqrt_floor(n - 1) + 1;
}

BoundsReport bounds(long long n) {
    if (n < 1) throw std::invalid_argument("bounds needs n >= 1");
    BoundsReport r;
    r.n = n;
    r.urvg_bound = 6 * n - 4 * isqrt_ceil(n) + 1;
    r.bipartite_bound = 4 * n - 2 * isqrt_ceil(n) + 5;
    r.dense_target = 6 * n - 12 * isqrt_floor(n) + 6;
    r.dense_bipartite_target = 4 * n - 8 * isqrt_ceil(n) + 4;
    return r;
}

// ---------------------------------------------------------------------------
// Dense layouts. Base pattern: skewed lattice i*u + j*v in units of 1/6 with
// interior degree 12 (general, u=(2,-9), v=(7,4)) or 8 (bipartite,
// u=(2,-10), v=(8,4)); both found by lattice search and pinned by the
// extraction tests. Boundary squares are appended greedily on the 1/6 grid.

namespace {

using detail::IPoint;
using detail::iadjacent;
using detail::idisjoint;
using detail::ivisible;

constexpr long long kSide = 6;

struct DenseBuilder {
    std::vector<IPoint> pts;
    std::vector<std::tuple<int, int, bool>> visible_pairs; // (i, j, horizontal)

    void rebuild_pairs() {
        visible_pairs.clear();
        const int n = static_cast<int>(pts.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (ivisible(pts, i, j, true, kSide)) visible_pairs.emplace_back(i, j, true);
                else if (ivisible(pts, i, j, false, kSide)) visible_pairs.emplace_back(i, j, false);
            }
    }

    // Edge delta if p were appended: new edges at p minus previously visible
    // pairs that p now blocks.
    long long append_delta(const IPoint& p) {
        pts.push_back(p);
        const int idx = static_cast<int>(pts.size()) - 1;
        long long gained = 0;
        for (int t = 0; t < idx; ++t)
            if (iadjacent(pts, t, idx, kSide)) ++gained;
        long long lost = 0;
        for (const auto& [i, j, horiz] : visible_pairs) {
            long long lo = horiz ? std::min(pts[i].x, pts[j].x) : std::min(pts[i].y, pts[j].y);
            long long hi = horiz ? std::max(pts[i].x, pts[j].x) : std::max(pts[i].y, pts[j].y);
            long long pm = horiz ? p.x : p.y;
            if (lo < pm && pm < hi && !ivisible(pts, i, j, horiz, kSide)) ++lost;
        }
        pts.pop_back();
        return gained - lost;
    }

    bool bipartite_with(const IPoint& p) {
        pts.push_back(p);
        const int n = static_cast<int>(pts.size());
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (iadjacent(pts, i, j, kSide)) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
        std::vector<int> color(n, -1);
        bool ok = true;
        for (int s = 0; s < n && ok; ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            std::deque<int> q{s};
            while (!q.empty() && ok) {
                int x = q.front();
                q.pop_front();
                for (int y : adj[x]) {
                    if (color[y] == -1) {
                        color[y] = 1 - color[x];
                        q.push_back(y);
                    } else if (color[y] == color[x]) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        pts.pop_back();
        return ok;
    }

    long long edge_count() const {
        return static_cast<long long>(visible_pairs.size());
    }
};

Layout dense_lattice_layout(long long n, bool bipartite) {
    const long long k = isqrt_floor(n);
    const IPoint u = bipartite ? IPoint{2, -10} : IPoint{2, -9};
    const IPoint v = bipartite ? IPoint{8, 4} : IPoint{7, 4};
    const long long need = bipartite ? 4 : 6;

    DenseBuilder b;
    for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < k; ++j) b.pts.push_back({i * u.x + j * v.x, i * u.y + j * v.y});
    b.rebuild_pairs();

    long long minx = b.pts[0].x, maxx = b.pts[0].x, miny = b.pts[0].y, maxy = b.pts[0].y;
    for (const auto& p : b.pts) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }

    long long extra = n - k * k;
    for (long long step = 0; step < extra; ++step) {
        bool placed = false;
        for (long long x = minx - 8; x <= maxx + 8 && !placed; ++x)
            for (long long y = miny - 8; y <= maxy + 8 && !placed; ++y) {
                IPoint p{x, y};
                bool clash = false;
                for (const auto& q : b.pts)
                    if (!idisjoint(p, q, kSide)) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                if (b.append_delta(p) < need) continue;
                if (bipartite && !b.bipartite_with(p)) continue;
                b.pts.push_back(p);
                b.rebuild_pairs();
                placed = true;
            }
        if (!placed)
            throw SynthesisError("dense layout append step found no admissible square");
    }

    Layout layout;
    for (std::size_t i = 0; i < b.pts.size(); ++i)
        layout.add("d" + std::to_string(i + 1), Rational(b.pts[i].x, kSide),
                   Rational(b.pts[i].y, kSide));

    BoundsReport r = bounds(n);
    long long edges = b.edge_count();
    long long target = bipartite ? r.dense_bipartite_target : r.dense_target;
    long long cap = bipartite ? r.bipartite_bound : r.urvg_bound;
    if (edges < target || edges > cap)
        throw SynthesisError("dense layout edge count " + std::to_string(edges) +
                             " outside [" + std::to_string(target) + ", " + std::to_string(cap) +
                             "]");
    return layout;
}

} // namespace

Layout gen_dense_layout(long long n) {
    if (n < 64) throw std::invalid_argument("gen_dense_layout needs n >= 64");
    return dense_lattice_layout(n, false);
}

Layout gen_dense_bipartite_layout(long long n) {
    if (n < 81) throw std::invalid_argument("gen_dense_bipartite_layout needs n >= 81");
    return dense_lattice_layout(n, true);
}

} // namespace urv
