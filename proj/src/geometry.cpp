#include "urv/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace urv {

const Square* Layout::find(const std::string& id) const {
    for (const auto& s : squares)
        if (s.id == id) return &s;
    return nullptr;
}

const Square& Layout::at(const std::string& id) const {
    const Square* s = find(id);
    if (!s) throw std::invalid_argument("unknown square id: " + id);
    return *s;
}

void Layout::add(const std::string& id, Rational x, Rational y) {
    if (find(id)) throw std::invalid_argument("duplicate square id: " + id);
    squares.push_back(Square{id, std::move(x), std::move(y)});
}

ValidationReport validate_layout(const Layout& layout) {
    ValidationReport report;
    std::set<std::string> seen;
    for (const auto& s : layout.squares)
        if (!seen.insert(s.id).second) report.duplicate_ids.push_back(s.id);

    const auto& sq = layout.squares;
    const Rational one(1);
    for (std::size_t i = 0; i < sq.size(); ++i)
        for (std::size_t j = i + 1; j < sq.size(); ++j) {
            if (abs(sq[i].x - sq[j].x) < one && abs(sq[i].y - sq[j].y) < one)
                report.overlapping.emplace_back(sq[i].id, sq[j].id);
        }
    return report;
}

namespace {

// Horizontal case with A left of B; vertical goes through the transpose.
bool visible_in(const std::vector<Square>& squares, const Square& a, const Square& b, Axis axis) {
    auto main = [&](const Square& s) { return axis == Axis::Horizontal ? s.x : s.y; };
    auto cross = [&](const Square& s) { return axis == Axis::Horizontal ? s.y : s.x; };

    const Square *lo = &a, *hi = &b;
    if (main(*hi) < main(*lo)) std::swap(lo, hi);

    const Rational one(1);
    if (main(*hi) < main(*lo) + one) return false; // overlapping or short of touching

    Rational window_lo = max(cross(*lo), cross(*hi));
    Rational window_hi = min(cross(*lo), cross(*hi)) + one;
    if (!(window_lo < window_hi)) return false; // degenerate band

    // Blockers: open main-extent meets the open strip between the facing sides.
    std::vector<std::pair<Rational, Rational>> intervals;
    for (const auto& c : squares) {
        if (c.id == a.id || c.id == b.id) continue;
        if (main(*lo) < main(c) && main(c) < main(*hi))
            intervals.emplace_back(cross(c), cross(c) + one);
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });

    Rational covered = window_lo;
    for (const auto& [s, e] : intervals) {
        if (!(covered < window_hi)) break;
        if (covered < s) break; // open gap survives
        covered = max(covered, e);
    }
    return covered < window_hi;
}

} // namespace

bool visible(const Layout& layout, const std::string& a, const std::string& b, Axis axis) {
    if (a == b) throw std::invalid_argument("visibility of a square with itself");
    return visible_in(layout.squares, layout.at(a), layout.at(b), axis);
}

Graph extract_graph(const Layout& layout) {
    Graph g;
    const auto& sq = layout.squares;
    for (const auto& s : sq) g.add_vertex(s.id);
    for (std::size_t i = 0; i < sq.size(); ++i)
        for (std::size_t j = i + 1; j < sq.size(); ++j)
            if (visible_in(sq, sq[i], sq[j], Axis::Horizontal) ||
                visible_in(sq, sq[i], sq[j], Axis::Vertical))
                g.add_edge(sq[i].id, sq[j].id);
    return g;
}

SplitGraphs split_xy(const Layout& layout) {
    SplitGraphs out;
    const auto& sq = layout.squares;
    for (const auto& s : sq) {
        out.gx.add_vertex(s.id);
        out.gy.add_vertex(s.id);
    }
    for (std::size_t i = 0; i < sq.size(); ++i)
        for (std::size_t j = i + 1; j < sq.size(); ++j) {
            if (visible_in(sq, sq[i], sq[j], Axis::Horizontal)) out.gx.add_edge(sq[i].id, sq[j].id);
            if (visible_in(sq, sq[i], sq[j], Axis::Vertical)) out.gy.add_edge(sq[i].id, sq[j].id);
        }
    return out;
}

namespace {

Layout insert_band(const Layout& layout, const Rational& t, bool horizontal) {
    const Rational one(1);
    for (const auto& s : layout.squares) {
        const Rational& c = horizontal ? s.y : s.x;
        if (c < t && t < c + one)
            throw std::invalid_argument("band line pierces the interior of square " + s.id);
    }
    Layout out = layout;
    for (auto& s : out.squares) {
        Rational& c = horizontal ? s.y : s.x;
        if (!(c < t)) c += one;
    }
    return out;
}

} // namespace

Layout insert_horizontal_band(const Layout& layout, const Rational& t) {
    return insert_band(layout, t, true);
}

Layout insert_vertical_band(const Layout& layout, const Rational& t) {
    return insert_band(layout, t, false);
}

Layout translate(const Layout& layout, const Rational& dx, const Rational& dy) {
    Layout out = layout;
    for (auto& s : out.squares) {
        s.x += dx;
        s.y += dy;
    }
    return out;
}

Layout reflect_x(const Layout& layout) {
    Layout out = layout;
    for (auto& s : out.squares) s.x = -s.x - Rational(1);
    return out;
}

Layout reflect_y(const Layout& layout) {
    Layout out = layout;
    for (auto& s : out.squares) s.y = -s.y - Rational(1);
    return out;
}

Layout transpose(const Layout& layout) {
    Layout out = layout;
    for (auto& s : out.squares) std::swap(s.x, s.y);
    return out;
}

} // namespace urv
