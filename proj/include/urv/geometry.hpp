#pragma once

#include "urv/graph.hpp"
#include "urv/rational.hpp"

#include <string>
#include <vector>

namespace urv {

// Closed unit square identified by its bottom-left corner.
struct Square {
    std::string id;
    Rational x;
    Rational y;
};

struct Layout {
    std::vector<Square> squares;

    const Square* find(const std::string& id) const;
    const Square& at(const std::string& id) const; // throws on unknown id
    void add(const std::string& id, Rational x, Rational y); // throws on duplicate
};

enum class Axis { Horizontal, Vertical };

struct ValidationReport {
    std::vector<std::pair<std::string, std::string>> overlapping; // interior-intersecting pairs
    std::vector<std::string> duplicate_ids;
    bool ok() const { return overlapping.empty() && duplicate_ids.empty(); }
};

ValidationReport validate_layout(const Layout& layout);

// Positive-width unobstructed band between a and b along the given axis.
// Horizontal: x-extents disjoint (touching allowed), perpendicular projections
// overlap in an open interval I, and the closed blocker intervals fail to
// cover I. Vertical is the transpose.
bool visible(const Layout& layout, const std::string& a, const std::string& b, Axis axis);

Graph extract_graph(const Layout& layout);

struct SplitGraphs {
    Graph gx; // horizontal visibilities
    Graph gy; // vertical visibilities
};

SplitGraphs split_xy(const Layout& layout);

// Every square with y >= t is translated up by 1. Requires that the line
// y = t meets no square interior; throws std::invalid_argument otherwise.
Layout insert_horizontal_band(const Layout& layout, const Rational& t);
Layout insert_vertical_band(const Layout& layout, const Rational& t);

Layout translate(const Layout& layout, const Rational& dx, const Rational& dy);
Layout reflect_x(const Layout& layout); // x -> -x-1, re-anchored
Layout reflect_y(const Layout& layout); // y -> -y-1
Layout transpose(const Layout& layout); // swap x and y

} // namespace urv
