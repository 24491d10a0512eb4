#pragma once

#include "urv/decompose.hpp"
#include "urv/geometry.hpp"
#include "urv/graph.hpp"

#include <iosfwd>
#include <string>

namespace urv {

// Parse errors carry 1-based line/column positions.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column);
    int line;
    int column;
};

// Layout text: one square per line, "id x y", coordinates "p/q" or integer.
// '#' starts a comment; blank lines ignored.
Layout parse_layout(std::istream& in);
Layout parse_layout_text(const std::string& text);
std::string format_layout(const Layout& layout);

// Graph text: "u v" edge lines, bare "id" lines for isolated vertices.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
std::string format_graph(const Graph& g);

// Decomposition text: "u v f1|f2 spine|leg" lines.
Decomposition parse_decomposition(std::istream& in);
std::string format_decomposition(const Decomposition& d);

std::string graph_to_dot(const Graph& g);
std::string graph_to_json(const Graph& g);

// SVG rendering; y axis flipped to screen coordinates.
std::string layout_to_svg(const Layout& layout, bool with_edges);

} // namespace urv
