#include "urv/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <sstream>

namespace urv {

ParseError::ParseError(const std::string& what, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + what),
      line(line_),
      column(column_) {}

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

Rational parse_coord(const Token& tok, int line_no) {
    try {
        return Rational::parse(tok.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, tok.column);
    }
}

} // namespace

Layout parse_layout(std::istream& in) {
    Layout layout;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw ParseError("expected 'id x y'", line_no, toks.size() > 3 ? toks[3].column : 1);
        Rational x = parse_coord(toks[1], line_no);
        Rational y = parse_coord(toks[2], line_no);
        if (layout.find(toks[0].text))
            throw ParseError("duplicate square id: " + toks[0].text, line_no, toks[0].column);
        layout.add(toks[0].text, x, y);
    }
    return layout;
}

Layout parse_layout_text(const std::string& text) {
    std::istringstream in(text);
    return parse_layout(in);
}

std::string format_layout(const Layout& layout) {
    std::ostringstream out;
    for (const auto& s : layout.squares)
        out << s.id << ' ' << s.x.str() << ' ' << s.y.str() << '\n';
    return out.str();
}

Graph parse_graph(std::istream& in) {
    Graph g;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            g.add_vertex(toks[0].text);
        } else if (toks.size() == 2) {
            if (toks[0].text == toks[1].text)
                throw ParseError("loop edge", line_no, toks[1].column);
            g.add_edge(toks[0].text, toks[1].text);
        } else {
            throw ParseError("expected 'id' or 'u v'", line_no, toks[2].column);
        }
    }
    return g;
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    std::set<std::string> on_edges;
    for (const auto& e : g.edges) {
        on_edges.insert(e.first);
        on_edges.insert(e.second);
    }
    for (const auto& v : g.vertices)
        if (!on_edges.count(v)) out << v << '\n';
    for (const auto& e : g.edges) out << e.first << ' ' << e.second << '\n';
    return out.str();
}

Decomposition parse_decomposition(std::istream& in) {
    Decomposition d;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 4)
            throw ParseError("expected 'u v f1|f2 spine|leg'", line_no, 1);
        Edge e = make_edge(toks[0].text, toks[1].text);
        if (toks[2].text == "f1") d.f1.insert(e);
        else if (toks[2].text == "f2") d.f2.insert(e);
        else throw ParseError("expected f1 or f2", line_no, toks[2].column);
        if (toks[3].text == "spine") d.roles[e] = EdgeRole::Spine;
        else if (toks[3].text == "leg") d.roles[e] = EdgeRole::Leg;
        else throw ParseError("expected spine or leg", line_no, toks[3].column);
    }
    return d;
}

std::string format_decomposition(const Decomposition& d) {
    std::ostringstream out;
    auto emit = [&](const std::set<Edge>& cls, const char* name) {
        for (const auto& e : cls)
            out << e.first << ' ' << e.second << ' ' << name << ' '
                << (d.roles.at(e) == EdgeRole::Spine ? "spine" : "leg") << '\n';
    };
    emit(d.f1, "f1");
    emit(d.f2, "f2");
    return out.str();
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
    for (const auto& e : g.edges) out << "  \"" << e.first << "\" -- \"" << e.second << "\";\n";
    out << "}\n";
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["format"] = 1;
    j["vertices"] = g.vertices;
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({e.first, e.second});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

std::string layout_to_svg(const Layout& layout, bool with_edges) {
    // Screen coordinates: svg_y = (y_max + 1 - y) * scale, so the figure
    // appears with the mathematical y axis pointing up.
    const double scale = 40.0;
    const double margin = 20.0;
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    bool first = true;
    for (const auto& s : layout.squares) {
        double x = s.x.to_double(), y = s.y.to_double();
        if (first) {
            min_x = x;
            max_x = x + 1;
            min_y = y;
            max_y = y + 1;
            first = false;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x + 1);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y + 1);
        }
    }
    auto sx = [&](double x) { return (x - min_x) * scale + margin; };
    auto sy = [&](double y) { return (max_y - y) * scale + margin; };

    std::ostringstream out;
    double width = (max_x - min_x) * scale + 2 * margin;
    double height = (max_y - min_y) * scale + 2 * margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "<!-- screen transform: sx = (x - " << min_x << ") * " << scale << " + " << margin
        << ", sy = (" << max_y << " - y) * " << scale << " + " << margin
        << " (y axis flipped) -->\n";
    if (with_edges) {
        Graph g = extract_graph(layout);
        for (const auto& e : g.edges) {
            const Square& a = layout.at(e.first);
            const Square& b = layout.at(e.second);
            out << "  <line x1=\"" << sx(a.x.to_double() + 0.5) << "\" y1=\""
                << sy(a.y.to_double() + 0.5) << "\" x2=\"" << sx(b.x.to_double() + 0.5)
                << "\" y2=\"" << sy(b.y.to_double() + 0.5)
                << "\" stroke=\"#c33\" stroke-width=\"1\"/>\n";
        }
    }
    for (const auto& s : layout.squares) {
        double x = s.x.to_double(), y = s.y.to_double();
        out << "  <rect x=\"" << sx(x) << "\" y=\"" << sy(y + 1) << "\" width=\"" << scale
            << "\" height=\"" << scale
            << "\" fill=\"#9cf\" fill-opacity=\"0.6\" stroke=\"#333\"/>\n";
        out << "  <text x=\"" << sx(x + 0.5) << "\" y=\"" << sy(y + 0.5)
            << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << s.id
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace urv
