#pragma once

// Text formats. Vertices are 1-based in files.
//
// Instance file:
//   c <comment>
//   p recolor <n> <k> <ell>      first non-comment line
//   e <u> <v>                    one per edge
//   l <v> <c1> <c2> ...          optional color list (absent: 1..k)
//   a <v> <color>                start coloring, one per vertex
//   b <v> <color>                target coloring, one per vertex
//   c role <v> <tag>             optional generator metadata
//
// Sequence file:
//   s <v> <color>                one per step, in order
//
// Graph file (source graphs for the reductions), DIMACS style:
//   p edge <n> <m>
//   e <u> <v>

#include <recolor/coloring.hpp>
#include <recolor/instance.hpp>

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace recolor::io {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string & message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

struct Line {
    std::size_t number; // 1-based
    std::string_view raw;
    std::vector<Token> tokens;
};

inline std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const std::size_t end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        Line line{number, raw, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t'))
                ++i;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t')
                ++i;
            if (i > start)
                line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        out.push_back(std::move(line));
        if (text.empty())
            break;
    }
    return out;
}

inline std::size_t number(const Line & line, std::size_t index, const char * what)
{
    if (index >= line.tokens.size()) {
        const std::size_t col = line.raw.size() + 1;
        throw ParseError(line.number, col, std::string("missing ") + what);
    }
    const Token & tok = line.tokens[index];
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw ParseError(line.number, tok.column, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    return value;
}

inline void expect_arity(const Line & line, std::size_t count)
{
    if (line.tokens.size() > count)
        throw ParseError(line.number, line.tokens[count].column, "unexpected trailing token '"
                                                                   + std::string(line.tokens[count].text) + "'");
}

inline std::string rest_of_line(const Line & line, std::size_t index)
{
    if (index >= line.tokens.size())
        return {};
    std::string_view rest = line.raw.substr(line.tokens[index].column - 1);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t'))
        rest.remove_suffix(1);
    return std::string(rest);
}

struct Position {
    std::size_t line = 0;
    std::size_t column = 0;
};

} // namespace detail

inline Instance parse_instance(std::string_view text)
{
    using namespace detail;
    const auto lines = split_lines(text);

    std::optional<std::size_t> n, k, ell;
    std::vector<Edge> edges;
    std::map<Edge, Position> edge_at;
    std::map<Vertex, std::pair<Color, Position>> alpha, beta;
    std::map<Vertex, std::pair<ColorSet, Position>> lists;
    std::vector<std::tuple<std::size_t, std::string, Position>> roles;

    const auto vertex = [&](const Line & line, std::size_t index) {
        const std::size_t v = number(line, index, "vertex");
        if (v < 1 || v > *n)
            throw ParseError(line.number, line.tokens[index].column,
                             "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(*n));
        return static_cast<Vertex>(v - 1);
    };
    const auto color = [&](const Line & line, std::size_t index) {
        const std::size_t c = number(line, index, "color");
        if (c < 1 || c > *k)
            throw ParseError(line.number, line.tokens[index].column,
                             "color " + std::to_string(c) + " out of range 1.." + std::to_string(*k));
        return static_cast<Color>(c);
    };

    for (const Line & line : lines) {
        if (line.tokens.empty())
            continue;
        const Token & head = line.tokens[0];
        const Position here{line.number, head.column};
        if (head.text == "c") {
            if (line.tokens.size() >= 4 && line.tokens[1].text == "role") {
                const std::size_t v = number(line, 2, "vertex");
                roles.emplace_back(v, rest_of_line(line, 3), Position{line.number, line.tokens[2].column});
            }
            continue;
        }
        if (head.text == "p") {
            if (n)
                throw ParseError(line.number, head.column, "duplicate p-line");
            if (line.tokens.size() < 2 || line.tokens[1].text != "recolor")
                throw ParseError(line.number, line.tokens.size() < 2 ? line.raw.size() + 1 : line.tokens[1].column,
                                 "expected 'p recolor <n> <k> <ell>'");
            n = number(line, 2, "vertex count");
            k = number(line, 3, "color count");
            ell = number(line, 4, "length budget");
            expect_arity(line, 5);
            if (*k < 1)
                throw ParseError(line.number, line.tokens[3].column, "k must be at least 1");
            continue;
        }
        if (!n)
            throw ParseError(line.number, head.column, "expected the p-line before '" + std::string(head.text) + "'");

        if (head.text == "e") {
            const Vertex u = vertex(line, 1), v = vertex(line, 2);
            expect_arity(line, 3);
            if (u == v)
                throw ParseError(line.number, line.tokens[2].column, "self-loop at vertex " + std::to_string(u + 1));
            const Edge e(u, v);
            if (!edge_at.emplace(e, here).second)
                throw ParseError(line.number, head.column, "duplicate edge " + std::to_string(e.u + 1) + " "
                                                               + std::to_string(e.v + 1));
            edges.push_back(e);
        } else if (head.text == "a" || head.text == "b") {
            auto & target = head.text == "a" ? alpha : beta;
            const Vertex v = vertex(line, 1);
            const Color c = color(line, 2);
            expect_arity(line, 3);
            if (!target.emplace(v, std::pair{c, here}).second)
                throw ParseError(line.number, head.column, "second " + std::string(head.text) + "-line for vertex "
                                                               + std::to_string(v + 1));
        } else if (head.text == "l") {
            const Vertex v = vertex(line, 1);
            if (line.tokens.size() < 3)
                throw ParseError(line.number, line.raw.size() + 1, "empty color list");
            ColorSet set;
            for (std::size_t i = 2; i < line.tokens.size(); ++i) {
                const Color c = color(line, i);
                if (set.contains(c))
                    throw ParseError(line.number, line.tokens[i].column, "repeated color " + std::to_string(c));
                set.insert(c);
            }
            if (!lists.emplace(v, std::pair{set, here}).second)
                throw ParseError(line.number, head.column, "second l-line for vertex " + std::to_string(v + 1));
        } else {
            throw ParseError(line.number, head.column, "unknown line type '" + std::string(head.text) + "'");
        }
    }

    if (!n)
        throw ParseError(1, 1, "missing 'p recolor <n> <k> <ell>' line");
    const std::size_t last_line = lines.empty() ? 1 : lines.back().number;
    for (Vertex v = 0; v < *n; ++v) {
        if (!alpha.contains(v))
            throw ParseError(last_line, 1, "missing a-line for vertex " + std::to_string(v + 1));
        if (!beta.contains(v))
            throw ParseError(last_line, 1, "missing b-line for vertex " + std::to_string(v + 1));
    }

    Instance inst;
    inst.graph = Graph(*n, edges);
    inst.k = static_cast<Color>(*k);
    inst.ell = *ell;
    std::vector<Color> a(*n), b(*n);
    for (const auto & [v, entry] : alpha)
        a[v] = entry.first;
    for (const auto & [v, entry] : beta)
        b[v] = entry.first;
    inst.alpha = Coloring(std::move(a));
    inst.beta = Coloring(std::move(b));
    if (!lists.empty()) {
        std::vector<ColorSet> sets(*n, ColorSet::range(inst.k));
        for (const auto & [v, entry] : lists)
            sets[v] = entry.first;
        inst.lists = ColorLists(inst.k, std::move(sets));
    }
    for (const auto & [v, tag, pos] : roles) {
        if (v < 1 || v > *n)
            throw ParseError(pos.line, pos.column, "role for vertex " + std::to_string(v) + " out of range");
        inst.roles[static_cast<Vertex>(v - 1)] = tag;
    }

    const ColorLists effective = inst.effective_lists();
    for (auto [coloring, entries, name] : {std::tuple{&inst.alpha, &alpha, "alpha"}, std::tuple{&inst.beta, &beta, "beta"}}) {
        for (const Violation & bad : check_coloring(inst.graph, effective, *coloring)) {
            if (bad.kind == Violation::Kind::conflict) {
                const Position pos = edge_at.at(Edge(bad.u, bad.v));
                throw ParseError(pos.line, pos.column,
                                 std::string(name) + " has a conflict on edge " + std::to_string(bad.u + 1) + " "
                                     + std::to_string(bad.v + 1) + " (both colored " + std::to_string(bad.color) + ")");
            }
            const Position pos = entries->at(bad.u).second;
            throw ParseError(pos.line, pos.column,
                             std::string(name) + " colors vertex " + std::to_string(bad.u + 1) + " with "
                                 + std::to_string(bad.color) + ", which is not in its list");
        }
    }
    return inst;
}

inline std::string serialize_instance(const Instance & inst)
{
    std::ostringstream out;
    out << "p recolor " << inst.graph.size() << ' ' << inst.k << ' ' << inst.ell << '\n';
    for (const Edge & e : inst.graph.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    if (inst.lists)
        for (Vertex v = 0; v < inst.graph.size(); ++v) {
            out << "l " << v + 1;
            (*inst.lists)[v].for_each([&](Color c) { out << ' ' << c; });
            out << '\n';
        }
    for (Vertex v = 0; v < inst.alpha.size(); ++v)
        out << "a " << v + 1 << ' ' << inst.alpha[v] << '\n';
    for (Vertex v = 0; v < inst.beta.size(); ++v)
        out << "b " << v + 1 << ' ' << inst.beta[v] << '\n';
    for (const auto & [v, tag] : inst.roles)
        out << "c role " << v + 1 << ' ' << tag << '\n';
    return out.str();
}

inline RecolorSequence parse_sequence(std::string_view text)
{
    using namespace detail;
    RecolorSequence seq;
    for (const Line & line : split_lines(text)) {
        if (line.tokens.empty() || line.tokens[0].text == "c")
            continue;
        if (line.tokens[0].text != "s")
            throw ParseError(line.number, line.tokens[0].column,
                             "unknown line type '" + std::string(line.tokens[0].text) + "'");
        const std::size_t v = number(line, 1, "vertex");
        const std::size_t c = number(line, 2, "color");
        expect_arity(line, 3);
        if (v < 1)
            throw ParseError(line.number, line.tokens[1].column, "vertices are numbered from 1");
        if (c < 1)
            throw ParseError(line.number, line.tokens[2].column, "colors are numbered from 1");
        seq.push_back({static_cast<Vertex>(v - 1), static_cast<Color>(c)});
    }
    return seq;
}

inline std::string serialize_sequence(const RecolorSequence & seq)
{
    std::string out;
    for (const auto & step : seq)
        out += "s " + std::to_string(step.vertex + 1) + " " + std::to_string(step.new_color) + "\n";
    return out;
}

/// Reads `p edge <n> <m>` + `e` lines. A `p recolor` file is accepted as
/// well; its coloring and list lines are ignored.
inline Graph parse_graph(std::string_view text)
{
    using namespace detail;
    std::optional<std::size_t> n;
    bool instance_file = false;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> seen;
    for (const Line & line : split_lines(text)) {
        if (line.tokens.empty() || line.tokens[0].text == "c")
            continue;
        const Token & head = line.tokens[0];
        if (head.text == "p") {
            if (n)
                throw ParseError(line.number, head.column, "duplicate p-line");
            if (line.tokens.size() < 3 || (line.tokens[1].text != "edge" && line.tokens[1].text != "recolor"))
                throw ParseError(line.number, head.column, "expected 'p edge <n> <m>'");
            instance_file = line.tokens[1].text == "recolor";
            n = number(line, 2, "vertex count");
            continue;
        }
        if (!n)
            throw ParseError(line.number, head.column, "expected the p-line first");
        if (head.text == "e") {
            const std::size_t u = number(line, 1, "vertex"), v = number(line, 2, "vertex");
            expect_arity(line, 3);
            for (auto [x, idx] : {std::pair{u, 1}, std::pair{v, 2}})
                if (x < 1 || x > *n)
                    throw ParseError(line.number, line.tokens[idx].column, "vertex " + std::to_string(x) + " out of range");
            if (u == v)
                throw ParseError(line.number, line.tokens[2].column, "self-loop");
            const Edge e(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            if (!seen.emplace(e, line.number).second)
                throw ParseError(line.number, head.column, "duplicate edge");
            edges.push_back(e);
        } else if (!(instance_file && (head.text == "a" || head.text == "b" || head.text == "l"))) {
            throw ParseError(line.number, head.column, "unknown line type '" + std::string(head.text) + "'");
        }
    }
    if (!n)
        throw ParseError(1, 1, "missing 'p edge <n> <m>' line");
    return Graph(*n, std::move(edges));
}

inline std::string serialize_graph(const Graph & graph)
{
    std::ostringstream out;
    out << "p edge " << graph.size() << ' ' << graph.edge_count() << '\n';
    for (const Edge & e : graph.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

} // namespace recolor::io
