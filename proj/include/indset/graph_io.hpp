#pragma once

#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "indset/errors.hpp"
#include "indset/graph.hpp"

namespace indset {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int parse_int_field(std::string_view s, int lineno, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
        throw parse_error(std::string("bad ") + what + " '" + std::string(s) + "'", lineno);
    return value;
}

} // namespace detail

/// Parses the graph text format:
///   c <comment>           ignored
///   p edge <n> <m>        header, exactly once, before any edge
///   e <u> <v>             one per edge, 1 <= u,v <= n, u != v
/// Edges may appear in either orientation but duplicates (in any
/// orientation) and self-loops are rejected. Errors carry the line number.
inline Graph parse_graph(std::string_view text) {
    bool have_header = false;
    int n = 0, m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        auto fields = detail::split_fields(line);
        if (fields.empty())
            continue;
        if (fields[0] == "c")
            continue;
        if (fields[0] == "p") {
            if (have_header)
                throw parse_error("duplicate header", lineno);
            if (fields.size() != 4 || fields[1] != "edge")
                throw parse_error("malformed header, expected 'p edge <n> <m>'", lineno);
            n = detail::parse_int_field(fields[2], lineno, "vertex count");
            m = detail::parse_int_field(fields[3], lineno, "edge count");
            have_header = true;
            continue;
        }
        if (fields[0] == "e") {
            if (!have_header)
                throw parse_error("edge before header", lineno);
            if (fields.size() != 3)
                throw parse_error("malformed edge line", lineno);
            int u = detail::parse_int_field(fields[1], lineno, "vertex");
            int v = detail::parse_int_field(fields[2], lineno, "vertex");
            if (u == v)
                throw parse_error("self-loop at vertex " + std::to_string(u), lineno);
            if (u > v)
                std::swap(u, v);
            if (u < 1 || v > n)
                throw parse_error("vertex out of range 1.." + std::to_string(n), lineno);
            if (!seen.insert({u, v}).second)
                throw parse_error("duplicate edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")",
                                  lineno);
            edges.emplace_back(u, v);
            continue;
        }
        throw parse_error("unknown line type '" + std::string(fields[0]) + "'", lineno);
    }
    if (!have_header)
        throw parse_error("missing 'p edge' header", 1);
    if (static_cast<int>(edges.size()) != m)
        throw parse_error("header announces " + std::to_string(m) + " edges but " +
                              std::to_string(edges.size()) + " found",
                          lineno);
    return Graph(n, std::move(edges));
}

/// Canonical text form: header, then edges sorted with u < v, LF endings.
/// parse(serialize(g)) == g and serialize(parse(t)) normalizes edge order.
inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

} // namespace indset
