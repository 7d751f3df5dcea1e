#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cotk/errors.hpp"
#include "cotk/hypergraph.hpp"

namespace cotk {

namespace detail {

struct Token {
    std::string_view text;
    int column = 0; // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i >= line.size())
            break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        tokens.push_back(Token{line.substr(start, i - start),
                               static_cast<int>(start) + 1});
    }
    return tokens;
}

inline long long parse_nonnegative(const Token& token, int line,
                                   const char* what) {
    long long value = 0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || value < 0)
        throw ParseError(std::string("expected ") + what + ", got '" +
                             std::string(token.text) + "'",
                         line, token.column);
    return value;
}

} // namespace detail

/// Parses the edge-list format: a header line "kgraph <k> <n> <m>" followed
/// by m lines of k space-separated, strictly increasing 0-based vertex
/// indices. Lines beginning with '#' (and blank lines) are ignored. Duplicate
/// or malformed edges are errors, reported with line and column.
inline Hypergraph parse_edge_list(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    int k = 0, n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::vector<Edge> seen; // kept sorted for duplicate detection

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                           : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#')
            continue;
        const auto tokens = detail::tokenize_line(line);
        if (tokens.empty())
            continue;

        if (!have_header) {
            if (tokens[0].text != "kgraph")
                throw ParseError("expected header 'kgraph <k> <n> <m>'",
                                 line_no, tokens[0].column);
            if (tokens.size() != 4)
                throw ParseError("header must have exactly 4 fields", line_no,
                                 tokens.size() > 4 ? tokens[4].column
                                                   : tokens[0].column);
            k = static_cast<int>(
                detail::parse_nonnegative(tokens[1], line_no, "uniformity"));
            n = static_cast<int>(
                detail::parse_nonnegative(tokens[2], line_no, "vertex count"));
            m = detail::parse_nonnegative(tokens[3], line_no, "edge count");
            if (k < 2)
                throw ParseError("uniformity must be at least 2", line_no,
                                 tokens[1].column);
            have_header = true;
            continue;
        }

        if (static_cast<long long>(edges.size()) == m)
            throw ParseError("unexpected content after the declared edges",
                             line_no, tokens[0].column);
        if (static_cast<int>(tokens.size()) != k)
            throw ParseError("edge must have exactly " + std::to_string(k) +
                                 " vertices",
                             line_no,
                             tokens.size() > static_cast<std::size_t>(k)
                                 ? tokens[k].column
                                 : tokens[0].column);
        Edge e(k);
        for (int i = 0; i < k; ++i) {
            const long long v =
                detail::parse_nonnegative(tokens[i], line_no, "vertex index");
            if (v >= n)
                throw ParseError("vertex index out of range", line_no,
                                 tokens[i].column);
            if (i > 0 && v <= e[i - 1])
                throw ParseError("edge vertices must be strictly increasing",
                                 line_no, tokens[i].column);
            e[i] = static_cast<Vertex>(v);
        }
        const auto it = std::lower_bound(seen.begin(), seen.end(), e);
        if (it != seen.end() && *it == e)
            throw ParseError("duplicate edge", line_no, tokens[0].column);
        seen.insert(it, e);
        edges.push_back(std::move(e));
    }

    if (!have_header)
        throw ParseError("missing header line", line_no, 1);
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(edges.size()),
                         line_no, 1);
    return Hypergraph(k, n, std::move(edges));
}

/// Canonical emission: header plus edges in lexicographic order, LF endings.
/// parse_edge_list(emit_edge_list(h)) == h for every valid hypergraph.
inline std::string emit_edge_list(const Hypergraph& h) {
    std::string out = "kgraph " + std::to_string(h.uniformity()) + " " +
                      std::to_string(h.vertex_count()) + " " +
                      std::to_string(h.edge_count()) + "\n";
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

/// Fixed-key JSON report: k, n, m, min_codegree, max_codegree, argmin
/// (sorted array), histogram (array of [value, count] pairs sorted by value).
inline nlohmann::json codegree_report_json(const Hypergraph& h,
                                           const CodegreeReport& report) {
    nlohmann::json j;
    j["k"] = h.uniformity();
    j["n"] = h.vertex_count();
    j["m"] = h.edge_count();
    j["min_codegree"] = report.min_codegree;
    j["max_codegree"] = report.max_codegree;
    j["argmin"] = report.argmin;
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [value, count] : report.histogram)
        hist.push_back({value, count});
    j["histogram"] = hist;
    return j;
}

} // namespace cotk
