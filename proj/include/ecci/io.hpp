#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ecci/tree.hpp"

namespace ecci {

// Edge-list text format: first non-comment line is n, then one "u v" pair per
// line, 0-indexed. '#' starts a comment line. The writer emits edges sorted
// lexicographically.

inline Tree read_edge_list(std::istream& in) {
    std::string line;
    long n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                long extra;
                if (ls >> extra) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected a single vertex count");
            } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
                fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected vertex count");
            }
            continue;
        }
        long u, v;
        if (ls >> u) {
            if (!(ls >> v)) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'u v'");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (n < 0) fail(Errc::ParseError, "missing vertex count line");
    return Tree::validate(static_cast<int>(n), edges);
}

inline Tree parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Tree& t) {
    out << t.order() << '\n';
    for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Tree& t) {
    std::ostringstream out;
    write_edge_list(out, t);
    return out.str();
}

// graph6, per the standard format: optional ">>graph6<<" header on read,
// omitted on write; n <= 62 one byte, larger n in the 126-prefixed 3-byte
// form; upper-triangle bits x(0,1), x(0,2), x(1,2), ... packed big-endian
// six at a time, each byte offset by 63.

inline std::string to_graph6(const Tree& t) {
    const int n = t.order();
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        s.push_back(static_cast<char>((n & 0x3f) + 63));
    } else {
        fail(Errc::NTooLarge, "graph6 writer supports n <= 258047");
    }
    int bit = 5;
    int cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (t.has_edge(u, v)) cur |= 1 << bit;
            if (--bit < 0) {
                s.push_back(static_cast<char>(cur + 63));
                bit = 5;
                cur = 0;
            }
        }
    if (bit != 5) s.push_back(static_cast<char>(cur + 63));
    return s;
}

inline Tree from_graph6(std::string_view s) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) fail(Errc::ParseError, "empty graph6 string");

    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size()) fail(Errc::ParseError, "graph6 string truncated");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) fail(Errc::ParseError, "graph6 byte out of range at " + std::to_string(pos - 1));
        return c - 63;
    };

    long n;
    int c0 = take();
    if (c0 < 63) {  // 126 ('~') marks the 3-byte order form
        n = c0;
    } else {
        n = (static_cast<long>(take()) << 12);
        n |= take() << 6;
        n |= take();
    }
    std::vector<Edge> edges;
    int bit = -1, cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bit < 0) {
                cur = take();
                bit = 5;
            }
            if (cur & (1 << bit)) edges.emplace_back(u, v);
            --bit;
        }
    return Tree::validate(static_cast<int>(n), edges);
}

}  // namespace ecci
