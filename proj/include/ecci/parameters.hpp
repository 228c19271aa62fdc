#pragma once

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "ecci/eccentricity.hpp"
#include "ecci/tree.hpp"

namespace ecci {

inline int pendant_count(const Tree& t) {
    int k = 0;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1) ++k;
    return k;
}

namespace detail {

/// Children-first order of the tree rooted at `root`, skipping `skip` (and
/// everything behind it). Returns (order, parent).
inline std::pair<std::vector<int>, std::vector<int>> rooted_order(const Tree& t, int root,
                                                                  int skip = -1) {
    std::vector<int> order, parent(t.order(), -2);
    order.reserve(t.order());
    order.push_back(root);
    parent[root] = -1;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int v : t.neighbors(order[h]))
            if (v != skip && parent[v] == -2) {
                parent[v] = order[h];
                order.push_back(v);
            }
    return {std::move(order), std::move(parent)};
}

/// Maximum matching restricted to the component of `root` in t - skip,
/// by the leaf-to-parent greedy that is optimal on trees.
inline int matching_in_component(const Tree& t, int root, int skip) {
    auto [order, parent] = rooted_order(t, root, skip);
    std::vector<char> matched(t.order(), 0);
    int size = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int p = parent[v];
        if (p >= 0 && !matched[v] && !matched[p]) {
            matched[v] = matched[p] = 1;
            ++size;
        }
    }
    return size;
}

}  // namespace detail

inline int matching_number(const Tree& t) { return detail::matching_in_component(t, 0, -1); }

/// True iff v is matched in every maximum matching: removing v (and its edges)
/// drops the matching number of the union of the remaining components.
inline bool is_perfectly_matched(const Tree& t, int v) {
    t.check_vertex(v);
    int without = 0;
    for (int u : t.neighbors(v)) without += detail::matching_in_component(t, u, v);
    return without == matching_number(t) - 1;
}

/// Domination number by the 3-state tree DP
/// (in set / dominated from below / still needs a dominator above).
inline int domination_number(const Tree& t) {
    const int n = t.order();
    if (n == 1) return 1;
    auto [order, parent] = detail::rooted_order(t, 0);
    constexpr long kInf = 1L << 40;
    std::vector<std::array<long, 3>> dp(n);  // 0: in set, 1: dominated, 2: uncovered
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        long in_set = 1, covered = 0, uncovered = 0;
        bool child_seen = false, child_dominates = false;
        long promote = kInf;
        for (int c : t.neighbors(v)) {
            if (c == parent[v]) continue;
            child_seen = true;
            in_set += std::min({dp[c][0], dp[c][1], dp[c][2]});
            long pick = std::min(dp[c][0], dp[c][1]);
            covered += pick;
            uncovered += dp[c][1];  // a child in the set would dominate v
            if (dp[c][0] <= pick) child_dominates = true;
            promote = std::min(promote, dp[c][0] - pick);
        }
        dp[v][0] = in_set;
        dp[v][2] = child_seen ? std::min(uncovered, kInf) : 0;
        if (!child_seen)
            dp[v][1] = kInf;  // a leaf cannot be dominated from below
        else
            dp[v][1] = std::min(child_dominates ? covered : covered + promote, kInf);
    }
    return static_cast<int>(std::min(dp[0][0], dp[0][1]));
}

/// Color-class sizes of the unique 2-coloring, p <= q.
inline std::pair<int, int> bipartition_sizes(const Tree& t) {
    auto d = bfs_distances(t, 0);
    int even = 0;
    for (int v = 0; v < t.order(); ++v)
        if (d[v] % 2 == 0) ++even;
    int odd = t.order() - even;
    return {std::min(even, odd), std::max(even, odd)};
}

/// Tree-class selector with the canonical CLI string form
/// pendants=K | matching=B | domination=G | diameter=D | bipartition=P,Q.
struct ParamClass {
    enum class Kind { Pendants, Matching, Domination, Diameter, Bipartition };
    Kind kind = Kind::Pendants;
    int a = 0;
    int b = 0;  // bipartition only

    bool matches(const Tree& t) const {
        switch (kind) {
            case Kind::Pendants: return pendant_count(t) == a;
            case Kind::Matching: return matching_number(t) == a;
            case Kind::Domination: return domination_number(t) == a;
            case Kind::Diameter: return eccentricity_profile(t).diameter == a;
            case Kind::Bipartition: {
                auto [p, q] = bipartition_sizes(t);
                return p == std::min(a, b) && q == std::max(a, b);
            }
        }
        return false;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Pendants: return "pendants=" + std::to_string(a);
            case Kind::Matching: return "matching=" + std::to_string(a);
            case Kind::Domination: return "domination=" + std::to_string(a);
            case Kind::Diameter: return "diameter=" + std::to_string(a);
            case Kind::Bipartition:
                return "bipartition=" + std::to_string(a) + "," + std::to_string(b);
        }
        return "?";
    }

    static ParamClass parse(std::string_view s) {
        auto eq = s.find('=');
        if (eq == std::string_view::npos) fail(Errc::ParseError, "class spec needs '=': " + std::string(s));
        std::string_view name = s.substr(0, eq), rest = s.substr(eq + 1);
        auto num = [&](std::string_view v) {
            int out{};
            auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || p != v.data() + v.size())
                fail(Errc::ParseError, "bad integer in class spec: " + std::string(v));
            return out;
        };
        ParamClass c;
        if (name == "pendants") c.kind = Kind::Pendants;
        else if (name == "matching") c.kind = Kind::Matching;
        else if (name == "domination") c.kind = Kind::Domination;
        else if (name == "diameter") c.kind = Kind::Diameter;
        else if (name == "bipartition") c.kind = Kind::Bipartition;
        else fail(Errc::ParseError, "unknown class selector: " + std::string(name));
        if (c.kind == Kind::Bipartition) {
            auto comma = rest.find(',');
            if (comma == std::string_view::npos) fail(Errc::ParseError, "bipartition needs P,Q");
            c.a = num(rest.substr(0, comma));
            c.b = num(rest.substr(comma + 1));
        } else {
            c.a = num(rest);
        }
        return c;
    }
};

}  // namespace ecci
