#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ecci/eccentricity.hpp"
#include "ecci/tree.hpp"

namespace ecci {

struct GraftMove {
    enum class Kind { Rho, Alpha, Theta, DiametralShift, PendantRegraft };
    Kind kind;
    int from;
    int to;
    std::vector<int> moved;  // roots of relocated branches / relocated pendants
};

inline std::string_view graft_kind_name(GraftMove::Kind k) {
    switch (k) {
        case GraftMove::Kind::Rho: return "rho";
        case GraftMove::Kind::Alpha: return "alpha";
        case GraftMove::Kind::Theta: return "theta";
        case GraftMove::Kind::DiametralShift: return "shift";
        case GraftMove::Kind::PendantRegraft: return "regraft";
    }
    return "?";
}

namespace detail {

/// Vertices of the component of `start` in t - (cut_a, cut_b).
inline std::vector<char> component_mask(const Tree& t, int start, int cut_a, int cut_b) {
    std::vector<char> in(t.order(), 0);
    std::vector<int> stack{start};
    in[start] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : t.neighbors(u)) {
            if ((u == cut_a && v == cut_b) || (u == cut_b && v == cut_a)) continue;
            if (!in[v]) {
                in[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return in;
}

/// Eccentricity of `root` inside the component of t - (cut_a, cut_b) holding it.
inline int side_eccentricity(const Tree& t, int root, int cut_a, int cut_b) {
    auto mask = component_mask(t, root, cut_a, cut_b);
    std::vector<int> dist(t.order(), -1);
    std::vector<int> queue{root};
    dist[root] = 0;
    int ecc = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        ecc = std::max(ecc, dist[u]);
        for (int v : t.neighbors(u)) {
            if ((u == cut_a && v == cut_b) || (u == cut_b && v == cut_a)) continue;
            if (mask[v] && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return ecc;
}

/// Length of the pendant path starting with `first` away from `anchor`:
/// anchor-first-...-leaf with every interior vertex of degree 2. Returns
/// nullopt when the hanging branch is not a bare path.
inline std::optional<int> pendant_path_length(const Tree& t, int anchor, int first) {
    int prev = anchor, cur = first, len = 1;
    while (t.degree(cur) == 2) {
        int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
        prev = cur;
        cur = next;
        ++len;
    }
    if (t.degree(cur) != 1) return std::nullopt;
    return len;
}

}  // namespace detail

/// Shared rewrite kernel: delete edges from-r and add to-r for every r in
/// roots. `to` must not sit inside any relocated branch.
inline Tree relocate_branches(const Tree& t, int from, int to, const std::vector<int>& roots) {
    t.check_vertex(from);
    t.check_vertex(to);
    if (from == to) fail(Errc::SelfMove, "from == to == " + std::to_string(from));
    if (roots.empty()) fail(Errc::EmptyMoveSet, "no branch roots to relocate");
    std::set<int> root_set(roots.begin(), roots.end());
    for (int r : root_set) {
        t.check_vertex(r);
        if (!t.has_edge(from, r))
            fail(Errc::NotAdjacent,
                 "branch root " + std::to_string(r) + " not adjacent to " + std::to_string(from));
        if (detail::component_mask(t, r, from, r)[to])
            fail(Errc::WouldDisconnect, "target " + std::to_string(to) +
                                            " lies inside the branch at " + std::to_string(r));
    }
    std::vector<Edge> edges;
    edges.reserve(t.order() - 1);
    for (const auto& [u, v] : t.edges()) {
        bool cut = (u == from && root_set.count(v)) || (v == from && root_set.count(u));
        if (!cut) edges.emplace_back(u, v);
    }
    for (int r : root_set) edges.emplace_back(std::min(to, r), std::max(to, r));
    return Tree::validate(t.order(), edges);
}

// --- rho: move the branches hanging at v across the cut edge wv to w. The
// theorem wants what stays behind at v to be a bare pendant path of length l
// with ecc(w) inside w's side at least l+1; the rewrite itself only needs the
// structural legality, and the measured quantities are reported back.

struct RhoResult {
    Tree tree;
    GraftMove move;
    bool precondition_held;
    int anchor_side_ecc;   // ecc of w inside its side of the cut edge (k)
    int pendant_path_len;  // retained path length l; -1 when the remainder is not a path
};

inline RhoResult rho_transform(const Tree& t, int w, int v, std::vector<int> branch_roots) {
    t.check_vertex(w);
    t.check_vertex(v);
    if (!t.has_edge(w, v))
        fail(Errc::MissingCutEdge,
             "(" + std::to_string(w) + "," + std::to_string(v) + ") is not an edge");
    std::set<int> roots(branch_roots.begin(), branch_roots.end());
    if (roots.count(w))
        fail(Errc::NotAdjacent, "branch roots must avoid the cut-edge endpoint " + std::to_string(w));

    int k = detail::side_eccentricity(t, w, w, v);
    std::vector<int> remainder;
    for (int u : t.neighbors(v))
        if (u != w && !roots.count(u)) remainder.push_back(u);
    int l = -1;
    if (remainder.empty())
        l = 0;
    else if (remainder.size() == 1)
        l = detail::pendant_path_length(t, v, remainder[0]).value_or(-1);
    bool held = !roots.empty() && l >= 0 && k >= std::max(l + 1, 1);

    Tree out = relocate_branches(t, v, w, branch_roots);
    return RhoResult{std::move(out),
                     GraftMove{GraftMove::Kind::Rho, v, w, {roots.begin(), roots.end()}},
                     held, k, l};
}

// --- alpha: v1 and vl joined by a path whose interior is bare (all degree 2);
// the branches hanging at vl move to v1. Theorem orientation: the side kept at
// v1 is eccentric at least as far as the side moved from vl.

struct AlphaResult {
    Tree tree;
    GraftMove move;
    bool precondition_held;
    int kept_side_ecc;   // ecc of v1 in its off-path side (q)
    int moved_side_ecc;  // ecc of vl in its off-path side (p)
};

inline AlphaResult alpha_transform(const Tree& t, int v1, int vl, std::vector<int> branch_roots) {
    t.check_vertex(v1);
    t.check_vertex(vl);
    if (v1 == vl) fail(Errc::SelfMove, "v1 == vl == " + std::to_string(v1));
    // Walk the unique v1..vl path and insist its interior is bare.
    auto dist_v1 = bfs_distances(t, v1);
    std::vector<int> path{vl};
    while (path.back() != v1) {
        int u = path.back();
        for (int nb : t.neighbors(u))
            if (dist_v1[nb] == dist_v1[u] - 1) {
                path.push_back(nb);
                break;
            }
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (t.degree(path[i]) != 2)
            fail(Errc::NoCleanInternalPath, "interior vertex " + std::to_string(path[i]) +
                                                " has degree " + std::to_string(t.degree(path[i])));
    int next_on_path = path[1];        // neighbor of vl toward v1
    int prev_on_path = path[path.size() - 2];  // neighbor of v1 toward vl

    std::set<int> roots(branch_roots.begin(), branch_roots.end());
    if (roots.count(next_on_path))
        fail(Errc::NotAdjacent, "branch roots must lie off the v1..vl path");

    int moved_ecc = detail::side_eccentricity(t, vl, vl, next_on_path);
    int kept_ecc = detail::side_eccentricity(t, v1, v1, prev_on_path);
    bool all_off_path = roots.size() == t.neighbors(vl).size() - 1;
    bool held = !roots.empty() && all_off_path && kept_ecc >= moved_ecc && kept_ecc >= 1;

    Tree out = relocate_branches(t, vl, v1, branch_roots);
    return AlphaResult{std::move(out),
                       GraftMove{GraftMove::Kind::Alpha, vl, v1, {roots.begin(), roots.end()}},
                       held, kept_ecc, moved_ecc};
}

// --- theta: v carries only pendants besides u; they all move across u to w.
// Theorem condition: ecc of w in its side of the cut edge uw at least the ecc
// of u in what remains at u.

struct ThetaResult {
    Tree tree;
    GraftMove move;
    bool precondition_held;
    int target_side_ecc;  // ecc of w beyond the cut edge (d2)
    int far_side_ecc;     // ecc of u in H1 (d1)
};

inline ThetaResult theta_transform(const Tree& t, int v, int u, int w) {
    t.check_vertex(v);
    t.check_vertex(u);
    t.check_vertex(w);
    if (v == w) fail(Errc::SelfMove, "v == w == " + std::to_string(v));
    if (!t.has_edge(v, u))
        fail(Errc::MissingEdge, "(" + std::to_string(v) + "," + std::to_string(u) + ") is not an edge");
    if (!t.has_edge(u, w))
        fail(Errc::MissingEdge, "(" + std::to_string(u) + "," + std::to_string(w) + ") is not an edge");
    if (t.degree(w) < 2)
        fail(Errc::DegreeTooSmall, "degree(" + std::to_string(w) + ") = " +
                                       std::to_string(t.degree(w)) + " < 2");
    std::vector<int> moved;
    for (int z : t.neighbors(v)) {
        if (z == u) continue;
        if (t.degree(z) != 1)
            fail(Errc::NonPendantNeighbor, "neighbor " + std::to_string(z) + " of " +
                                               std::to_string(v) + " has degree " +
                                               std::to_string(t.degree(z)));
        moved.push_back(z);
    }
    if (moved.empty()) fail(Errc::EmptyMoveSet, "v has no pendant neighbors to move");

    int d2 = detail::side_eccentricity(t, w, u, w);
    // H1 = what hangs at u away from both the cut edge and the pendant star.
    auto mask = detail::component_mask(t, u, u, w);
    int d1 = 0;
    {
        std::vector<int> dist(t.order(), -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int x = queue[h];
            d1 = std::max(d1, dist[x]);
            for (int y : t.neighbors(x)) {
                if (x == u && y == v) continue;
                if ((x == u && y == w) || (x == w && y == u)) continue;
                if (mask[y] && y != v && dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    bool held = d2 >= d1;
    Tree out = relocate_branches(t, v, w, moved);
    return ThetaResult{std::move(out), GraftMove{GraftMove::Kind::Theta, v, w, moved}, held, d2, d1};
}

// --- Thm 3.6 shift and Thm 2.1 regraft share the setup: the deterministic
// diametral path plus the smallest-id pendant whose support is off it.

namespace detail {

struct OffPathPendant {
    std::vector<int> path;
    int pendant;
    int support;
};

inline OffPathPendant find_off_path_pendant(const Tree& t) {
    auto path = diametral_path(t);
    std::vector<char> on_path(t.order(), 0);
    for (int v : path) on_path[v] = 1;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 1) continue;
        int support = t.neighbors(v)[0];
        if (!on_path[support]) return {std::move(path), v, support};
    }
    fail(Errc::NoOffPathPendant, "every pendant hangs on the diametral path");
}

}  // namespace detail

struct ShiftResult {
    Tree tree;
    GraftMove move;
    bool strict;  // per the equality condition: false iff ecc(support) == ecc(target)
};

/// Thm 3.6 rewrite: move the chosen off-path pendant to v_{d/2-1}
/// (v_{(d-1)/2-1} for odd d) on the deterministic diametral path.
inline ShiftResult diametral_pendant_shift(const Tree& t) {
    auto site = detail::find_off_path_pendant(t);
    int d = static_cast<int>(site.path.size()) - 1;
    int idx = d % 2 == 0 ? d / 2 - 1 : (d - 1) / 2 - 1;
    int target = site.path[idx];
    auto prof = eccentricity_profile(t);
    bool strict = prof.ecc[site.support] != prof.ecc[target];
    Tree out = relocate_branches(t, site.support, target, {site.pendant});
    return ShiftResult{std::move(out),
                       GraftMove{GraftMove::Kind::DiametralShift, site.support, target, {site.pendant}},
                       strict};
}

struct RegraftResult {
    Tree tree;
    GraftMove move;
};

/// Thm 2.1 rewrite: move every pendant neighbor of the chosen off-path
/// support to v_1 of the diametral path (REE does not increase).
inline RegraftResult pendant_regraft(const Tree& t) {
    auto site = detail::find_off_path_pendant(t);
    std::vector<int> moved;
    for (int z : t.neighbors(site.support))
        if (t.degree(z) == 1) moved.push_back(z);
    int target = site.path[1];
    Tree out = relocate_branches(t, site.support, target, moved);
    return RegraftResult{std::move(out),
                         GraftMove{GraftMove::Kind::PendantRegraft, site.support, target, moved}};
}

}  // namespace ecci
