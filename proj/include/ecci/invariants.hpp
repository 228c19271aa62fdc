#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "ecci/eccentricity.hpp"
#include "ecci/rational.hpp"
#include "ecci/tree.hpp"

namespace ecci {

enum class InvariantKind {
    ReeEdge,                // sum over edges uv of 1/ecc(u) + 1/ecc(v)
    ReeVertex,              // sum over vertices of deg(v)/ecc(v)
    EccConnectivityEdge,    // sum over edges of ecc(u) + ecc(v)
    EccConnectivityVertex,  // sum over vertices of deg(v) * ecc(v)
    Wiener,                 // sum of pairwise distances
    Harary,                 // sum of reciprocal pairwise distances
    AvgEccentricity,        // (1/n) * sum of eccentricities
    EccDistanceSum,         // sum over pairs of (ecc(u)+ecc(v)) * d(u,v)
};

inline constexpr std::array<InvariantKind, 8> kAllInvariantKinds = {
    InvariantKind::ReeEdge,           InvariantKind::ReeVertex,
    InvariantKind::EccConnectivityEdge, InvariantKind::EccConnectivityVertex,
    InvariantKind::Wiener,            InvariantKind::Harary,
    InvariantKind::AvgEccentricity,   InvariantKind::EccDistanceSum,
};

inline std::string_view invariant_name(InvariantKind k) {
    switch (k) {
        case InvariantKind::ReeEdge: return "REE_EDGE";
        case InvariantKind::ReeVertex: return "REE_VERTEX";
        case InvariantKind::EccConnectivityEdge: return "ECC_CONNECTIVITY_EDGE";
        case InvariantKind::EccConnectivityVertex: return "ECC_CONNECTIVITY_VERTEX";
        case InvariantKind::Wiener: return "WIENER";
        case InvariantKind::Harary: return "HARARY";
        case InvariantKind::AvgEccentricity: return "AVG_ECCENTRICITY";
        case InvariantKind::EccDistanceSum: return "ECC_DISTANCE_SUM";
    }
    return "?";
}

inline std::optional<InvariantKind> invariant_from_name(std::string_view s) {
    for (auto k : kAllInvariantKinds)
        if (invariant_name(k) == s) return k;
    return std::nullopt;
}

namespace detail {

inline bool needs_reciprocal(InvariantKind k) {
    return k == InvariantKind::ReeEdge || k == InvariantKind::ReeVertex ||
           k == InvariantKind::Harary || k == InvariantKind::AvgEccentricity;
}

inline Rational invariant_from_parts(const Tree& t, InvariantKind kind,
                                     const std::vector<int>& ecc,
                                     const std::vector<std::vector<int>>* dist) {
    const int n = t.order();
    Rational acc;
    switch (kind) {
        case InvariantKind::ReeEdge:
            for (const auto& [u, v] : t.edges()) acc += Rational(1, ecc[u]) + Rational(1, ecc[v]);
            return acc;
        case InvariantKind::ReeVertex:
            for (int v = 0; v < n; ++v) acc += Rational(t.degree(v), ecc[v]);
            return acc;
        case InvariantKind::EccConnectivityEdge:
            for (const auto& [u, v] : t.edges()) acc += Rational(ecc[u] + ecc[v]);
            return acc;
        case InvariantKind::EccConnectivityVertex:
            for (int v = 0; v < n; ++v) acc += Rational(static_cast<long>(t.degree(v)) * ecc[v]);
            return acc;
        case InvariantKind::Wiener:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) acc += Rational((*dist)[u][v]);
            return acc;
        case InvariantKind::Harary:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) acc += Rational(1, (*dist)[u][v]);
            return acc;
        case InvariantKind::AvgEccentricity: {
            long s = 0;
            for (int v = 0; v < n; ++v) s += ecc[v];
            return Rational(s, n);
        }
        case InvariantKind::EccDistanceSum:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    acc += Rational(static_cast<long>(ecc[u] + ecc[v]) * (*dist)[u][v]);
            return acc;
    }
    fail(Errc::UnknownTheorem, "unhandled invariant kind");
}

}  // namespace detail

/// Exact value of one invariant. Reciprocal kinds reject n = 1, where the
/// eccentricity is 0 and 1/ecc undefined.
inline Rational compute_invariant(const Tree& t, InvariantKind kind) {
    if (t.order() == 1 && detail::needs_reciprocal(kind))
        fail(Errc::SingleVertexUndefined, std::string(invariant_name(kind)) + " undefined at n=1");
    std::vector<int> ecc(t.order());
    std::vector<std::vector<int>> dist;
    bool pairwise = kind == InvariantKind::Wiener || kind == InvariantKind::Harary ||
                    kind == InvariantKind::EccDistanceSum;
    for (int v = 0; v < t.order(); ++v) {
        auto d = bfs_distances(t, v);
        ecc[v] = *std::max_element(d.begin(), d.end());
        if (pairwise) dist.push_back(std::move(d));
    }
    return detail::invariant_from_parts(t, kind, ecc, pairwise ? &dist : nullptr);
}

/// All eight invariants from one distance computation.
inline std::map<InvariantKind, Rational> all_invariants(const Tree& t) {
    if (t.order() == 1) fail(Errc::SingleVertexUndefined, "all_invariants requires n >= 2");
    std::vector<int> ecc(t.order());
    std::vector<std::vector<int>> dist;
    dist.reserve(t.order());
    for (int v = 0; v < t.order(); ++v) {
        dist.push_back(bfs_distances(t, v));
        ecc[v] = *std::max_element(dist.back().begin(), dist.back().end());
    }
    std::map<InvariantKind, Rational> out;
    for (auto k : kAllInvariantKinds) out.emplace(k, detail::invariant_from_parts(t, k, ecc, &dist));
    return out;
}

/// REE in vertex form; the harness objective.
inline Rational ree(const Tree& t) { return compute_invariant(t, InvariantKind::ReeVertex); }

}  // namespace ecci
