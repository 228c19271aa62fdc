#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "ecci/enumerate.hpp"
#include "ecci/invariants.hpp"
#include "ecci/transforms.hpp"

namespace ecci {

/// Outcome counts of one seeded fuzz run. `held_violations` counts trials
/// where the theorem's inequality failed although its precondition held
/// (for the Thm 3.6 shift it also covers equal/strict-flag disagreements).
struct FuzzSummary {
    GraftMove::Kind kind{};
    long trials = 0;
    long applied = 0;
    long precondition_held = 0;
    long strict_increase = 0;
    long equal = 0;
    long decrease = 0;
    long held_violations = 0;
    std::string first_violation;  // edge list of the first offending tree
};

namespace detail {

/// Smallest-id admissible rho site; prefers sites whose theorem precondition
/// holds so the fuzz population exercises the inequality.
inline std::optional<RhoResult> scan_rho(const Tree& t) {
    std::optional<RhoResult> fallback;
    for (int v = 0; v < t.order(); ++v) {
        for (int w : t.neighbors(v)) {
            const auto& nb = t.neighbors(v);
            // retained pendant path candidates: none, or any one neighbor
            for (int keep = -1; keep < static_cast<int>(nb.size()); ++keep) {
                std::vector<int> roots;
                int kept = keep < 0 ? -1 : nb[keep];
                if (kept == w) continue;
                for (int r : nb)
                    if (r != w && r != kept) roots.push_back(r);
                if (roots.empty()) continue;
                auto res = rho_transform(t, w, v, roots);
                if (res.precondition_held) return res;
                if (!fallback) fallback = std::move(res);
            }
        }
    }
    return fallback;
}

inline std::optional<AlphaResult> scan_alpha(const Tree& t) {
    std::optional<AlphaResult> fallback;
    auto try_site = [&](int v1, int vl) -> std::optional<AlphaResult> {
        auto d = bfs_distances(t, v1);
        // walk from vl toward v1; interior must be bare
        int cur = vl, prev = -1;
        while (cur != v1) {
            int next = -1;
            for (int nb : t.neighbors(cur))
                if (d[nb] == d[cur] - 1) {
                    next = nb;
                    break;
                }
            if (cur != vl && t.degree(cur) != 2) return std::nullopt;
            prev = cur;
            cur = next;
        }
        (void)prev;
        int toward = -1;
        for (int nb : t.neighbors(vl))
            if (d[nb] == d[vl] - 1) {
                toward = nb;
                break;
            }
        std::vector<int> roots;
        for (int nb : t.neighbors(vl))
            if (nb != toward) roots.push_back(nb);
        if (roots.empty()) return std::nullopt;
        return alpha_transform(t, v1, vl, roots);
    };
    for (int v1 = 0; v1 < t.order(); ++v1)
        for (int vl = 0; vl < t.order(); ++vl) {
            if (v1 == vl) continue;
            auto res = try_site(v1, vl);
            if (!res) continue;
            if (res->precondition_held) return res;
            if (!fallback) fallback = std::move(res);
        }
    return fallback;
}

inline std::optional<ThetaResult> scan_theta(const Tree& t) {
    std::optional<ThetaResult> fallback;
    for (int v = 0; v < t.order(); ++v) {
        bool star_ok = t.degree(v) >= 2;
        for (int u : t.neighbors(v)) {
            bool all_pendant = true;
            for (int z : t.neighbors(v))
                if (z != u && t.degree(z) != 1) all_pendant = false;
            if (!all_pendant || t.degree(v) < 2) continue;
            for (int w : t.neighbors(u)) {
                if (w == v || t.degree(w) < 2) continue;
                auto res = theta_transform(t, v, u, w);
                if (res.precondition_held) return res;
                if (!fallback) fallback = std::move(res);
            }
        }
        (void)star_ok;
    }
    return fallback;
}

}  // namespace detail

/// Seeded monotonicity fuzz for one transformation kind. Trial i draws its
/// tree from an rng seeded by (seed, i), scans for the smallest-id admissible
/// site, applies the rewrite, and compares REE exactly.
inline FuzzSummary fuzz_transforms(GraftMove::Kind kind, long trials, std::uint64_t seed,
                                   int max_tree_n = 16) {
    FuzzSummary s;
    s.kind = kind;
    s.trials = trials;
    for (long i = 0; i < trials; ++i) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i));
        int n = 5 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_tree_n - 4));
        Tree t = random_tree(n, rng);
        Rational before = ree(t);

        std::optional<Tree> after_tree;
        bool held = false, strict_flag = false;
        switch (kind) {
            case GraftMove::Kind::Rho: {
                auto r = detail::scan_rho(t);
                if (r) { after_tree = std::move(r->tree); held = r->precondition_held; }
                break;
            }
            case GraftMove::Kind::Alpha: {
                auto r = detail::scan_alpha(t);
                if (r) { after_tree = std::move(r->tree); held = r->precondition_held; }
                break;
            }
            case GraftMove::Kind::Theta: {
                auto r = detail::scan_theta(t);
                if (r) { after_tree = std::move(r->tree); held = r->precondition_held; }
                break;
            }
            case GraftMove::Kind::DiametralShift: {
                try {
                    auto r = diametral_pendant_shift(t);
                    after_tree = std::move(r.tree);
                    strict_flag = r.strict;
                    held = true;
                } catch (const Error& e) {
                    if (e.code() != Errc::NoOffPathPendant) throw;
                }
                break;
            }
            case GraftMove::Kind::PendantRegraft: {
                try {
                    auto r = pendant_regraft(t);
                    after_tree = std::move(r.tree);
                    held = true;
                } catch (const Error& e) {
                    if (e.code() != Errc::NoOffPathPendant) throw;
                }
                break;
            }
        }
        if (!after_tree) continue;
        ++s.applied;
        if (held) ++s.precondition_held;
        Rational after = ree(*after_tree);
        if (after > before) ++s.strict_increase;
        else if (after == before) ++s.equal;
        else ++s.decrease;

        bool violation = false;
        if (held) {
            switch (kind) {
                case GraftMove::Kind::Rho:
                case GraftMove::Kind::Alpha:
                case GraftMove::Kind::Theta:
                    violation = !(after > before);
                    break;
                case GraftMove::Kind::DiametralShift:
                    violation = after < before || (strict_flag ? after == before : after != before);
                    break;
                case GraftMove::Kind::PendantRegraft:
                    violation = after > before;
                    break;
            }
        }
        if (violation) {
            ++s.held_violations;
            if (s.first_violation.empty()) {
                std::string e;
                for (auto [u, v] : t.edges())
                    e += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
                s.first_violation = "trial " + std::to_string(i) + " n=" + std::to_string(n) + " " + e;
            }
        }
    }
    return s;
}

inline std::optional<GraftMove::Kind> graft_kind_from_name(std::string_view s) {
    if (s == "rho") return GraftMove::Kind::Rho;
    if (s == "alpha") return GraftMove::Kind::Alpha;
    if (s == "theta") return GraftMove::Kind::Theta;
    if (s == "shift") return GraftMove::Kind::DiametralShift;
    if (s == "regraft") return GraftMove::Kind::PendantRegraft;
    return std::nullopt;
}

}  // namespace ecci
