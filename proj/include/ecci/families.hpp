#pragma once

#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecci/canonical.hpp"
#include "ecci/invariants.hpp"
#include "ecci/parameters.hpp"
#include "ecci/tree.hpp"

namespace ecci {

inline Tree path_tree(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Tree::validate(n, e);
}

inline Tree star_tree(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Tree::validate(n, e);
}

/// Spider with hub 0 and legs laid out consecutively in declaration order.
inline Tree spider(const std::vector<int>& legs) {
    if (legs.empty()) fail(Errc::EmptyLegs, "spider needs at least one leg");
    std::vector<Edge> e;
    int next = 1;
    for (int len : legs) {
        if (len < 1) fail(Errc::NonPositiveLeg, "leg length " + std::to_string(len));
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree::validate(next, e);
}

/// Balanced spider on n vertices with k legs: (n-1) mod k long legs of length
/// ceil((n-1)/k), the rest floor. Short legs first.
inline Tree balanced_spider(int n, int k) {
    bool degenerate = (k == 2 && n >= 3) || (k == n - 1 && n >= 2);
    bool nontrivial = k >= 3 && k <= n - 2;
    if (!degenerate && !nontrivial)
        fail(Errc::InfeasibleParams,
             "balanced spider needs 3 <= k <= n-2 or k in {2, n-1}; got n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
    int lo = (n - 1) / k, r = (n - 1) % k;
    std::vector<int> legs(k - r, lo);
    legs.insert(legs.end(), r, lo + 1);
    return spider(legs);
}

/// Two spiders joined by an edge between their hubs; vertex 0 is the left hub.
/// The construction demands equal hub eccentricities inside the result.
inline Tree double_spider(const std::vector<int>& left, const std::vector<int>& right) {
    if (left.size() < 2 || right.size() < 2)
        fail(Errc::TooFewLegs, "double spider needs s, t >= 2");
    for (int len : left)
        if (len < 1) fail(Errc::NonPositiveLeg, "leg length " + std::to_string(len));
    for (int len : right)
        if (len < 1) fail(Errc::NonPositiveLeg, "leg length " + std::to_string(len));
    std::vector<Edge> e;
    int next = 1;
    auto lay = [&](int hub, const std::vector<int>& legs) {
        for (int len : legs) {
            int prev = hub;
            for (int i = 0; i < len; ++i) {
                e.emplace_back(prev, next);
                prev = next++;
            }
        }
    };
    lay(0, left);
    int right_hub = next++;
    e.emplace_back(0, right_hub);
    lay(right_hub, right);
    Tree t = Tree::validate(next, e);
    auto prof = eccentricity_profile(t);
    if (prof.ecc[0] != prof.ecc[right_hub])
        fail(Errc::HubEccentricityMismatch, "hub eccentricities " + std::to_string(prof.ecc[0]) +
                                                " vs " + std::to_string(prof.ecc[right_hub]));
    return t;
}

/// Star on n-beta+1 vertices (center 0) with one extra pendant on each of
/// beta-1 of its leaves.
inline Tree t_n_beta(int n, int beta) {
    if (beta < 1 || n < 2 * beta)
        fail(Errc::InfeasibleParams,
             "t_n_beta needs n >= 2*beta >= 2; got n=" + std::to_string(n) +
                 " beta=" + std::to_string(beta));
    std::vector<Edge> e;
    int star_leaves = n - beta;
    for (int i = 1; i <= star_leaves; ++i) e.emplace_back(0, i);
    for (int j = 0; j < beta - 1; ++j) e.emplace_back(1 + j, star_leaves + 1 + j);
    return Tree::validate(n, e);
}

/// Path on t vertices with a extra leaves at one end and b at the other.
inline Tree p_t_ab(int t, int a, int b) {
    if (t < 2 || a < 0 || b < 0)
        fail(Errc::InfeasibleParams, "p_t_ab needs t >= 2, a,b >= 0");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < t; ++i) e.emplace_back(i, i + 1);
    int next = t;
    for (int i = 0; i < a; ++i) e.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) e.emplace_back(t - 1, next++);
    return Tree::validate(next, e);
}

/// Path v_0..v_d with counts[i-1] pendants at v_i, i = 1..d-1.
inline Tree caterpillar(int d, const std::vector<int>& counts) {
    if (d < 2) fail(Errc::InfeasibleParams, "caterpillar needs d >= 2");
    if (static_cast<int>(counts.size()) != d - 1)
        fail(Errc::LengthMismatch, "expected " + std::to_string(d - 1) + " counts, got " +
                                       std::to_string(counts.size()));
    std::vector<Edge> e;
    for (int i = 0; i < d; ++i) e.emplace_back(i, i + 1);
    int next = d + 1;
    for (int i = 1; i < d; ++i) {
        if (counts[i - 1] < 0) fail(Errc::InfeasibleParams, "negative pendant count");
        for (int j = 0; j < counts[i - 1]; ++j) e.emplace_back(i, next++);
    }
    Tree t = Tree::validate(next, e);
    if (eccentricity_profile(t).diameter != d)
        fail(Errc::InfeasibleParams, "caterpillar construction broke the diameter");
    return t;
}

/// C_{n,d}: all spare pendants at the middle of the path; odd d splits them
/// across the two central vertices, balanced by default (any split has the
/// same REE; the harness exclusion covers the whole odd-d split family).
inline Tree c_n_d(int n, int d) {
    if (d < 2 || d > n - 1)
        fail(Errc::InfeasibleParams, "c_n_d needs 2 <= d <= n-1; got n=" + std::to_string(n) +
                                         " d=" + std::to_string(d));
    int extra = n - d - 1;
    std::vector<int> counts(d - 1, 0);
    if (d % 2 == 0) {
        counts[d / 2 - 1] = extra;
    } else {
        counts[(d - 1) / 2 - 1] = (extra + 1) / 2;
        counts[(d + 1) / 2 - 1] = extra / 2;
    }
    return caterpillar(d, counts);
}

/// Members of S_n^k: two spiders with all legs of equal length (n-2)/k and
/// s, t >= 2 legs, hubs joined. Empty when k = 3 or n != 2 (mod k).
inline std::vector<Tree> snk_members(int n, int k) {
    std::vector<Tree> out;
    if (k == 3 || k < 4 || (n - 2) % k != 0) return out;
    int a = (n - 2) / k;
    if (a < 1) return out;
    for (int s = 2; s <= k - 2; ++s) {
        out.push_back(double_spider(std::vector<int>(s, a), std::vector<int>(k - s, a)));
    }
    return out;
}

// -------- closed forms --------

enum class TheoremForm { T42I, T42II, T42III, T45III, T46, T47, T48, P3AB };

inline std::optional<TheoremForm> theorem_form_from_name(std::string_view s) {
    if (s == "T42I") return TheoremForm::T42I;
    if (s == "T42II") return TheoremForm::T42II;
    if (s == "T42III") return TheoremForm::T42III;
    if (s == "T45III") return TheoremForm::T45III;
    if (s == "T46") return TheoremForm::T46;
    if (s == "T47") return TheoremForm::T47;
    if (s == "T48") return TheoremForm::T48;
    if (s == "P3AB") return TheoremForm::P3AB;
    return std::nullopt;
}

/// Exact evaluation of the cited displayed formulas, sum terms evaluated
/// term by term.
inline Rational closed_form(TheoremForm form, std::span<const long> args) {
    auto need = [&](std::size_t c) {
        if (args.size() != c)
            fail(Errc::InfeasibleParams, "closed form expects " + std::to_string(c) + " args");
    };
    switch (form) {
        case TheoremForm::T42I:
            need(1);
            return Rational(3 * args[0] - 3, 2);
        case TheoremForm::T42II:
        case TheoremForm::T46:
            need(1);
            return Rational(5 * args[0] - 4, 6);
        case TheoremForm::T42III:
        case TheoremForm::T45III:
            need(2);
            if (args[0] < 2 * args[1]) fail(Errc::InfeasibleParams, "needs n >= 2*beta");
            return Rational(10 * args[0] - 3 * args[1] - 7, 12);
        case TheoremForm::P3AB:
            need(1);
            return Rational(7 * args[0] - 1, 12);
        case TheoremForm::T47: {
            need(2);
            long n = args[0], d = args[1];
            if (d < 4 || n < d + 3) fail(Errc::InfeasibleParams, "T47 needs d >= 4, n >= d+3");
            Rational acc;
            if (d % 2 == 0) {
                for (long i = 0; i <= d / 2 - 2; ++i) acc += Rational(4, d - i);
                acc += Rational(2 * n - 2 * d - 2, d);
                acc += Rational(2 * n - 2 * d + 6, d + 2);
                acc += Rational(2, d + 4);
            } else {
                for (long i = 0; i <= (d - 1) / 2 - 2; ++i) acc += Rational(4, d - i);
                acc -= Rational(2, d);
                acc += Rational(2 * n - 2 * d + 4, d + 1);
                acc += Rational(2 * n - 2 * d + 6, d + 3);
                acc += Rational(2, d + 5);
            }
            return acc;
        }
        case TheoremForm::T48: {
            need(2);
            long n = args[0], d = args[1];
            if (d < 4 || n < d + 3) fail(Errc::InfeasibleParams, "T48 needs d >= 4, n >= d+3");
            Rational acc;
            if (d % 2 == 0) {
                for (long i = 1; i <= d / 2 - 1; ++i) acc += Rational(4, d - i);
                acc += Rational(n - d + 4, d);
            } else {
                for (long i = 1; i <= (d - 1) / 2; ++i) acc += Rational(4, d - i);
                acc += Rational(n - d, d);
            }
            acc += Rational(n - d - 1, d - 1);
            acc += Rational(1, d - 2);
            return acc;
        }
    }
    fail(Errc::UnknownTheorem, "unhandled theorem form");
}

inline Rational closed_form(std::string_view id, std::span<const long> args) {
    auto form = theorem_form_from_name(id);
    if (!form) fail(Errc::UnknownTheorem, std::string(id));
    return closed_form(*form, args);
}

// -------- second-extremal candidate families (Thm 4.7 / Thm 4.8) --------

namespace detail {

/// path v_0..v_d plus pendant groups and at most one depth-2 branch.
struct PathAttachment {
    int pos;
    int pendants = 0;     // plain pendants at v_pos
    int branch_load = -1; // >= 0: one extra vertex at v_pos carrying this many pendants
};

inline Tree path_with_attachments(int d, const std::vector<PathAttachment>& units) {
    std::vector<Edge> e;
    for (int i = 0; i < d; ++i) e.emplace_back(i, i + 1);
    int next = d + 1;
    for (const auto& u : units) {
        for (int j = 0; j < u.pendants; ++j) e.emplace_back(u.pos, next++);
        if (u.branch_load >= 0) {
            int r = next++;
            e.emplace_back(u.pos, r);
            for (int j = 0; j < u.branch_load; ++j) e.emplace_back(r, next++);
        }
    }
    return Tree::validate(next, e);
}

inline void keep_unique(std::vector<Tree>& out, std::vector<CanonicalCode>& seen, Tree t) {
    auto code = canonical_code(t);
    for (const auto& c : seen)
        if (c == code) return;
    seen.push_back(std::move(code));
    out.push_back(std::move(t));
}

}  // namespace detail

/// Candidate maximizers over n-vertex diameter-d trees after removing the
/// C_{n,d} family. Even d: one pendant beside the center plus the rest on the
/// center, or a 2-path on the center. Odd d: one pendant just outside the
/// bicentral pair plus any split of the rest across the two centers, or a
/// 2-path at a center with any split of the rest. Every candidate is checked
/// against the Thm 4.7 closed form before being returned.
inline std::vector<Tree> fig7_candidates(int n, int d) {
    if (d < 4 || n < d + 3)
        fail(Errc::InfeasibleParams, "fig7 needs d >= 4, n >= d+3; got n=" + std::to_string(n) +
                                         " d=" + std::to_string(d));
    using detail::PathAttachment;
    std::vector<Tree> out;
    std::vector<CanonicalCode> seen;
    int m = n - d - 2;
    if (d % 2 == 0) {
        int c = d / 2;
        detail::keep_unique(out, seen,
                            detail::path_with_attachments(d, {{c - 1, 1, -1}, {c, m, -1}}));
        detail::keep_unique(out, seen,
                            detail::path_with_attachments(d, {{c + 1, 1, -1}, {c, m, -1}}));
        if (m >= 1)
            detail::keep_unique(out, seen, detail::path_with_attachments(d, {{c, m - 1, 1}}));
    } else {
        int c1 = (d - 1) / 2, c2 = (d + 1) / 2;
        for (int p = 0; p <= m; ++p) {
            int q = m - p;
            detail::keep_unique(
                out, seen,
                detail::path_with_attachments(d, {{c1 - 1, 1, -1}, {c1, p, -1}, {c2, q, -1}}));
            detail::keep_unique(
                out, seen,
                detail::path_with_attachments(d, {{c2 + 1, 1, -1}, {c1, p, -1}, {c2, q, -1}}));
        }
        for (int s = 0; s + 1 <= m; ++s) {
            int t2 = m - 1 - s;
            detail::keep_unique(
                out, seen,
                detail::path_with_attachments(d, {{c1, s, 1}, {c2, t2, -1}}));
            detail::keep_unique(
                out, seen,
                detail::path_with_attachments(d, {{c1, s, -1}, {c2, t2, 1}}));
        }
    }
    Rational want = closed_form(TheoremForm::T47, std::array<long, 2>{n, d});
    for (const auto& t : out)
        if (ree(t) != want)
            fail(Errc::CandidateValueMismatch,
                 "fig7 candidate value " + ree(t).str() + " != " + want.str());
    return out;
}

/// Candidate minimizers over diameter-d trees after removing the
/// T_{n,d}^{p,q} family: p pendants at v_1 and q at v_{d-1} plus one extra
/// vertex at v_2 (or mirrored at v_{d-2}) carrying c >= 0 pendants, with
/// c + p + q = n-d-2. c = 0 gives the plain one-pendant-at-v_2 shapes; c >= 1
/// members have equal REE and complete the equality class. Checked against
/// the Thm 4.8 closed form.
inline std::vector<Tree> fig8_candidates(int n, int d) {
    if (d < 4 || n < d + 3)
        fail(Errc::InfeasibleParams, "fig8 needs d >= 4, n >= d+3; got n=" + std::to_string(n) +
                                         " d=" + std::to_string(d));
    using detail::PathAttachment;
    std::vector<Tree> out;
    std::vector<CanonicalCode> seen;
    int m = n - d - 2;
    for (int c = 0; c <= m; ++c)
        for (int p = 0; p + c <= m; ++p) {
            int q = m - c - p;
            for (int pos : {2, d - 2}) {
                std::vector<PathAttachment> units{{1, p, -1}, {d - 1, q, -1}};
                if (c == 0)
                    units.push_back({pos, 1, -1});
                else
                    units.push_back({pos, 0, c});
                detail::keep_unique(out, seen, detail::path_with_attachments(d, units));
            }
        }
    Rational want = closed_form(TheoremForm::T48, std::array<long, 2>{n, d});
    for (const auto& t : out)
        if (ree(t) != want)
            fail(Errc::CandidateValueMismatch,
                 "fig8 candidate value " + ree(t).str() + " != " + want.str());
    return out;
}

// -------- FamilySpec string grammar --------

/// Symbolic family instance; grammar `name:p1,p2,...`, double spider legs
/// separated by ';' as in `dspider:1,1;2,2`.
struct FamilySpec {
    std::string name;
    std::vector<int> params;
    std::vector<int> params2;  // right legs of a double spider

    static FamilySpec parse(std::string_view s) {
        FamilySpec spec;
        auto colon = s.find(':');
        spec.name = std::string(s.substr(0, colon));
        auto parse_ints = [](std::string_view v) {
            std::vector<int> out;
            while (!v.empty()) {
                auto comma = v.find(',');
                std::string_view tok = v.substr(0, comma);
                int x{};
                auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
                if (ec != std::errc() || p != tok.data() + tok.size())
                    fail(Errc::ParseError, "bad integer '" + std::string(tok) + "'");
                out.push_back(x);
                if (comma == std::string_view::npos) break;
                v.remove_prefix(comma + 1);
            }
            return out;
        };
        if (colon != std::string_view::npos) {
            std::string_view rest = s.substr(colon + 1);
            auto semi = rest.find(';');
            if (semi != std::string_view::npos) {
                spec.params = parse_ints(rest.substr(0, semi));
                spec.params2 = parse_ints(rest.substr(semi + 1));
            } else {
                spec.params = parse_ints(rest);
            }
        }
        return spec;
    }

    /// Single-tree families build one tree; set families (snk, fig7, fig8)
    /// report all members.
    std::vector<Tree> build_all() const {
        auto need = [&](std::size_t c) {
            if (params.size() != c)
                fail(Errc::InfeasibleParams, name + " expects " + std::to_string(c) + " params");
        };
        if (name == "path") { need(1); return {path_tree(params[0])}; }
        if (name == "star") { need(1); return {star_tree(params[0])}; }
        if (name == "spider") return {spider(params)};
        if (name == "balspider") { need(2); return {balanced_spider(params[0], params[1])}; }
        if (name == "dspider") return {double_spider(params, params2)};
        if (name == "tnb") { need(2); return {t_n_beta(params[0], params[1])}; }
        if (name == "ptab") { need(3); return {p_t_ab(params[0], params[1], params[2])}; }
        if (name == "caterpillar") {
            if (params.empty()) fail(Errc::InfeasibleParams, "caterpillar expects d,a1,..,a_{d-1}");
            return {caterpillar(params[0], {params.begin() + 1, params.end()})};
        }
        if (name == "cnd") { need(2); return {c_n_d(params[0], params[1])}; }
        if (name == "snk") { need(2); return snk_members(params[0], params[1]); }
        if (name == "fig7") { need(2); return fig7_candidates(params[0], params[1]); }
        if (name == "fig8") { need(2); return fig8_candidates(params[0], params[1]); }
        fail(Errc::ParseError, "unknown family '" + name + "'");
    }
};

}  // namespace ecci
