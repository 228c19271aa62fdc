#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "ecci/eccentricity.hpp"
#include "ecci/tree.hpp"

namespace ecci {

/// Labeling-invariant identifier of a tree's isomorphism class: AHU
/// parenthesis encoding rooted at the center. Bicentral trees encode the two
/// halves separately (the center edge removed) and concatenate them in
/// lexicographic order behind a '2' tag, so the code length is 2n+1 either way.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;

    std::string hex() const {
        static constexpr char kDigits[] = "0123456789abcdef";
        std::string out;
        out.reserve(bytes.size() * 2);
        for (unsigned char c : bytes) {
            out.push_back(kDigits[c >> 4]);
            out.push_back(kDigits[c & 0xf]);
        }
        return out;
    }
};

namespace detail {

/// Sorted-children AHU code of the subtree at `root`, not crossing `block`.
inline std::string ahu_code(const Tree& t, int root, int block) {
    std::string out;
    // NOLINTNEXTLINE(misc-no-recursion): depth <= n, desk-scale trees
    std::function<void(int, int)> rec = [&](int u, int parent) {
        std::vector<std::string> kids;
        for (int v : t.neighbors(u))
            if (v != parent && v != block) {
                std::size_t mark = out.size();
                rec(v, u);
                kids.push_back(out.substr(mark));
                out.resize(mark);
            }
        std::sort(kids.begin(), kids.end());
        out.push_back('(');
        for (const auto& k : kids) out += k;
        out.push_back(')');
    };
    rec(root, -1);
    return out;
}

}  // namespace detail

inline CanonicalCode canonical_code(const Tree& t) {
    auto prof = eccentricity_profile(t);
    if (prof.centers.size() == 1)
        return CanonicalCode{"1" + detail::ahu_code(t, prof.centers[0], -1)};
    int c1 = prof.centers[0], c2 = prof.centers[1];
    std::string h1 = detail::ahu_code(t, c1, c2);
    std::string h2 = detail::ahu_code(t, c2, c1);
    if (h2 < h1) std::swap(h1, h2);
    return CanonicalCode{"2" + h1 + h2};
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
    if (a.order() != b.order()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace ecci

template <>
struct std::hash<ecci::CanonicalCode> {
    std::size_t operator()(const ecci::CanonicalCode& c) const noexcept {
        return std::hash<std::string>{}(c.bytes);
    }
};
