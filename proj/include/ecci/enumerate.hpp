#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ecci/parameters.hpp"
#include "ecci/tree.hpp"

namespace ecci {

inline constexpr int kDefaultMaxN = 20;

namespace detail {

/// Beyer-Hedetniemi successor of a rooted-tree level sequence (reverse
/// lexicographic order); empty result when the sequence is exhausted.
inline bool next_rooted_layout(std::vector<int>& seq, int p = -1) {
    int len = static_cast<int>(seq.size());
    if (p < 0) {
        p = len - 1;
        while (p >= 0 && seq[p] == 1) --p;
    }
    if (p <= 0) return false;
    int q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (int i = p; i < len; ++i) seq[i] = seq[i - p + q];
    return true;
}

/// Split a layout into (left subtree of the root, tree minus that subtree),
/// both as level sequences. Returns the index where the left subtree ends.
inline int split_point(const std::vector<int>& layout) {
    bool one_seen = false;
    for (std::size_t i = 0; i < layout.size(); ++i)
        if (layout[i] == 1) {
            if (one_seen) return static_cast<int>(i);
            one_seen = true;
        }
    return static_cast<int>(layout.size());
}

/// Advance `layout` to itself if it encodes a canonical free tree, otherwise
/// to the next layout that does (WROM step). False when exhausted.
inline bool next_free_layout(std::vector<int>& layout) {
    int len = static_cast<int>(layout.size());
    int m = split_point(layout);
    int left_height = 0, rest_height = 0, left_size = m - 1, rest_size = len - m + 1;
    for (int i = 1; i < m; ++i) left_height = std::max(left_height, layout[i] - 1);
    for (int i = m; i < len; ++i) rest_height = std::max(rest_height, layout[i]);

    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left_size > rest_size) {
            valid = false;
        } else if (left_size == rest_size) {
            // lexicographic comparison of left (shifted down) vs [0] + tail
            for (int i = 0; i < left_size; ++i) {
                int a = layout[1 + i] - 1;
                int b = i == 0 ? 0 : layout[m + i - 1];
                if (a != b) {
                    valid = a < b;
                    break;
                }
            }
        }
    }
    if (valid) return true;

    int p = left_size;
    int jump_level = layout[p];
    if (!next_rooted_layout(layout, p)) return false;
    if (jump_level > 2) {
        int m2 = split_point(layout);
        int h2 = 0;
        for (int i = 1; i < m2; ++i) h2 = std::max(h2, layout[i] - 1);
        int suffix_len = h2 + 1;
        for (int i = 0; i < suffix_len; ++i) layout[len - suffix_len + i] = i + 1;
    }
    return true;
}

inline Tree layout_to_tree(const std::vector<int>& layout) {
    std::vector<Edge> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
        while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return Tree::validate(static_cast<int>(layout.size()), edges);
}

}  // namespace detail

/// Isomorph-free stream of all free trees on n vertices (WROM: canonical
/// level sequences, O(n) state). Deterministic; restartable from a saved
/// layout; a (stride, offset) pair yields every stride-th tree, so workers
/// with equal stride and distinct offsets consume disjoint sub-streams that
/// union to the full sequence.
class FreeTreeStream {
public:
    explicit FreeTreeStream(int n, int stride = 1, int offset = 0, int max_n = kDefaultMaxN)
        : n_(n), stride_(stride), offset_(offset) {
        if (n < 1) fail(Errc::InfeasibleParams, "n must be >= 1");
        if (n > max_n)
            fail(Errc::NTooLarge, "n = " + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
        if (stride < 1 || offset < 0 || offset >= stride)
            fail(Errc::InfeasibleParams, "stream partition needs stride >= 1, 0 <= offset < stride");
        // start at the path rooted at its center (n = 1 degenerates to [0])
        layout_.reserve(n_);
        for (int i = 0; i <= n_ / 2; ++i) layout_.push_back(i);
        for (int i = 1; i < (n_ + 1) / 2; ++i) layout_.push_back(i);
    }

    /// Next tree of this sub-stream, or nullopt when done.
    std::optional<Tree> next() {
        while (true) {
            const auto* layout = next_layout();
            if (!layout) return std::nullopt;
            if ((index_ - 1) % stride_ == offset_) return detail::layout_to_tree(*layout);
        }
    }

    /// Restart from a previously observed state().
    void restart(std::vector<int> layout, long index) {
        layout_ = std::move(layout);
        index_ = index;
        done_ = layout_.empty();
        fresh_ = false;
    }

    const std::vector<int>& state() const { return layout_; }
    long index() const { return index_; }

private:
    /// Advance the full sequence by one canonical layout; nullptr at the end.
    const std::vector<int>* next_layout() {
        if (done_) return nullptr;
        if (!fresh_) {
            if (!detail::next_rooted_layout(layout_)) {
                done_ = true;
                return nullptr;
            }
        }
        fresh_ = false;
        if (!detail::next_free_layout(layout_)) {
            done_ = true;
            return nullptr;
        }
        ++index_;
        return &layout_;
    }

    int n_;
    int stride_;
    int offset_;
    std::vector<int> layout_;
    bool fresh_ = true;
    bool done_ = false;
    long index_ = 0;  // 1-based index of the layout just produced
};

/// Materialize all free trees on n vertices (small n convenience).
inline std::vector<Tree> free_trees(int n, int max_n = kDefaultMaxN) {
    FreeTreeStream stream(n, 1, 0, max_n);
    std::vector<Tree> out;
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

inline long count_free_trees(int n, int max_n = kDefaultMaxN) {
    FreeTreeStream stream(n, 1, 0, max_n);
    long c = 0;
    while (stream.next()) ++c;
    return c;
}

/// filter_class: lazily filter a stream by a ParamClass selector.
template <typename Consumer>
inline void for_each_in_class(int n, const ParamClass& cls, Consumer&& consume,
                              int max_n = kDefaultMaxN) {
    FreeTreeStream stream(n, 1, 0, max_n);
    while (auto t = stream.next())
        if (cls.matches(*t)) consume(*t);
}

/// Decode a Pruefer sequence over 0..n-1 (n = len+2) into a tree.
inline Tree prufer_to_tree(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int s : seq) {
        if (s < 0 || s >= n) fail(Errc::VertexOutOfRange, "pruefer symbol " + std::to_string(s));
        ++deg[s];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--deg[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree::validate(n, edges);
}

/// Uniform random labeled tree on n vertices via a random Pruefer sequence.
inline Tree random_tree(int n, std::mt19937_64& rng) {
    if (n == 1) return Tree::validate(1, std::vector<Edge>{});
    if (n == 2) return Tree::validate(2, std::vector<Edge>{{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (auto& s : seq) s = pick(rng);
    return prufer_to_tree(seq);
}

}  // namespace ecci
