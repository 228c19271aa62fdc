#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecci/error.hpp"

namespace ecci {

using Edge = std::pair<int, int>;

/// Immutable simple tree on vertices 0..n-1, adjacency lists sorted ascending.
/// Construction goes through validate(), which checks the full tree contract
/// (n-1 edges, loop/duplicate free, connected) and names the first offending
/// element on failure. Transformations build new Trees; values are safe to
/// share across threads.
class Tree {
public:
    static Tree validate(int n, std::span<const Edge> edges) {
        if (n < 1) fail(Errc::InfeasibleParams, "vertex count " + std::to_string(n) + " < 1");
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n)
                fail(Errc::VertexOutOfRange, "edge endpoint " + std::to_string(u) +
                                                 " outside [0," + std::to_string(n) + ")");
            if (v < 0 || v >= n)
                fail(Errc::VertexOutOfRange, "edge endpoint " + std::to_string(v) +
                                                 " outside [0," + std::to_string(n) + ")");
            if (u == v) fail(Errc::HasCycle, "self-loop at vertex " + std::to_string(u));
        }
        // Union-find: the first edge closing a component is reported as the cycle.
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [u, v] : edges) {
            int ru = find(u), rv = find(v);
            if (ru == rv)
                fail(Errc::HasCycle, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                         ") closes a cycle");
            parent[ru] = rv;
        }
        if (static_cast<int>(edges.size()) != n - 1) {
            // Cycle-free with too few edges: some vertex is cut off from 0.
            for (int v = 1; v < n; ++v)
                if (find(v) != find(0))
                    fail(Errc::NotConnected, "vertex " + std::to_string(v) +
                                                 " unreachable from vertex 0");
            fail(Errc::NotConnected, "edge count " + std::to_string(edges.size()) +
                                         " != " + std::to_string(n - 1));
        }
        std::vector<std::vector<int>> adj(n);
        for (const auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
        return Tree(std::move(adj));
    }

    static Tree validate(int n, const std::vector<Edge>& edges) {
        return validate(n, std::span<const Edge>(edges));
    }

    int order() const { return n_; }
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }
    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(n_ - 1);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            fail(Errc::VertexOutOfRange,
                 "vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
    }

    bool operator==(const Tree& o) const { return adj_ == o.adj_; }

private:
    explicit Tree(std::vector<std::vector<int>> adj)
        : n_(static_cast<int>(adj.size())), adj_(std::move(adj)) {}

    int n_;
    std::vector<std::vector<int>> adj_;
};

/// validate() wrapper matching the operation vocabulary used elsewhere.
inline Tree validate_tree(int n, const std::vector<Edge>& edges) { return Tree::validate(n, edges); }

}  // namespace ecci
