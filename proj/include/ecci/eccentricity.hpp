#pragma once

#include <algorithm>
#include <vector>

#include "ecci/tree.hpp"

namespace ecci {

/// Unweighted shortest-path distances from `source` (all finite on a tree).
inline std::vector<int> bfs_distances(const Tree& t, int source) {
    t.check_vertex(source);
    std::vector<int> dist(t.order(), -1);
    std::vector<int> queue;
    queue.reserve(t.order());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : t.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

struct EccentricityProfile {
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;
    std::vector<int> centers;  // ascending; one or two vertices on a tree
};

/// Per-vertex eccentricities by n BFS passes, with diameter/radius/centers.
inline EccentricityProfile eccentricity_profile(const Tree& t) {
    const int n = t.order();
    EccentricityProfile p;
    p.ecc.resize(n);
    for (int v = 0; v < n; ++v) {
        auto d = bfs_distances(t, v);
        p.ecc[v] = *std::max_element(d.begin(), d.end());
    }
    p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
    p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
    for (int v = 0; v < n; ++v)
        if (p.ecc[v] == p.radius) p.centers.push_back(v);
    return p;
}

/// One diametral path v_0..v_d. Deterministic: both endpoints and every
/// interior step resolve ties toward the smallest vertex id, and the path is
/// oriented to start at its smaller endpoint.
inline std::vector<int> diametral_path(const Tree& t) {
    auto farthest = [&](int src) {
        auto d = bfs_distances(t, src);
        int best = src;
        for (int v = 0; v < t.order(); ++v)
            if (d[v] > d[best]) best = v;  // first max = smallest id
        return best;
    };
    int a = farthest(0);
    int b = farthest(a);
    int s = std::min(a, b), e = std::max(a, b);
    auto d = bfs_distances(t, s);
    std::vector<int> path{e};
    while (path.back() != s) {
        int u = path.back();
        for (int w : t.neighbors(u))  // ascending, so first hit is smallest id
            if (d[w] == d[u] - 1) {
                path.push_back(w);
                break;
            }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace ecci
