#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace ccode {

// An unordered pair of vertex labels, stored smaller-first so that
// std::pair's lexicographic ordering gives a canonical sort.
using Edge = std::pair<int, int>;
using EdgeSet = std::vector<Edge>;

inline Edge make_edge(int a, int b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

inline void normalize_edges(EdgeSet& edges) {
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
}

inline EdgeSet normalized(EdgeSet edges) {
    normalize_edges(edges);
    return edges;
}

inline int mod(int v, int modulus) {
    int m = v % modulus;
    return m < 0 ? m + modulus : m;
}

// Shift a vertex label by delta mod 2n; apex vertices (>= modulus) are fixed.
inline int shift_vertex(int v, int delta, int modulus) {
    return v < modulus ? mod(v + delta, modulus) : v;
}

inline EdgeSet shift_edges(const EdgeSet& edges, int delta, int modulus) {
    EdgeSet out;
    out.reserve(edges.size());
    for (const auto& [x, y] : edges) {
        out.push_back(make_edge(shift_vertex(x, delta, modulus),
                                shift_vertex(y, delta, modulus)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ccode
