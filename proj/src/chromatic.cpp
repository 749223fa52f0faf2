#include "turan/chromatic.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace turan {

namespace {

void grow_clique(const Graph& g, VertexMask candidates, int size, int& best) {
    if (!candidates) {
        best = std::max(best, size);
        return;
    }
    if (size + popcount(candidates) <= best) return;
    while (candidates) {
        if (size + popcount(candidates) <= best) return;
        const int v = lowest_vertex(candidates);
        candidates &= ~bit(v);
        grow_clique(g, candidates & g.neighbors(v), size + 1, best);
    }
}

// order: vertices by descending degree; classes[c] holds the vertices colored c.
bool extend_coloring(const Graph& g, const std::array<int, kMaxVertices>& order, int idx, int colors,
                     std::array<VertexMask, kMaxVertices>& classes, int used) {
    if (idx == g.order()) return true;
    const int v = order[idx];
    // Symmetry breaking: a fresh color is only tried once, as color `used`.
    const int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; ++c) {
        if (classes[c] & g.neighbors(v)) continue;
        classes[c] |= bit(v);
        if (extend_coloring(g, order, idx + 1, colors, classes, std::max(used, c + 1))) return true;
        classes[c] &= ~bit(v);
    }
    return false;
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 0;
    grow_clique(g, g.vertices(), 0, best);
    return best;
}

bool is_colorable(const Graph& g, int colors) {
    if (g.order() == 0) return true;
    if (colors <= 0) return false;
    std::array<int, kMaxVertices> order{};
    for (int v = 0; v < g.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.begin() + g.order(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::array<VertexMask, kMaxVertices> classes{};
    return extend_coloring(g, order, 0, colors, classes, 0);
}

int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    int k = std::max(1, clique_number(g));
    while (!is_colorable(g, k)) ++k;
    return k;
}

std::vector<Edge> color_critical_edges(const Graph& g) {
    const std::vector<Edge> edges = g.edges();
    if (edges.empty()) throw std::invalid_argument("color-critical edges need a graph with at least one edge");
    const int chi = chromatic_number(g);
    std::vector<Edge> critical;
    for (const Edge& e : edges)
        if (is_colorable(g.without_edge(e.u, e.v), chi - 1)) critical.push_back(e);
    return critical;
}

}  // namespace turan
