#include "turan/graph.hpp"

#include <algorithm>
#include <string>

#include "turan/errors.hpp"

namespace turan {

namespace {

void check_capacity(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
        throw CapacityError("graph on " + std::to_string(n) + " vertices exceeds capacity of " +
                            std::to_string(kMaxVertices));
}

void check_vertex(int n, int v) {
    if (v < 0 || v >= n)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_capacity(n); }

int Graph::size() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        VertexMask later = adj_[u] & ~all_vertices(u + 1);
        for (; later; later &= later - 1) out.emplace_back(u, lowest_vertex(later));
    }
    return out;
}

void Graph::set_edge(int u, int v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::clear_edge(int u, int v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    Graph g = *this;
    g.set_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    Graph g = *this;
    g.clear_edge(u, v);
    return g;
}

Graph Graph::with_vertex(VertexMask nbrs) const {
    check_capacity(n_ + 1);
    if (nbrs & ~vertices()) throw std::out_of_range("neighbor mask references missing vertices");
    Graph g = *this;
    const int v = g.n_++;
    g.adj_[v] = nbrs;
    for (VertexMask m = nbrs; m; m &= m - 1) g.adj_[lowest_vertex(m)] |= bit(v);
    return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation length differs from order");
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
        VertexMask m = 0;
        for (VertexMask nb = adj_[u]; nb; nb &= nb - 1) m |= bit(perm[lowest_vertex(nb)]);
        g.adj_[perm[u]] = m;
    }
    return g;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph make_graph(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        check_vertex(n, e.u);
        check_vertex(n, e.v);
        if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        if (g.adjacent(e.u, e.v))
            throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        g.set_edge(e.u, e.v);
    }
    return g;
}

Graph make_graph(int n, std::initializer_list<Edge> edges) {
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph induced_subgraph(const Graph& g, VertexMask subset) {
    if (subset & ~g.vertices()) throw std::out_of_range("subset references missing vertices");
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for (VertexMask m = subset; m; m &= m - 1) index[lowest_vertex(m)] = k++;
    Graph h(k);
    for (VertexMask m = subset; m; m &= m - 1) {
        const int u = lowest_vertex(m);
        for (VertexMask nb = g.neighbors(u) & subset; nb; nb &= nb - 1) {
            const int v = lowest_vertex(nb);
            if (u < v) h = h.with_edge(index[u], index[v]);
        }
    }
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int offset = a.order();
    check_capacity(offset + b.order());
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    return make_graph(offset + b.order(), edges);
}

bool is_well_formed(const Graph& g) noexcept {
    const int n = g.order();
    if (n < 0 || n > kMaxVertices) return false;
    for (int v = 0; v < n; ++v) {
        const VertexMask nb = g.neighbors(v);
        if (nb & bit(v)) return false;
        if (nb & ~all_vertices(n)) return false;
        for (VertexMask m = nb; m; m &= m - 1)
            if (!g.adjacent(lowest_vertex(m), v)) return false;
    }
    return true;
}

}  // namespace turan
