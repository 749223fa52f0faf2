#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace turan {

/// Vertex set as a bit mask; bit v stands for vertex v.
using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 16;

inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest_vertex(VertexMask m) { return std::countr_zero(m); }
inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline VertexMask all_vertices(int n) { return n >= 32 ? ~VertexMask{0} : (bit(n) - 1); }

struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    /// Stores the endpoints in ascending order.
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 16 vertices stored as neighbor masks.
///
/// A Graph is a value: the mutators return modified copies, so instances can
/// be shared freely between threads.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices. Throws CapacityError when n > 16.
    explicit Graph(int n);

    int order() const noexcept { return n_; }
    int size() const noexcept;  // number of edges

    bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
    VertexMask neighbors(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return popcount(adj_[v]); }
    int max_degree() const noexcept;
    VertexMask vertices() const noexcept { return all_vertices(n_); }

    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Appends one vertex adjacent to exactly `nbrs`.
    Graph with_vertex(VertexMask nbrs) const;
    /// Applies `perm` (old label -> new label).
    Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept;

private:
    friend Graph make_graph(int n, std::span<const Edge> edges);
    void set_edge(int u, int v);
    void clear_edge(int u, int v);

    int n_ = 0;
    std::array<VertexMask, kMaxVertices> adj_{};
};

/// Validating constructor: rejects loops, duplicates, out-of-range endpoints
/// and n > 16.
Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);

/// Subgraph induced by `subset`, vertices relabeled in ascending order.
Graph induced_subgraph(const Graph& g, VertexMask subset);

/// Vertex-disjoint union; the vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Checks the symmetry / no-loop / high-bit invariants.
bool is_well_formed(const Graph& g) noexcept;

}  // namespace turan
