#pragma once

#include <cstdint>
#include <span>

#include "turan/bigint.hpp"
#include "turan/constructions.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Copies of H in G. A copy is an unlabeled, not necessarily induced
/// subgraph; `embeddings` counts injective edge-preserving maps and
/// embeddings == copies * aut always holds.
struct CountReport {
    std::uint64_t copies = 0;
    std::uint64_t embeddings = 0;
    std::uint64_t aut = 1;
};

/// Throws std::invalid_argument when H has no vertices.
CountReport count_subgraph(const Graph& h, const Graph& g);

/// Injective edge-preserving maps V(H) -> V(G).
std::uint64_t count_embeddings(const Graph& h, const Graph& g);

/// Copies of H in G that keep the non-edges of H as well.
std::uint64_t count_induced(const Graph& h, const Graph& g);

bool contains_subgraph(const Graph& h, const Graph& g);

/// True when some copy of H in G uses vertex `v`. Given that G - v is
/// H-free this decides whether G is H-free, which is what the extension step
/// of the enumerator needs.
bool contains_subgraph_through(const Graph& h, const Graph& g, int v);

/// True when some embedding of H into G maps `pattern_vertex` to `host_vertex`.
bool contains_subgraph_pinned(const Graph& h, const Graph& g, int pattern_vertex, int host_vertex);

/// Copies of H whose edge set contains e. Throws std::invalid_argument when e
/// is not an edge of G.
std::uint64_t copies_containing_edge(const Graph& h, const Graph& g, Edge e);

/// Embeddings of H into the complete multipartite graph with the given part
/// sizes: the sum over proper part-assignments c of prod_i (size_i)_{|c^-1(i)|}
/// (falling factorials). Parts of size zero are allowed.
BigInt multipartite_embeddings(const Graph& h, std::span<const std::uint64_t> sizes);

/// Copies of H in complete_multipartite(cv), exact for any class sizes.
BigInt multipartite_count(const Graph& h, const ClassVector& cv);

/// Copies of K_r in T_{k-1}(n): the elementary symmetric polynomial of degree
/// r in the class sizes. Requires 1 <= r < k.
BigInt turan_clique_count(int r, int k, std::uint64_t n);

/// Upper bound C(k-1, r) * ceil(n/(k-1))^r on the same quantity.
BigInt turan_clique_bound(int r, int k, std::uint64_t n);

/// Copies of P_4 in T_2(n): floor(n^2/4) * floor(n/2-1) * ceil(n/2-1); 0 for n < 4.
BigInt turan_p4_count(std::uint64_t n);

/// Copies of C_4 in T_2(n): floor(n^2/4) * floor((n-2)^2/4) / 4; 0 for n < 4.
BigInt turan_c4_count(std::uint64_t n);

/// |E(G)|(n-2) - 2 * (induced P_3 copies) - 3 * (triangles). Every vertex
/// triple spans at most one triangle or one induced P_3, so the slack is
/// never negative; it vanishes on complete multipartite graphs. Requires n >= 3.
std::int64_t pair_count_slack(const Graph& g);

/// Number of edges lying in at least one triangle.
int edges_in_triangles(const Graph& g);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);

}  // namespace turan
