#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Isomorphism-invariant fingerprint of a graph.
///
/// `bytes` holds the vertex count followed by the upper triangle (row-major,
/// most significant bit first) of the canonically relabeled graph, so two
/// graphs have equal bytes exactly when they are isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    std::uint64_t aut_count = 1;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes <=> b.bytes; }
};

/// Everything the canonical labeling search learns about a graph.
struct CanonicalLabeling {
    Graph graph;                              // the canonical representative
    std::array<int, kMaxVertices> label{};    // label[v]: canonical position of vertex v
    std::array<int, kMaxVertices> orbit{};    // orbit[v]: smallest vertex in v's Aut(G)-orbit
    std::uint64_t aut_count = 1;
    std::vector<std::array<int, kMaxVertices>> generators;  // automorphisms found during the search
};

/// Individualization-refinement search: equitable refinement of the ordered
/// partition, then backtracking over target cells keeping the relabeling with
/// the lexicographically smallest upper-triangle bit string. Automorphisms
/// discovered along the way prune equivalent branches and yield |Aut(G)| via
/// orbit sizes along the first path.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Upper-triangle encoding used inside CanonicalForm, for any labeled graph.
std::vector<std::uint8_t> upper_triangle_bytes(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace turan
