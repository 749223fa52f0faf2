#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Part sizes of a complete multipartite graph. Sizes are not capped at 16:
/// counting over these hosts is pure arithmetic.
class ClassVector {
public:
    ClassVector() = default;
    /// Throws std::invalid_argument for an empty list or a zero size.
    explicit ClassVector(std::vector<std::uint64_t> sizes);

    const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }
    std::uint64_t total() const noexcept { return total_; }
    int parts() const noexcept { return static_cast<int>(sizes_.size()); }

    /// Nonincreasing, as-equal-as-possible split of n into r parts.
    static ClassVector balanced(int r, std::uint64_t n);

    std::string to_string() const;  // "(3,2,2)"

    friend bool operator==(const ClassVector&, const ClassVector&) = default;
    friend auto operator<=>(const ClassVector&, const ClassVector&) = default;

private:
    std::vector<std::uint64_t> sizes_;
    std::uint64_t total_ = 0;
};

enum class FamilyKind {
    Path,
    Cycle,
    Clique,
    Star,
    Book,
    Fan,
    MatchingComplement,
    MatchingComplementPlus,
    Turan,
    CompleteMultipartite,
    Graph6Literal,
};

/// Parsed family description. `params` holds the integer parameters (class
/// sizes for CompleteMultipartite, (r, n) for Turan); `literal` the graph6
/// text for Graph6Literal.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Clique;
    std::vector<int> params;
    std::string literal;

    /// Renders back into the DSL; parse_family(to_string()) == *this.
    std::string to_string() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Grammar (one token of lookahead):
///   P<l> | C<l> | K<r> | S<t> | B<k> | F<k> | Mbar<k> | MbarP<k>
///   | T(<r>,<n>) | M(<s1>,...,<sr>) | g6:<literal>
/// Throws ParseError with the byte offset of the first problem; parameters
/// are range-checked here too, so a parsed spec always builds.
FamilySpec parse_family(std::string_view text);

/// Vertex labelling of the builders:
///   P_l    path 0-1-...-(l-1)
///   C_l    that path closed by (l-1, 0)
///   K_r    all pairs
///   S_t    centre 0, leaves 1..t
///   B_k    spine 0-1, pages 2..k+1 each adjacent to both spine vertices
///   F_k    centre 0, triangles {0, 2i-1, 2i} for i = 1..k
///   Mbar_k K_2k minus the matching {2i, 2i+1}
///   MbarP_k  Mbar_k with the pair {0, 1} restored
Graph build(const FamilySpec& spec);
Graph build(std::string_view family_text);

Graph path_graph(int vertices);
Graph cycle_graph(int vertices);
Graph complete_graph(int vertices);
Graph star_graph(int leaves);
Graph book_graph(int pages);
Graph fan_graph(int blades);
Graph matching_complement(int k);
Graph matching_complement_plus(int k);

/// Turán graph T_r(n): the first n mod r classes have ceil(n/r) vertices, the
/// rest floor(n/r); classes take consecutive labels. Requires 1 <= r <= n <= 16.
Graph turan_graph(int r, int n);

/// All cross-class pairs adjacent, classes on consecutive labels.
Graph complete_multipartite(const ClassVector& cv);

/// Adds a vertex-disjoint K_{k-1} (labels n..n+k-2) to H and joins the
/// clique X of H to it by exactly the `pattern` pairs (x, j), where x is a
/// vertex of X and j in [0, k-1) indexes the new clique. Throws
/// std::invalid_argument when X is not a clique or a pair is invalid.
Graph glue_h_prime(const Graph& h, VertexMask clique, int k, const std::vector<std::pair<int, int>>& pattern);

}  // namespace turan
