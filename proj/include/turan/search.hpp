#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan/bigint.hpp"
#include "turan/constructions.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr int kMaxExhaustiveOrder = 10;

/// Hereditary predicate used to prune the generation tree. `keep_extension`,
/// when set, is asked instead of `keep` about a graph whose vertex `added`
/// was just attached to a parent that already passed, so it only has to
/// look at structures through that vertex.
struct GraphFilter {
    std::function<bool(const Graph&)> keep;
    std::function<bool(const Graph&, int added)> keep_extension;

    bool accepts(const Graph& g) const { return !keep || keep(g); }
    bool accepts_extension(const Graph& g, int added) const {
        if (keep_extension) return keep_extension(g, added);
        return accepts(g);
    }
};

/// Receives each generated graph (in canonical labelling) and the index of
/// the worker that produced it; called concurrently when jobs > 1.
using GraphVisitor = std::function<void(const Graph&, int worker)>;

/// Generates one representative per isomorphism class of n-vertex graphs
/// accepted by `filter`, by canonical augmentation: a child G + v is kept
/// only when v lies in the Aut-orbit of the vertex labelled last by the
/// canonical labelling of the child, and children of one parent are
/// deduplicated. Returns the number of graphs visited.
/// Throws CapacityError when n > 10.
std::uint64_t enumerate_graphs(int n, const GraphFilter& filter, const GraphVisitor& visit, int jobs = 1);

/// Convenience form collecting the graphs, sorted by graph6 text.
std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter = {}, int jobs = 1);

/// F-freeness filter: cheap necessary conditions first, clique number when F
/// is complete, full subgraph search last.
GraphFilter forbid_subgraph(const Graph& f);

struct SearchOptions {
    int jobs = 1;
    bool allow_degenerate = false;  // permit H containing F (value is then reported, not rejected)
    std::size_t witness_cap = 64;
};

/// Answer to one ex(n, H, F) query.
struct ExtremalRecord {
    int n = 0;
    std::string h_spec;
    std::string f_spec;
    std::uint64_t value = 0;
    std::vector<std::string> witnesses;  // graph6 of canonical argmax graphs, sorted, capped
    std::uint64_t witness_count = 0;     // true number of argmax classes
    int turan_parts = 0;                 // chi(F) - 1 (capped at n for the host)
    std::uint64_t turan_value = 0;       // copies of H in T_{chi(F)-1}(n)
    bool turan_is_f_free = true;
    bool turan_is_extremal = false;
    bool unique_extremal = false;
    std::uint64_t graphs_searched = 0;
    double elapsed = 0.0;                // seconds
};

/// Exact maximum number of copies of H over all n-vertex F-free graphs.
/// Throws std::invalid_argument when F is edgeless or H contains F (unless
/// allowed), CapacityError when n > 10.
ExtremalRecord ex_generalized(int n, const Graph& h, const Graph& f, const SearchOptions& options = {});
ExtremalRecord ex_generalized(int n, std::string_view h_spec, std::string_view f_spec,
                              const SearchOptions& options = {});

struct GoodnessRow {
    int n = 0;
    std::uint64_t value = 0;
    std::uint64_t turan_value = 0;
    bool equal = false;
    bool unique = false;
};

struct GoodnessVerdict {
    std::vector<GoodnessRow> rows;
    /// Smallest n from which value == turan_value holds through the end of
    /// the scanned range; empty when the last row differs.
    std::optional<int> threshold;
};

/// Compares ex(n, H, F) with the copies in T_{chi(F)-1}(n) for n in
/// [n_lo, n_hi]. Never claims anything beyond the range.
GoodnessVerdict check_turan_good(std::string_view h_spec, std::string_view f_spec, int n_lo, int n_hi,
                                 const SearchOptions& options = {});
GoodnessVerdict check_turan_good(const Graph& h, const Graph& f, int n_lo, int n_hi,
                                 const SearchOptions& options = {});

inline constexpr std::uint64_t kMaxCompositionTotal = 40;

struct MultipartiteOptimum {
    std::vector<ClassVector> optimal;  // every nonincreasing maximiser, in descending lexicographic order
    BigInt value;
    BigInt balanced_value;
    bool balanced_is_optimal = false;
};

/// Exact maximum of copies of H over complete r-partite hosts on n vertices,
/// scanning every nonincreasing composition. Throws std::invalid_argument
/// when r < chi(H) or r > n, CapacityError when n > 40.
MultipartiteOptimum optimize_multipartite(const Graph& h, int r, std::uint64_t n);

struct MoveDelta {
    BigInt delta;                      // copies after the move minus copies before
    std::vector<std::uint64_t> after;  // class sizes after the move
    bool emptied_source = false;
};

/// Moves one vertex from part `from` to part `to`. A move that empties the
/// source part is performed and flagged.
MoveDelta vertex_move_delta(const Graph& h, const ClassVector& cv, int from, int to);

struct K0Evidence {
    std::optional<int> k0;  // smallest k with balanced optimal for all k' in [k, k_max]
    /// (k, n) pairs at which the Turán vector was not optimal.
    std::vector<std::pair<int, std::uint64_t>> failures;
};

/// Empirical search for k0(H): numerical evidence over the given probe
/// sizes, never a proof. Throws std::invalid_argument for k_max outside
/// [2, 12], probes above 40, or a probe smaller than k_max - 1.
K0Evidence find_k0(const Graph& h, int k_max, const std::vector<std::uint64_t>& probes);

}  // namespace turan
