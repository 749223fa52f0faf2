#include "turan/search.hpp"

#include <algorithm>
#include <chrono>

#include "turan/canonical.hpp"
#include "turan/chromatic.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/graph6.hpp"

namespace turan {

namespace {

/// Per-worker running maximum. Merging is associative and commutative, and
/// the capped witness list always keeps the smallest graph6 strings, so the
/// merged result does not depend on how the work was split.
struct Accumulator {
    std::uint64_t best = 0;
    bool seen = false;
    std::vector<std::string> witnesses;
    std::uint64_t witness_count = 0;
    std::uint64_t searched = 0;

    void offer(std::uint64_t copies, const Graph& g, std::size_t cap) {
        ++searched;
        if (!seen || copies > best) {
            seen = true;
            best = copies;
            witnesses.clear();
            witness_count = 0;
        } else if (copies < best) {
            return;
        }
        ++witness_count;
        std::string text = write_graph6(g);
        witnesses.insert(std::lower_bound(witnesses.begin(), witnesses.end(), text), std::move(text));
        if (witnesses.size() > cap) witnesses.pop_back();
    }

    void merge(Accumulator&& other, std::size_t cap) {
        searched += other.searched;
        if (!other.seen) return;
        if (!seen || other.best > best) {
            other.searched = searched;
            *this = std::move(other);
            return;
        }
        if (other.best < best) return;
        witness_count += other.witness_count;
        std::vector<std::string> merged;
        std::merge(witnesses.begin(), witnesses.end(), other.witnesses.begin(), other.witnesses.end(),
                   std::back_inserter(merged));
        if (merged.size() > cap) merged.resize(cap);
        witnesses = std::move(merged);
    }
};

void check_query(int n, const Graph& h, const Graph& f, const SearchOptions& options) {
    if (n < 1) throw std::invalid_argument("host order must be at least 1");
    if (n > kMaxExhaustiveOrder)
        throw CapacityError("exhaustive search is limited to n <= " + std::to_string(kMaxExhaustiveOrder));
    if (h.order() == 0) throw std::invalid_argument("H needs at least one vertex");
    if (f.size() == 0) throw std::invalid_argument("F needs at least one edge (chi(F) >= 2)");
    if (!options.allow_degenerate && contains_subgraph(f, h))
        throw std::invalid_argument("H contains F: ex(n,H,F) is degenerate (pass the override to compute it anyway)");
}

}  // namespace

ExtremalRecord ex_generalized(int n, const Graph& h, const Graph& f, const SearchOptions& options) {
    check_query(n, h, f, options);
    const auto start = std::chrono::steady_clock::now();

    const std::uint64_t aut = canonical_form(h).aut_count;
    const GraphFilter filter = forbid_subgraph(f);
    const int jobs = std::max(options.jobs, 1);
    std::vector<Accumulator> partial(jobs);
    enumerate_graphs(
        n, filter,
        [&](const Graph& g, int worker) {
            const std::uint64_t copies = count_embeddings(h, g) / aut;
            partial[worker].offer(copies, g, options.witness_cap);
        },
        jobs);
    Accumulator total;
    for (Accumulator& a : partial) total.merge(std::move(a), options.witness_cap);

    ExtremalRecord rec;
    rec.n = n;
    rec.value = total.best;
    rec.witnesses = std::move(total.witnesses);
    rec.witness_count = total.witness_count;
    rec.graphs_searched = total.searched;

    rec.turan_parts = chromatic_number(f) - 1;
    const Graph host = turan_graph(std::min(rec.turan_parts, n), n);
    rec.turan_is_f_free = !contains_subgraph(f, host);
    rec.turan_value = h.order() <= n ? count_subgraph(h, host).copies : 0;
    rec.turan_is_extremal = rec.value == rec.turan_value;
    rec.unique_extremal = rec.witness_count == 1;
    rec.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

ExtremalRecord ex_generalized(int n, std::string_view h_spec, std::string_view f_spec, const SearchOptions& options) {
    ExtremalRecord rec = ex_generalized(n, build(h_spec), build(f_spec), options);
    rec.h_spec = std::string(h_spec);
    rec.f_spec = std::string(f_spec);
    return rec;
}

GoodnessVerdict check_turan_good(const Graph& h, const Graph& f, int n_lo, int n_hi, const SearchOptions& options) {
    if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("need 1 <= n_lo <= n_hi");
    if (n_hi > kMaxExhaustiveOrder)
        throw CapacityError("goodness scans are limited to n <= " + std::to_string(kMaxExhaustiveOrder));
    if (chromatic_number(f) < 2) throw std::invalid_argument("F must have chromatic number at least 2");

    GoodnessVerdict verdict;
    for (int n = n_lo; n <= n_hi; ++n) {
        const ExtremalRecord rec = ex_generalized(n, h, f, options);
        if (!rec.turan_is_f_free)
            throw std::logic_error("Turan graph T_" + std::to_string(rec.turan_parts) + "(" + std::to_string(n) +
                                   ") contains F");
        verdict.rows.push_back({n, rec.value, rec.turan_value, rec.turan_is_extremal, rec.unique_extremal});
    }
    for (auto it = verdict.rows.rbegin(); it != verdict.rows.rend() && it->equal; ++it) verdict.threshold = it->n;
    return verdict;
}

GoodnessVerdict check_turan_good(std::string_view h_spec, std::string_view f_spec, int n_lo, int n_hi,
                                 const SearchOptions& options) {
    return check_turan_good(build(h_spec), build(f_spec), n_lo, n_hi, options);
}

}  // namespace turan
