#include "turan/search.hpp"

#include <algorithm>

#include "turan/canonical.hpp"
#include "turan/chromatic.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"

namespace turan {

namespace {

// Nonincreasing compositions of `remaining` into `parts` positive sizes, each
// at most `cap`, visited in descending lexicographic order.
template <typename Visit>
void compositions(std::uint64_t remaining, int parts, std::uint64_t cap, std::vector<std::uint64_t>& prefix,
                  Visit& visit) {
    if (parts == 0) {
        if (remaining == 0) visit(prefix);
        return;
    }
    const std::uint64_t hi = std::min(cap, remaining - (parts - 1));
    const std::uint64_t lo = (remaining + parts - 1) / parts;  // largest part is at least the average
    for (std::uint64_t s = hi; s >= lo && s >= 1; --s) {
        prefix.push_back(s);
        compositions(remaining - s, parts - 1, s, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

MultipartiteOptimum optimize_multipartite(const Graph& h, int r, std::uint64_t n) {
    if (n > kMaxCompositionTotal)
        throw CapacityError("composition scans are limited to n <= " + std::to_string(kMaxCompositionTotal));
    if (r < 1 || static_cast<std::uint64_t>(r) > n) throw std::invalid_argument("need 1 <= r <= n parts");
    if (r < chromatic_number(h))
        throw std::invalid_argument("r < chi(H): every complete r-partite host has zero copies");

    MultipartiteOptimum best;
    bool first = true;
    std::vector<std::uint64_t> prefix;
    auto visit = [&](const std::vector<std::uint64_t>& sizes) {
        const BigInt value = multipartite_embeddings(h, sizes);
        if (first || value > best.value) {
            best.value = value;
            best.optimal.clear();
            first = false;
        }
        if (value == best.value) best.optimal.emplace_back(sizes);
    };
    compositions(n, r, n, prefix, visit);

    const std::uint64_t aut = canonical_form(h).aut_count;
    best.value /= aut;
    const ClassVector balanced = ClassVector::balanced(r, n);
    best.balanced_value = multipartite_count(h, balanced);
    best.balanced_is_optimal = best.balanced_value == best.value;
    return best;
}

MoveDelta vertex_move_delta(const Graph& h, const ClassVector& cv, int from, int to) {
    if (from < 0 || from >= cv.parts() || to < 0 || to >= cv.parts() || from == to)
        throw std::invalid_argument("invalid part indices for a vertex move");
    MoveDelta move;
    move.after = cv.sizes();
    --move.after[from];
    ++move.after[to];
    move.emptied_source = move.after[from] == 0;
    const BigInt before = multipartite_embeddings(h, cv.sizes());
    const BigInt after = multipartite_embeddings(h, move.after);
    const std::uint64_t aut = canonical_form(h).aut_count;
    move.delta = after / aut - before / aut;
    return move;
}

K0Evidence find_k0(const Graph& h, int k_max, const std::vector<std::uint64_t>& probes) {
    if (k_max < 2 || k_max > 12) throw std::invalid_argument("k_max must be in [2, 12]");
    for (std::uint64_t n : probes) {
        if (n > kMaxCompositionTotal) throw std::invalid_argument("probe sizes are limited to 40");
        if (n < static_cast<std::uint64_t>(k_max - 1))
            throw std::invalid_argument("probe " + std::to_string(n) + " is smaller than k_max - 1 parts");
    }
    const int chi = chromatic_number(h);
    K0Evidence evidence;
    bool suffix_good = true;
    for (int k = k_max; k >= 2; --k) {
        const int r = k - 1;
        bool good = true;
        for (std::uint64_t n : probes) {
            const bool balanced = r >= chi && optimize_multipartite(h, r, n).balanced_is_optimal;
            if (!balanced) {
                good = false;
                evidence.failures.emplace_back(k, n);
            }
        }
        suffix_good = suffix_good && good;
        if (suffix_good) evidence.k0 = k;
    }
    std::sort(evidence.failures.begin(), evidence.failures.end());
    return evidence;
}

}  // namespace turan
