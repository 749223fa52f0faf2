#pragma once

// Slow, obviously-correct reference implementations used only by the tests.
// Nothing here calls into the library's search or labeling code.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace oracle {

using turan::Graph;

/// Adjacency matrix as plain vectors.
inline std::vector<std::vector<int>> matrix(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) a[u][v] = g.adjacent(u, v) ? 1 : 0;
    return a;
}

/// Labeled graph number `code` on n vertices: bit i of code is the i-th pair
/// (u < v) in lexicographic order.
inline Graph labeled(int n, std::uint64_t code) {
    std::vector<turan::Edge> edges;
    int i = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++i)
            if ((code >> i) & 1U) edges.emplace_back(u, v);
    return turan::make_graph(n, edges);
}

inline std::uint64_t labeled_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

/// Smallest row-major upper-triangle string over all n! relabelings.
inline std::string brute_canonical(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    do {
        // perm[new] = old
        std::string s;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) s += g.adjacent(perm[a], perm[b]) ? '1' : '0';
        if (first || s < best) best = s;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

/// Number of permutations preserving adjacency.
inline std::uint64_t brute_aut(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Isomorphism classes of n-vertex graphs by Burnside's lemma: the average
/// over all permutations of 2^(number of pair-orbits).
inline std::uint64_t burnside_classes(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long double total = 0;
    std::uint64_t perms = 0;
    do {
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
        int orbits = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (seen[u][v]) continue;
                ++orbits;
                int a = u, b = v;
                while (!seen[std::min(a, b)][std::max(a, b)]) {
                    seen[std::min(a, b)][std::max(a, b)] = true;
                    a = perm[a];
                    b = perm[b];
                }
            }
        total += std::ldexp(1.0L, orbits);
        ++perms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<std::uint64_t>(total / perms + 0.5L);
}

/// Injective edge-preserving maps V(H) -> V(G), by trying every injection.
inline std::uint64_t brute_embeddings(const Graph& h, const Graph& g, bool induced = false) {
    const int k = h.order(), n = g.order();
    if (k > n) return 0;
    std::uint64_t count = 0;
    std::vector<int> image(k);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    const bool ge = g.adjacent(image[a], image[b]);
                    if (h.adjacent(a, b) && !ge) return;
                    if (induced && !h.adjacent(a, b) && ge) return;
                }
            ++count;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            image[i] = v;
            self(self, i + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
    return count;
}

inline std::uint64_t brute_copies(const Graph& h, const Graph& g) { return brute_embeddings(h, g) / brute_aut(h); }

/// True when some k-subset of vertices is a clique.
inline bool has_clique(const Graph& g, int k) {
    const int n = g.order();
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (std::popcount(s) != k) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (((s >> u) & 1U) && ((s >> v) & 1U) && !g.adjacent(u, v)) ok = false;
        if (ok) return true;
    }
    return false;
}

/// Chromatic number by trying every assignment of c colors.
inline int brute_chromatic(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    for (int c = 1; c <= n; ++c) {
        std::vector<int> col(n, 0);
        while (true) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n && ok; ++v)
                    if (g.adjacent(u, v) && col[u] == col[v]) ok = false;
            if (ok) return c;
            int i = 0;
            while (i < n && ++col[i] == c) col[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

/// graph6 writer from the format definition: N(n) = n + 63, then the upper
/// triangle column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), padded
/// to a multiple of six bits, each group + 63.
inline std::string graph6(const Graph& g) {
    const int n = g.order();
    std::string out(1, static_cast<char>(63 + n));
    std::vector<int> bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int x = 0;
        for (int j = 0; j < 6; ++j) x = (x << 1) | bits[i + j];
        out += static_cast<char>(63 + x);
    }
    return out;
}

/// Walks with `edges` edges by dynamic programming over end vertices.
inline std::uint64_t walks(const Graph& g, int edges) {
    const int n = g.order();
    std::vector<std::uint64_t> w(n, 1);
    for (int s = 0; s < edges; ++s) {
        std::vector<std::uint64_t> next(n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (g.adjacent(u, v)) next[u] += w[v];
        w = next;
    }
    std::uint64_t total = 0;
    for (auto x : w) total += x;
    return total;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<turan::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return turan::make_graph(n, edges);
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
