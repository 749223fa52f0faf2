#include "turan/counting.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "turan/canonical.hpp"

namespace turan {

namespace {

/// Backtracking embedder. Pattern vertices are placed in an order where each
/// next vertex has as many already-placed neighbors as possible, so candidate
/// sets shrink quickly through neighbor-mask intersection.
class Embedder {
public:
    Embedder(const Graph& h, const Graph& g, bool induced, std::span<const std::pair<int, int>> pins = {})
        : h_(h), g_(g), k_(h.order()), induced_(induced) {
        pinned_.fill(-1);
        std::array<bool, kMaxVertices> placed{};
        int pos = 0;
        for (const auto& [hv, gv] : pins) {
            order_[pos] = hv;
            pinned_[pos] = gv;
            placed[hv] = true;
            ++pos;
        }
        for (; pos < k_; ++pos) {
            int best = -1;
            int best_back = -1;
            for (int v = 0; v < k_; ++v) {
                if (placed[v]) continue;
                int back = 0;
                for (int j = 0; j < pos; ++j) back += h.adjacent(v, order_[j]);
                if (back > best_back || (back == best_back && h.degree(v) > h.degree(best))) {
                    best = v;
                    best_back = back;
                }
            }
            order_[pos] = best;
            placed[best] = true;
        }
        for (int i = 0; i < k_; ++i) {
            for (int j = 0; j < i; ++j) {
                if (h.adjacent(order_[i], order_[j]))
                    back_adj_[i] |= bit(j);
                else
                    back_non_[i] |= bit(j);
            }
        }
        for (int d = 0; d <= kMaxVertices; ++d) {
            VertexMask m = 0;
            for (int x = 0; x < g.order(); ++x)
                if (g.degree(x) >= d) m |= bit(x);
            degree_ok_[d] = m;
        }
    }

    std::uint64_t count() {
        if (k_ > g_.order()) return 0;
        stop_at_first_ = false;
        return extend(0, 0);
    }

    bool exists() {
        if (k_ > g_.order()) return false;
        stop_at_first_ = true;
        return extend(0, 0) > 0;
    }

private:
    std::uint64_t extend(int pos, VertexMask used) {
        if (pos == k_) return 1;
        VertexMask cand = g_.vertices() & ~used & degree_ok_[h_.degree(order_[pos])];
        for (VertexMask m = back_adj_[pos]; m; m &= m - 1) cand &= g_.neighbors(image_[lowest_vertex(m)]);
        if (induced_)
            for (VertexMask m = back_non_[pos]; m; m &= m - 1) cand &= ~g_.neighbors(image_[lowest_vertex(m)]);
        if (pinned_[pos] >= 0) cand &= bit(pinned_[pos]);
        if (pos + 1 == k_) return static_cast<std::uint64_t>(popcount(cand));

        std::uint64_t total = 0;
        for (; cand; cand &= cand - 1) {
            const int x = lowest_vertex(cand);
            image_[pos] = x;
            total += extend(pos + 1, used | bit(x));
            if (stop_at_first_ && total) return total;
        }
        return total;
    }

    const Graph& h_;
    const Graph& g_;
    const int k_;
    const bool induced_;
    bool stop_at_first_ = false;
    std::array<int, kMaxVertices> order_{};
    std::array<int, kMaxVertices> pinned_{};
    std::array<VertexMask, kMaxVertices> back_adj_{};
    std::array<VertexMask, kMaxVertices> back_non_{};
    std::array<VertexMask, kMaxVertices + 1> degree_ok_{};
    std::array<int, kMaxVertices> image_{};
};

void require_pattern(const Graph& h) {
    if (h.order() == 0) throw std::invalid_argument("pattern graph needs at least one vertex");
}

std::uint64_t exact_quotient(std::uint64_t embeddings, std::uint64_t aut) {
    if (embeddings % aut != 0)
        throw std::logic_error("embedding count " + std::to_string(embeddings) + " not divisible by |Aut(H)| = " +
                               std::to_string(aut));
    return embeddings / aut;
}

}  // namespace

std::uint64_t count_embeddings(const Graph& h, const Graph& g) {
    require_pattern(h);
    return Embedder(h, g, false).count();
}

CountReport count_subgraph(const Graph& h, const Graph& g) {
    CountReport r;
    r.embeddings = count_embeddings(h, g);
    r.aut = canonical_form(h).aut_count;
    r.copies = exact_quotient(r.embeddings, r.aut);
    return r;
}

std::uint64_t count_induced(const Graph& h, const Graph& g) {
    require_pattern(h);
    return exact_quotient(Embedder(h, g, true).count(), canonical_form(h).aut_count);
}

bool contains_subgraph(const Graph& h, const Graph& g) {
    require_pattern(h);
    if (h.order() > g.order() || h.size() > g.size() || h.max_degree() > g.max_degree()) return false;
    return Embedder(h, g, false).exists();
}

bool contains_subgraph_through(const Graph& h, const Graph& g, int v) {
    require_pattern(h);
    if (h.order() > g.order() || h.size() > g.size() || h.max_degree() > g.max_degree()) return false;
    const CanonicalLabeling lab = canonical_labeling(h);
    for (int a = 0; a < h.order(); ++a) {
        if (lab.orbit[a] != a) continue;  // one pattern vertex per Aut(H)-orbit suffices
        if (contains_subgraph_pinned(h, g, a, v)) return true;
    }
    return false;
}

bool contains_subgraph_pinned(const Graph& h, const Graph& g, int pattern_vertex, int host_vertex) {
    require_pattern(h);
    if (h.order() > g.order() || h.degree(pattern_vertex) > g.degree(host_vertex)) return false;
    const std::pair<int, int> pin{pattern_vertex, host_vertex};
    return Embedder(h, g, false, std::span(&pin, 1)).exists();
}

std::uint64_t copies_containing_edge(const Graph& h, const Graph& g, Edge e) {
    require_pattern(h);
    if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v))
        throw std::invalid_argument("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge of G");
    // Each embedding whose image contains e maps exactly one oriented pattern
    // edge onto (e.u, e.v).
    std::uint64_t embeddings = 0;
    for (const Edge& f : h.edges()) {
        const std::array<std::pair<int, int>, 2> forward{{{f.u, e.u}, {f.v, e.v}}};
        const std::array<std::pair<int, int>, 2> backward{{{f.u, e.v}, {f.v, e.u}}};
        embeddings += Embedder(h, g, false, forward).count();
        embeddings += Embedder(h, g, false, backward).count();
    }
    return exact_quotient(embeddings, canonical_form(h).aut_count);
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (n < i + 1) return 0;
        r *= n - i;
    }
    return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt multipartite_embeddings(const Graph& h, std::span<const std::uint64_t> sizes) {
    require_pattern(h);
    const int k = h.order();
    const VertexMask full = h.vertices();
    std::vector<bool> independent(std::size_t{1} << k, false);
    for (VertexMask t = 0; t <= full; ++t) {
        bool ok = true;
        for (VertexMask m = t; m && ok; m &= m - 1) ok = (h.neighbors(lowest_vertex(m)) & t) == 0;
        independent[t] = ok;
    }

    // dp[S]: weighted number of ways to place the pattern vertices S into the
    // parts processed so far, each part receiving an independent set.
    std::vector<BigInt> dp(std::size_t{1} << k);
    dp[0] = 1;
    for (std::uint64_t size : sizes) {
        std::vector<BigInt> ff(k + 1);
        for (int t = 0; t <= k; ++t) ff[t] = falling_factorial(size, t);
        std::vector<BigInt> next = dp;
        for (VertexMask s = 0; s <= full; ++s) {
            if (dp[s] == 0) continue;
            const VertexMask rest = full & ~s;
            for (VertexMask t = rest; t; t = (t - 1) & rest) {
                if (!independent[t]) continue;
                const BigInt& w = ff[popcount(t)];
                if (w != 0) next[s | t] += dp[s] * w;
            }
        }
        dp = std::move(next);
    }
    return dp[full];
}

BigInt multipartite_count(const Graph& h, const ClassVector& cv) {
    const BigInt emb = multipartite_embeddings(h, cv.sizes());
    const std::uint64_t aut = canonical_form(h).aut_count;
    if (emb % aut != 0) throw std::logic_error("multipartite embedding count not divisible by |Aut(H)|");
    return emb / aut;
}

namespace {

void check_clique_query(int r, int k) {
    if (k < 2) throw std::invalid_argument("forbidden clique K_k needs k >= 2");
    if (r < 1 || r >= k) throw std::invalid_argument("K_r copies in T_{k-1}(n) need 1 <= r < k");
}

}  // namespace

BigInt turan_clique_bound(int r, int k, std::uint64_t n) {
    check_clique_query(r, k);
    const std::uint64_t parts = static_cast<std::uint64_t>(k - 1);
    const std::uint64_t ceil_size = (n + parts - 1) / parts;
    BigInt power = 1;
    for (int i = 0; i < r; ++i) power *= ceil_size;
    return binomial(parts, static_cast<std::uint64_t>(r)) * power;
}

BigInt turan_clique_count(int r, int k, std::uint64_t n) {
    check_clique_query(r, k);
    const std::uint64_t parts = static_cast<std::uint64_t>(k - 1);
    // e[j]: sum over j-subsets of the classes seen so far of the size product.
    std::vector<BigInt> e(r + 1);
    e[0] = 1;
    for (std::uint64_t i = 0; i < parts; ++i) {
        const std::uint64_t size = n / parts + (i < n % parts ? 1 : 0);
        for (int j = r; j >= 1; --j) e[j] += e[j - 1] * size;
    }
    if (e[r] > turan_clique_bound(r, k, n)) throw std::logic_error("Turan clique count exceeds its closed-form bound");
    return e[r];
}

BigInt turan_p4_count(std::uint64_t n) {
    if (n < 4) return 0;
    const BigInt edges = BigInt(n) * n / 4;
    return edges * (n / 2 - 1) * ((n + 1) / 2 - 1);
}

BigInt turan_c4_count(std::uint64_t n) {
    if (n < 4) return 0;
    const BigInt edges = BigInt(n) * n / 4;
    const BigInt inner = BigInt(n - 2) * (n - 2) / 4;
    return edges * inner / 4;
}

std::int64_t pair_count_slack(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("pair count slack needs at least three vertices");
    const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    const Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto pairs = static_cast<std::int64_t>(g.size()) * (g.order() - 2);
    const auto induced_p3 = static_cast<std::int64_t>(count_induced(p3, g));
    const auto triangles = static_cast<std::int64_t>(count_subgraph(k3, g).copies);
    return pairs - 2 * induced_p3 - 3 * triangles;
}

int edges_in_triangles(const Graph& g) {
    int count = 0;
    for (const Edge& e : g.edges())
        if (g.neighbors(e.u) & g.neighbors(e.v)) ++count;
    return count;
}

}  // namespace turan
