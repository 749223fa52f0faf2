#include "turan/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace turan {

namespace {

using Row = std::uint16_t;
using Perm = std::array<int, kMaxVertices>;

struct Partition {
    std::array<VertexMask, kMaxVertices> cells{};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

/// Splits cells until every cell has a uniform neighbor count into every
/// splitter taken from the queue. Fragments are kept in ascending count order
/// at the position of the cell they came from, so the result depends only on
/// the structure, never on vertex names.
void refine(const Graph& g, Partition& p, std::array<VertexMask, 64>& queue, int tail) {
    const int n = g.order();
    int head = 0;
    while (head < tail && !p.discrete(n)) {
        const VertexMask splitter = queue[head++];
        for (int t = 0; t < p.count; ++t) {
            const VertexMask cell = p.cells[t];
            if (popcount(cell) == 1) continue;

            std::array<VertexMask, kMaxVertices + 1> by_count{};
            int lo = kMaxVertices + 1;
            int hi = -1;
            for (VertexMask m = cell; m; m &= m - 1) {
                const int v = lowest_vertex(m);
                const int c = popcount(g.neighbors(v) & splitter);
                by_count[c] |= bit(v);
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            if (lo == hi) continue;

            std::array<VertexMask, kMaxVertices> fragments{};
            int pieces = 0;
            for (int c = lo; c <= hi; ++c)
                if (by_count[c]) fragments[pieces++] = by_count[c];

            for (int s = p.count - 1; s > t; --s) p.cells[s + pieces - 1] = p.cells[s];
            for (int i = 0; i < pieces; ++i) {
                p.cells[t + i] = fragments[i];
                assert(tail < static_cast<int>(queue.size()));
                queue[tail++] = fragments[i];
            }
            p.count += pieces - 1;
            t += pieces - 1;
        }
    }
}

Partition individualize(const Graph& g, const Partition& p, int target, int v) {
    Partition child;
    child.count = p.count + 1;
    for (int i = 0; i < target; ++i) child.cells[i] = p.cells[i];
    child.cells[target] = bit(v);
    child.cells[target + 1] = p.cells[target] & ~bit(v);
    for (int i = target + 1; i < p.count; ++i) child.cells[i + 1] = p.cells[i];
    std::array<VertexMask, 64> queue{};
    queue[0] = bit(v);
    refine(g, child, queue, 1);
    return child;
}

struct Leaf {
    Perm lab{};  // lab[position] = vertex
    std::array<Row, kMaxVertices> rows{};
};

Leaf make_leaf(const Graph& g, const Partition& p) {
    const int n = g.order();
    Leaf leaf;
    Perm pos{};
    for (int i = 0; i < n; ++i) {
        leaf.lab[i] = lowest_vertex(p.cells[i]);
        pos[leaf.lab[i]] = i;
    }
    // Bit (15 - j) marks position j, so comparing rows as integers orders the
    // relabeled graphs by their row-major upper-triangle bit strings.
    for (int i = 0; i < n; ++i) {
        Row r = 0;
        for (VertexMask m = g.neighbors(leaf.lab[i]); m; m &= m - 1)
            r |= static_cast<Row>(1U << (kMaxVertices - 1 - pos[lowest_vertex(m)]));
        leaf.rows[i] = r;
    }
    return leaf;
}

int compare_rows(const Leaf& a, const Leaf& b, int n) {
    for (int i = 0; i < n; ++i)
        if (a.rows[i] != b.rows[i]) return a.rows[i] < b.rows[i] ? -1 : 1;
    return 0;
}

class UnionFind {
public:
    explicit UnionFind(int n) { std::iota(parent_.begin(), parent_.begin() + n, 0); }

    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::array<int, kMaxVertices> parent_{};
};

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run() {
        CanonicalLabeling out;
        if (n_ == 0) {
            out.graph = g_;
            return out;
        }
        Partition root;
        root.count = 1;
        root.cells[0] = g_.vertices();
        std::array<VertexMask, 64> queue{};
        queue[0] = root.cells[0];
        refine(g_, root, queue, 1);
        search(root, 0, true);

        Perm position{};
        for (int i = 0; i < n_; ++i) position[best_.lab[i]] = i;
        out.graph = g_.relabeled(std::span<const int>(position.data(), n_));
        out.label = position;
        out.aut_count = aut_;
        UnionFind uf(n_);
        for (const Perm& gen : gens_)
            for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
        for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);
        out.generators = std::move(gens_);
        return out;
    }

private:
    // Orbits of the group generated by the known automorphisms that fix the
    // first `depth` vertices of path_ pointwise.
    UnionFind stabilizer_orbits(int depth) const {
        UnionFind uf(n_);
        for (const Perm& gen : gens_) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i) fixes = gen[path_[i]] == path_[i];
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
        }
        return uf;
    }

    void record_automorphism(const Leaf& from, const Leaf& to) {
        Perm gen{};
        for (int i = 0; i < n_; ++i) gen[from.lab[i]] = to.lab[i];
        gens_.push_back(gen);
    }

    // Returns true when a leaf equivalent to the first leaf was found, which
    // makes the rest of the subtree redundant up to the nearest node on the
    // first path.
    bool search(const Partition& p, int depth, bool on_first_path) {
        if (p.discrete(n_)) {
            Leaf leaf = make_leaf(g_, p);
            if (!have_first_) {
                first_ = best_ = leaf;
                have_first_ = true;
                return false;
            }
            if (compare_rows(leaf, first_, n_) == 0) {
                record_automorphism(first_, leaf);
                return true;
            }
            const int c = compare_rows(leaf, best_, n_);
            if (c < 0)
                best_ = leaf;
            else if (c == 0)
                record_automorphism(best_, leaf);
            return false;
        }

        int target = -1;
        int target_size = kMaxVertices + 1;
        for (int i = 0; i < p.count; ++i) {
            const int s = popcount(p.cells[i]);
            if (s > 1 && s < target_size) {
                target = i;
                target_size = s;
            }
        }
        const VertexMask cell = p.cells[target];
        const int first_child = lowest_vertex(cell);

        VertexMask explored = 0;
        for (VertexMask m = cell; m; m &= m - 1) {
            const int v = lowest_vertex(m);
            if (explored) {
                UnionFind uf = stabilizer_orbits(depth);
                bool equivalent = false;
                for (VertexMask e = explored; e && !equivalent; e &= e - 1)
                    equivalent = uf.find(lowest_vertex(e)) == uf.find(v);
                if (equivalent) continue;
            }
            explored |= bit(v);
            path_[depth] = v;
            const bool abort = search(individualize(g_, p, target, v), depth + 1, on_first_path && v == first_child);
            if (abort && !on_first_path) return true;
        }

        if (on_first_path) {
            path_[depth] = first_child;
            UnionFind uf = stabilizer_orbits(depth);
            std::uint64_t orbit_size = 0;
            for (VertexMask m = cell; m; m &= m - 1)
                if (uf.find(lowest_vertex(m)) == uf.find(first_child)) ++orbit_size;
            aut_ *= orbit_size;
        }
        return false;
    }

    const Graph& g_;
    const int n_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<Perm> gens_;
    Perm path_{};
    std::uint64_t aut_ = 1;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

std::vector<std::uint8_t> upper_triangle_bytes(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint8_t> bytes(1 + (n * (n - 1) / 2 + 7) / 8, 0);
    bytes[0] = static_cast<std::uint8_t>(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (g.adjacent(i, j)) bytes[1 + k / 8] |= static_cast<std::uint8_t>(0x80U >> (k % 8));
    return bytes;
}

CanonicalForm canonical_form(const Graph& g) {
    CanonicalLabeling lab = canonical_labeling(g);
    return CanonicalForm{upper_triangle_bytes(lab.graph), lab.aut_count};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_labeling(a).graph == canonical_labeling(b).graph;
}

}  // namespace turan
