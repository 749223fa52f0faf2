#include "turan/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "turan/canonical.hpp"
#include "turan/chromatic.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/graph6.hpp"

namespace turan {

namespace {

/// Accepted children of `parent`, each in canonical labelling.
std::vector<Graph> children(const Graph& parent, const GraphFilter& filter) {
    const int m = parent.order();
    std::vector<Graph> kept;
    for (VertexMask nbrs = 0; nbrs <= all_vertices(m); ++nbrs) {
        const Graph child = parent.with_vertex(nbrs);
        if (!filter.accepts_extension(child, m)) continue;
        const CanonicalLabeling lab = canonical_labeling(child);
        int last = 0;
        while (lab.label[last] != m) ++last;
        if (lab.orbit[m] != lab.orbit[last]) continue;
        if (std::find(kept.begin(), kept.end(), lab.graph) == kept.end()) kept.push_back(lab.graph);
    }
    return kept;
}

void descend(const Graph& g, int n, const GraphFilter& filter, const GraphVisitor& visit, int worker,
             std::uint64_t& visited) {
    if (g.order() == n) {
        visit(g, worker);
        ++visited;
        return;
    }
    for (const Graph& child : children(g, filter)) descend(child, n, filter, visit, worker, visited);
}

}  // namespace

std::uint64_t enumerate_graphs(int n, const GraphFilter& filter, const GraphVisitor& visit, int jobs) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > kMaxExhaustiveOrder)
        throw CapacityError("exhaustive enumeration is limited to " + std::to_string(kMaxExhaustiveOrder) +
                            " vertices");
    const Graph root(0);
    if (!filter.accepts(root)) return 0;
    jobs = std::max(jobs, 1);

    std::uint64_t visited = 0;
    if (jobs == 1) {
        descend(root, n, filter, visit, 0, visited);
        return visited;
    }

    // Expand breadth-first until there are enough independent subtrees.
    std::vector<Graph> frontier{root};
    while (!frontier.empty() && frontier.front().order() < n && frontier.size() < 16 * static_cast<std::size_t>(jobs)) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            std::vector<Graph> kids = children(g, filter);
            next.insert(next.end(), kids.begin(), kids.end());
        }
        frontier = std::move(next);
    }

    std::atomic<std::size_t> cursor{0};
    std::atomic<std::uint64_t> total{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int worker) {
        std::uint64_t local = 0;
        try {
            for (std::size_t i = cursor++; i < frontier.size(); i = cursor++)
                descend(frontier[i], n, filter, visit, worker, local);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            cursor = frontier.size();
        }
        total += local;
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return total;
}

std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter, int jobs) {
    std::vector<Graph> out;
    std::mutex mutex;
    enumerate_graphs(
        n, filter,
        [&](const Graph& g, int) {
            std::lock_guard lock(mutex);
            out.push_back(g);
        },
        jobs);
    std::sort(out.begin(), out.end(),
              [](const Graph& a, const Graph& b) { return write_graph6(a) < write_graph6(b); });
    return out;
}

GraphFilter forbid_subgraph(const Graph& f) {
    if (f.order() == 0) throw std::invalid_argument("forbidden graph needs at least one vertex");
    const int r = f.order();
    if (f.size() == r * (r - 1) / 2) {
        GraphFilter filter;
        filter.keep = [r](const Graph& g) { return clique_number(g) < r; };
        filter.keep_extension = [r](const Graph& g, int v) {
            return clique_number(induced_subgraph(g, g.neighbors(v))) < r - 1;
        };
        return filter;
    }
    // One pattern vertex per Aut(F)-orbit is enough to pin onto the new vertex.
    std::vector<int> representatives;
    const CanonicalLabeling lab = canonical_labeling(f);
    for (int a = 0; a < f.order(); ++a)
        if (lab.orbit[a] == a) representatives.push_back(a);
    const int f_edges = f.size();
    GraphFilter filter;
    filter.keep = [f](const Graph& g) { return !contains_subgraph(f, g); };
    filter.keep_extension = [f, f_edges, representatives](const Graph& g, int v) {
        if (g.size() < f_edges) return true;
        for (int a : representatives)
            if (contains_subgraph_pinned(f, g, a, v)) return false;
        return true;
    };
    return filter;
}

}  // namespace turan
