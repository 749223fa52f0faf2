#include "turan/spectral.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"

namespace turan {

BigInt walk_count(const Graph& g, int edges) {
    if (edges < 0) throw std::invalid_argument("walk length must be nonnegative");
    const int n = g.order();
    std::array<BigInt, kMaxVertices> w;
    for (int v = 0; v < n; ++v) w[v] = 1;
    for (int step = 0; step < edges; ++step) {
        std::array<BigInt, kMaxVertices> next;
        for (int v = 0; v < n; ++v) {
            BigInt s = 0;
            for (VertexMask m = g.neighbors(v); m; m &= m - 1) s += w[lowest_vertex(m)];
            next[v] = std::move(s);
        }
        w = std::move(next);
    }
    BigInt total = 0;
    for (int v = 0; v < n; ++v) total += w[v];
    return total;
}

namespace {

using Vec = std::array<double, kMaxVertices>;

Vec apply_adjacency(const Graph& g, const Vec& x) {
    Vec y{};
    for (int v = 0; v < g.order(); ++v)
        for (VertexMask m = g.neighbors(v); m; m &= m - 1) y[v] += x[lowest_vertex(m)];
    return y;
}

double dot(const Vec& a, const Vec& b, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

SpectralEstimate spectral_radius(const Graph& g, double tol) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("spectral radius of the empty graph is undefined");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    Vec x{};
    for (int i = 0; i < n; ++i) x[i] = 1.0 / std::sqrt(static_cast<double>(n));
    Vec ax = apply_adjacency(g, x);
    double rayleigh = dot(x, ax, n);

    for (long it = 1; it <= kSpectralIterationCap; ++it) {
        Vec next{};
        for (int i = 0; i < n; ++i) next[i] = ax[i] + x[i];
        const double norm = std::sqrt(dot(next, next, n));
        for (int i = 0; i < n; ++i) next[i] /= norm;
        x = next;
        ax = apply_adjacency(g, x);
        const double updated = dot(x, ax, n);
        const bool converged = std::abs(updated - rayleigh) < tol;
        rayleigh = updated;
        if (converged) {
            double r2 = 0.0;
            for (int i = 0; i < n; ++i) r2 += (ax[i] - rayleigh * x[i]) * (ax[i] - rayleigh * x[i]);
            return SpectralEstimate{rayleigh, it, std::sqrt(r2)};
        }
    }
    throw ConvergenceError("power iteration did not converge within " + std::to_string(kSpectralIterationCap) +
                           " iterations");
}

double path_spectral_bound(const Graph& g, int l, double tol) {
    if (l < 3) throw std::invalid_argument("path bound needs l >= 3");
    if (g.order() == 0) return 0.0;
    const double mu = spectral_radius(g, tol).mu;
    return g.order() * std::pow(mu, l - 1) / 2.0;
}

PathBoundCheck check_path_bound(const Graph& g, int l, double slack) {
    if (l < 3) throw std::invalid_argument("path bound needs l >= 3");
    PathBoundCheck check;
    check.path_copies = l <= g.order() ? BigInt(count_subgraph(path_graph(l), g).copies) : BigInt(0);
    check.walks = walk_count(g, l - 1);
    check.bound = path_spectral_bound(g, l);
    const double half_walks = check.walks.convert_to<double>() / 2.0;
    check.holds = 2 * check.path_copies <= check.walks && half_walks <= check.bound * (1.0 + slack);
    return check;
}

}  // namespace turan
