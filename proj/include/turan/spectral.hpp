#pragma once

#include "turan/bigint.hpp"
#include "turan/graph.hpp"

namespace turan {

struct SpectralEstimate {
    double mu = 0.0;        // largest adjacency eigenvalue
    long iterations = 0;
    double residual = 0.0;  // ||A x - mu x|| / ||x|| at the final iterate
};

inline constexpr double kDefaultSpectralTolerance = 1e-10;
inline constexpr long kSpectralIterationCap = 1'000'000;

/// Number of walks with `edges` edges: 1^T A^edges 1, computed exactly.
BigInt walk_count(const Graph& g, int edges);

/// Power iteration from the all-ones vector. The iteration runs on A + I,
/// whose dominant eigenvalue mu + 1 is strictly separated from -mu + 1, so
/// bipartite graphs converge; mu is read off as the Rayleigh quotient of A.
/// Stops when successive Rayleigh quotients differ by less than `tol`.
/// Throws ConvergenceError past the iteration cap.
SpectralEstimate spectral_radius(const Graph& g, double tol = kDefaultSpectralTolerance);

struct PathBoundCheck {
    BigInt path_copies;   // copies of P_l
    BigInt walks;         // walks with l-1 edges
    double bound = 0.0;   // n * mu^(l-1) / 2
    bool holds = false;   // copies <= walks/2 <= bound (up to relative slack)
};

/// n * mu^(l-1) / 2, the spectral ceiling on the number of P_l copies.
double path_spectral_bound(const Graph& g, int l, double tol = kDefaultSpectralTolerance);

/// Evaluates copies(P_l) <= walks(l-1)/2 <= n mu^(l-1)/2 * (1 + slack).
PathBoundCheck check_path_bound(const Graph& g, int l, double slack = 1e-6);

}  // namespace turan
