#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/search.hpp"
#include "turan/spectral.hpp"

using namespace turan;

namespace {

double eigen_mu(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) a(u, v) = g.adjacent(u, v) ? 1.0 : 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

}  // namespace

TEST_CASE("walk counts") {
    CHECK(walk_count(cycle_graph(4), 2) == 16);
    CHECK(walk_count(complete_graph(3), 1) == 6);
    CHECK(walk_count(fan_graph(3), 0) == 7);
    // K16 walks with 12 edges: 16 * 15^12, past 64 bits
    CHECK(walk_count(complete_graph(16), 12) == BigInt(16) * boost::multiprecision::pow(BigInt(15), 12));
    CHECK_THROWS(walk_count(cycle_graph(4), -1));

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
        for (int m = 0; m <= 6; ++m) CHECK(walk_count(g, m) == oracle::walks(g, m));
    }
}

TEST_CASE("spectral radius closed forms") {
    CHECK(spectral_radius(cycle_graph(4)).mu == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(spectral_radius(complete_graph(4)).mu == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(spectral_radius(build("M(3,3)")).mu == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(spectral_radius(make_graph(5, {})).mu == 0.0);
    CHECK(std::abs(spectral_radius(star_graph(3)).mu - std::sqrt(3.0)) < 1e-8);
    CHECK(std::abs(spectral_radius(path_graph(5)).mu - 2 * std::cos(M_PI / 6)) < 1e-8);
    CHECK_THROWS(spectral_radius(make_graph(0, {})));
    CHECK_THROWS(spectral_radius(cycle_graph(4), 0.0));
}

TEST_CASE("spectral radius agrees with a dense eigensolver") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 16), 0.1 + 0.8 * (trial % 9) / 8.0, rng);
        const SpectralEstimate est = spectral_radius(g);
        CHECK(std::abs(est.mu - eigen_mu(g)) < 1e-7);
        // average degree <= mu <= max degree
        CHECK(est.mu >= 2.0 * g.size() / g.order() - 1e-9);
        CHECK(est.mu <= g.max_degree() + 1e-9);
    }
}

TEST_CASE("path bound examples") {
    const PathBoundCheck c4 = check_path_bound(cycle_graph(4), 3);
    CHECK(c4.path_copies == 4);
    CHECK(c4.walks == 16);
    CHECK(c4.bound == doctest::Approx(8.0));
    CHECK(c4.holds);

    const PathBoundCheck k3 = check_path_bound(complete_graph(3), 3);
    CHECK(k3.path_copies == 3);
    CHECK(k3.walks == 12);
    CHECK(k3.bound == doctest::Approx(6.0));
    CHECK(k3.holds);

    const PathBoundCheck empty = check_path_bound(make_graph(4, {}), 4);
    CHECK(empty.path_copies == 0);
    CHECK(empty.walks == 0);
    CHECK(empty.holds);

    CHECK(path_spectral_bound(complete_graph(4), 3) == doctest::Approx(4 * 9 / 2.0));
    CHECK_THROWS(check_path_bound(cycle_graph(4), 2));
}

TEST_CASE("walk growth is controlled by the spectral radius") {
    // Walk counts are 1^T A^m 1 = sum_i c_i^2 lambda_i^m, so w_m <= n mu^m and
    // the even-step ratio w_{2a+2} / w_{2a} never exceeds mu^2.
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const double mu = spectral_radius(g).mu;
            for (int m = 0; m <= 7; ++m) {
                const double w = walk_count(g, m).convert_to<double>();
                CHECK(w <= n * std::pow(mu, m) * (1 + 1e-9) + 1e-9);
            }
            for (int a = 0; a <= 2; ++a) {
                const double lo = walk_count(g, 2 * a).convert_to<double>();
                const double hi = walk_count(g, 2 * a + 2).convert_to<double>();
                CHECK(hi <= mu * mu * lo * (1 + 1e-9) + 1e-9);
            }
        }
}

TEST_CASE("one-step walk growth can exceed mu") {
    // The star K_{1,3}: 6 walks with one edge, 12 with two, but mu = sqrt(3),
    // so w_2 > mu * w_1. A one-step bound w_{m+1} <= mu w_m is false in general.
    const Graph s = star_graph(3);
    CHECK(walk_count(s, 1) == 6);
    CHECK(walk_count(s, 2) == 12);
    CHECK(12.0 > spectral_radius(s).mu * 6.0);
}

TEST_CASE("twice the path copies never exceed the walks") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int l = 3; l <= 5; ++l) {
                const PathBoundCheck check = check_path_bound(g, l);
                CHECK(2 * check.path_copies <= check.walks);
                CHECK(check.holds);
            }
}

TEST_CASE("dense Turán graphs approach the (1 - 1/r) n density") {
    for (int r = 2; r <= 4; ++r) {
        const double mu = spectral_radius(turan_graph(r, 16)).mu;
        CHECK(std::abs(mu / 16 - (1.0 - 1.0 / r)) < 0.05);
    }
}
