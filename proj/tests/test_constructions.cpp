#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/chromatic.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/graph6.hpp"

using namespace turan;

TEST_CASE("family shapes") {
    const Graph f2 = build("F2");
    CHECK(f2.order() == 5);
    CHECK(f2.size() == 6);
    CHECK(f2.degree(0) == 4);
    CHECK(count_subgraph(complete_graph(3), f2).copies == 2);
    // the two triangles meet only in vertex 0
    CHECK((f2.neighbors(1) & f2.neighbors(3)) == bit(0));

    CHECK(is_isomorphic(build("Mbar2"), cycle_graph(4)));
    CHECK(is_isomorphic(build("MbarP2"), build("B2")));
    CHECK(is_isomorphic(build("B2"), complete_graph(4).without_edge(2, 3)));

    CHECK(build("P1").order() == 1);
    CHECK(build("P3").size() == 2);
    CHECK(build("C5").size() == 5);
    CHECK(build("S3").degree(0) == 3);
    CHECK(build("B3").order() == 5);
    CHECK(build("B3").size() == 7);
    CHECK(build("F3").order() == 7);
    CHECK(build("K16").size() == 120);
}

TEST_CASE("Turán graphs") {
    CHECK(turan_graph(2, 5).size() == 6);
    CHECK(is_isomorphic(turan_graph(2, 5), complete_multipartite(ClassVector({3, 2}))));
    CHECK(turan_graph(3, 7).size() == 16);
    CHECK(is_isomorphic(turan_graph(2, 4), cycle_graph(4)));
    // big classes first, consecutive labels
    const Graph t = turan_graph(3, 7);
    CHECK_FALSE(t.adjacent(0, 2));
    CHECK(t.adjacent(2, 3));
    CHECK_FALSE(t.adjacent(3, 4));
    CHECK(ClassVector::balanced(3, 7).to_string() == "(3,2,2)");
    CHECK_THROWS(turan_graph(3, 2));
    CHECK_THROWS(turan_graph(0, 2));
    CHECK_THROWS_AS(turan_graph(2, 17), CapacityError);

    for (int n = 1; n <= 10; ++n)
        for (int r = 1; r <= n; ++r)
            CHECK(is_isomorphic(turan_graph(r, n), complete_multipartite(ClassVector::balanced(r, n))));
    for (int parts = 1; parts <= 5; ++parts)
        for (int n = parts; n <= 12; ++n) {
            CHECK_FALSE(oracle::has_clique(turan_graph(parts, n), parts + 1));
            CHECK(clique_number(turan_graph(parts, n)) == parts);
        }
}

TEST_CASE("complete multipartite") {
    CHECK(is_isomorphic(complete_multipartite(ClassVector({1, 1, 1})), complete_graph(3)));
    CHECK(is_isomorphic(complete_multipartite(ClassVector({2, 2})), cycle_graph(4)));
    CHECK(complete_multipartite(ClassVector({6, 2})).size() == 12);
    CHECK_THROWS_AS(complete_multipartite(ClassVector({9, 8})), CapacityError);
    CHECK_THROWS(ClassVector(std::vector<std::uint64_t>{}));
    CHECK_THROWS(ClassVector({2, 0}));
}

TEST_CASE("matching complements") {
    for (int k = 1; k <= 4; ++k) {
        const Graph m = matching_complement(k);
        const Graph mp = matching_complement_plus(k);
        CHECK(mp.size() == m.size() + 1);
        CHECK(m.order() == 2 * k);
        int differing = 0;
        for (int u = 0; u < 2 * k; ++u)
            for (int v = u + 1; v < 2 * k; ++v) differing += m.adjacent(u, v) != mp.adjacent(u, v);
        CHECK(differing == 1);
        CHECK(chromatic_number(m) == k);
        CHECK(chromatic_number(mp) == k + 1);
        CHECK(oracle::brute_chromatic(m) == k);
    }
}

TEST_CASE("glue_h_prime") {
    const Graph k2 = complete_graph(2);
    // u=0, v=1; new clique w=2, x=3
    const Graph c4 = glue_h_prime(k2, 0b11, 3, {{0, 0}, {1, 1}});
    CHECK(c4.size() == 4);
    CHECK(is_isomorphic(c4, cycle_graph(4)));

    const Graph two = glue_h_prime(k2, 0, 3, {});
    CHECK(is_isomorphic(two, disjoint_union(k2, k2)));

    const Graph p4 = glue_h_prime(k2, 0b01, 3, {{0, 0}});
    CHECK(is_isomorphic(p4, path_graph(4)));

    CHECK_THROWS_AS(glue_h_prime(path_graph(3), 0b101, 3, {}), std::invalid_argument);  // not a clique
    CHECK_THROWS_AS(glue_h_prime(k2, 0b01, 3, {{1, 0}}), std::invalid_argument);        // 1 outside X
    CHECK_THROWS_AS(glue_h_prime(k2, 0b01, 3, {{0, 2}}), std::invalid_argument);        // index past clique
    CHECK_THROWS_AS(glue_h_prime(complete_graph(10), 0b1, 8, {}), CapacityError);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph h = oracle::random_graph(2 + static_cast<int>(rng() % 5), 0.6, rng);
        // grow a clique greedily from a random start
        VertexMask x = 0;
        for (int v : oracle::random_permutation(h.order(), rng))
            if ((h.neighbors(v) & x) == x && rng() % 2) x |= bit(v);
        const int k = 2 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> pattern;
        for (int v = 0; v < h.order(); ++v)
            if ((x >> v) & 1U)
                for (int j = 0; j < k - 1; ++j)
                    if (rng() % 2) pattern.emplace_back(v, j);
        const Graph g = glue_h_prime(h, x, k, pattern);
        CHECK(g.order() == h.order() + k - 1);
        CHECK(g.size() == h.size() + (k - 1) * (k - 2) / 2 + static_cast<int>(pattern.size()));
        CHECK(induced_subgraph(g, h.vertices()) == h);
        CHECK(clique_number(induced_subgraph(g, g.vertices() & ~h.vertices())) == k - 1);
        CHECK(contains_subgraph(complete_graph(k - 1), g));
    }
}

TEST_CASE("family parser") {
    CHECK(parse_family("C5") == FamilySpec{FamilyKind::Cycle, {5}, {}});
    CHECK(parse_family("T(2,10)") == FamilySpec{FamilyKind::Turan, {2, 10}, {}});
    CHECK(is_isomorphic(build("M(3,2,2)"), turan_graph(3, 7)));
    CHECK(is_isomorphic(build("M( 3, 2 ,2 )"), turan_graph(3, 7)));
    CHECK(build("g6:Bw") == complete_graph(3));

    for (const char* text : {"P4", "C3", "K1", "S2", "B2", "F2", "Mbar3", "MbarP3", "T(3,7)", "M(4,1)", "g6:Cl"}) {
        const FamilySpec spec = parse_family(text);
        CHECK(parse_family(spec.to_string()) == spec);
    }

    auto offset = [](const char* text) -> long {
        try {
            parse_family(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset("") == 0);
    CHECK(offset("X3") == 0);
    CHECK(offset("C2") == 1);
    CHECK(offset("K17") == 1);
    CHECK(offset("P0") == 1);
    CHECK(offset("C5x") == 2);
    CHECK(offset("T(3,2)") >= 0);
    CHECK(offset("M(3,,2)") == 4);
    CHECK(offset("M(9,8)") >= 0);
    CHECK(offset("F8") == 1);
    CHECK(offset("Mbar9") >= 0);
    CHECK(offset("g6:") >= 0);
    CHECK(offset("g6:D?") >= 3);
    CHECK(offset("K") == 1);
}
