#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/families.hpp"
#include "spectra/spectral.hpp"

using namespace spectra;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("signless Laplacian assembly") {
    Matrix q2 = signless_laplacian(complete(2));
    CHECK(q2.at(0, 0) == 1);
    CHECK(q2.at(0, 1) == 1);
    CHECK(q2.at(1, 0) == 1);
    CHECK(q2.at(1, 1) == 1);

    Matrix q3 = signless_laplacian(path(3));
    double want[3][3] = {{1, 1, 0}, {1, 2, 1}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(q3.at(i, j) == want[i][j]);

    std::mt19937 rng(5);
    Graph g = oracles::random_graph(rng, 12, 0.4);
    Matrix q = signless_laplacian(g);
    for (int i = 0; i < 12; ++i) {
        double row = 0;
        for (int j = 0; j < 12; ++j) row += q.at(i, j);
        CHECK(row == 2.0 * degree(g, i));
    }
}

TEST_CASE("q_max on known graphs") {
    CHECK(q_max(complete(2)).q == doctest::Approx(2.0).epsilon(1e-12));
    for (int n = 3; n <= 10; ++n)
        CHECK(q_max(cycle(n)).q == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(q_max(friendship(5)).q == doctest::Approx((7 + std::sqrt(17.0)) / 2).epsilon(1e-12));
    CHECK(q_max(complete(1)).q == 0.0);
}

TEST_CASE("q_max result invariants") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 18);
        Graph g = oracles::random_graph(rng, n, 0.4);
        SpectralResult r = q_max(g);
        CHECK(r.residual <= 1e-10);
        CHECK(r.q >= 4.0 * g.size() / g.order() - 1e-9);  // Rayleigh quotient of all-ones
        double norm = 0;
        for (double x : r.vector) norm += x * x;
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        if (is_connected(g) && n >= 2) {
            for (double x : r.vector) CHECK(x > 0.0);  // Perron vector
        }
    }
}

TEST_CASE("jacobi agrees with power iteration") {
    // exhaustive n <= 6 plus larger random graphs
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_classes(n, Constraints{})) {
            double pi = power_iteration_largest(signless_laplacian(g), 1e-13).value;
            CHECK(q_max(g).q == doctest::Approx(pi).epsilon(1e-8));
        }
    std::mt19937 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 18), 0.35);
        double pi = power_iteration_largest(signless_laplacian(g), 1e-13).value;
        CHECK(q_max(g).q == doctest::Approx(pi).epsilon(1e-8));
    }
}

TEST_CASE("closed forms match the numeric eigenvalue") {
    CHECK(closed_q_splitstar2(6) == doctest::Approx(4.0 + 2.0 * std::sqrt(3.0)).epsilon(1e-12));
    // even-n friendship value is the largest root of the stated cubic
    double f6 = closed_q_friendship(6);
    CHECK(f6 * f6 * f6 - 9 * f6 * f6 + 18 * f6 - 8 == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(f6 > 6 + 2.0 / 6);
    CHECK(f6 < 6 + 2.0 / 5);
    double sp6 = closed_q_splitstarplus1(6);
    CHECK(sp6 * sp6 * sp6 - 9 * sp6 * sp6 + 18 * sp6 - 4 == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(sp6 > 6.0);
    CHECK(sp6 < 7.0);

    for (int n = 4; n <= 40; ++n) {
        CHECK(q_max(friendship(n)).q == doctest::Approx(closed_q_friendship(n)).epsilon(1e-10));
        CHECK(q_max(split_star(n, 2)).q == doctest::Approx(closed_q_splitstar2(n)).epsilon(1e-10));
        CHECK(q_max(split_star_plus(n, 1)).q ==
              doctest::Approx(closed_q_splitstarplus1(n)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(closed_q_friendship(2), std::invalid_argument);
    CHECK_THROWS_AS(closed_q_splitstar2(3), std::invalid_argument);
}

TEST_CASE("sandwich bounds on the closed forms") {
    for (int n = 5; n <= 40; ++n) {
        double q = closed_q_friendship(n);
        CHECK(q > friendship_bracket_lo(n));
        CHECK(q < friendship_bracket_hi(n));
    }
    for (int n = 4; n <= 40; ++n) CHECK(closed_q_splitstar2(n) > splitstar2_lower(n));
    for (int n = 6; n <= 40; ++n) {
        double q = closed_q_splitstarplus1(n);
        CHECK(q > n);
        CHECK(q < n + 1);
    }
    // the cone value stays below the split-star value
    for (int n = 7; n <= 40; n += 3)
        CHECK(q_cone_over_triangles(n) < closed_q_splitstar2(n));
}

TEST_CASE("degree pressure") {
    for (int v = 0; v < 3; ++v)
        CHECK(degree_pressure(path(3), v) == doctest::Approx(3.0));
    CHECK(q_max(path(3)).q == doctest::Approx(3.0).epsilon(1e-10));  // semiregular equality
    CHECK(max_degree_pressure(complete(4)).second == doctest::Approx(6.0));
    CHECK(q_max(complete(4)).q == doctest::Approx(6.0).epsilon(1e-10));  // regular equality
    CHECK(degree_pressure(friendship(5), 0) == doctest::Approx(6.0));
    CHECK(q_max(friendship(5)).q < 6.0);  // strict for the non-regular center
    CHECK_THROWS_AS(degree_pressure(disjoint_union(complete(2), Graph(1)), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(max_degree_pressure(disjoint_union(complete(2), Graph(1))),
                    std::invalid_argument);
    // lowest-indexed maximizer wins ties
    CHECK(max_degree_pressure(cycle(5)).first == 0);
}

TEST_CASE("das bound") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(das_bound(complete(n)) == doctest::Approx(2.0 * n - 2));
        CHECK(max_degree_pressure(complete(n)).second == doctest::Approx(2.0 * n - 2));
        CHECK(das_bound(star(n)) == doctest::Approx(static_cast<double>(n)));
        CHECK(max_degree_pressure(star(n)).second == doctest::Approx(static_cast<double>(n)));
    }
    CHECK(das_bound(cycle(5)) == doctest::Approx(5.5));
    CHECK(max_degree_pressure(cycle(5)).second == doctest::Approx(4.0));
    CHECK_THROWS_AS(das_bound(Graph(1)), std::invalid_argument);
}

TEST_CASE("quotient matrices") {
    Graph sp = split_star_plus(6, 1);
    std::vector<VertexSet> blocks{0b000001, 0b000110, 0b111000};
    QuotientMatrix qm = quotient_matrix(sp, blocks, QuotientMode::signless_laplacian);
    long long want[3][3] = {{5, 2, 3}, {1, 3, 0}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(qm.at(i, j) == want[i][j]);
    CHECK(largest_eigenvalue_small(qm) == doctest::Approx(q_max(sp).q).epsilon(1e-10));

    // K_{a,b} adjacency quotient is [[0,b],[a,0]] with spectral radius sqrt(ab)
    Graph k23 = join(empty_graph(2), empty_graph(3));
    QuotientMatrix adj = quotient_matrix(k23, std::vector<VertexSet>{0b00011, 0b11100},
                                         QuotientMode::adjacency);
    CHECK(adj.at(0, 0) == 0);
    CHECK(adj.at(0, 1) == 3);
    CHECK(adj.at(1, 0) == 2);
    CHECK(adj.at(1, 1) == 0);
    CHECK(largest_eigenvalue_small(adj) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-10));

    // antipodal pairs of C_6 form an equitable partition
    QuotientMatrix c6 = quotient_matrix(cycle(6), std::vector<VertexSet>{0b001001, 0b010010, 0b100100},
                                        QuotientMode::adjacency);
    CHECK(largest_eigenvalue_small(c6) == doctest::Approx(2.0).epsilon(1e-10));

    // witness pair reported for a non-equitable partition
    try {
        quotient_matrix(path(3), std::vector<VertexSet>{0b011, 0b100}, QuotientMode::adjacency);
        FAIL("expected NonEquitableError");
    } catch (const NonEquitableError& e) {
        CHECK(e.witness_u == 0);
        CHECK(e.witness_v == 1);
    }
    CHECK_THROWS_AS(
        quotient_matrix(path(3), std::vector<VertexSet>{0b011, 0b110}, QuotientMode::adjacency),
        std::invalid_argument);
}

TEST_CASE("quotient characteristic polynomial of the plus family") {
    // the 3x3 quotient of Q(S_{n,1}^+) has charpoly x^3-(n+3)x^2+3nx-4 exactly
    for (int n = 6; n <= 40; ++n) {
        Graph sp = split_star_plus(n, 1);
        VertexSet rest = sp.vertices() & ~VertexSet{0b111};
        QuotientMatrix qm = quotient_matrix(sp, std::vector<VertexSet>{0b001, 0b110, rest},
                                            QuotientMode::signless_laplacian);
        std::vector<long long> cp = charpoly_exact(3, qm.b);
        CHECK(cp == std::vector<long long>{-4, 3LL * n, -(n + 3LL), 1});
    }
}

TEST_CASE("exact characteristic polynomial and rational roots") {
    // Q(K_3) has eigenvalues 4, 1, 1
    std::vector<long long> cp = charpoly_q_exact(complete(3));
    CHECK(cp == std::vector<long long>{-4, 9, -6, 1});
    CHECK(is_rational_root(cp, 4, 1));
    CHECK(is_rational_root(cp, 1, 1));
    CHECK(!is_rational_root(cp, 2, 1));
    CHECK(is_rational_root(cp, 8, 2));
    // P_3 pressure value 3 is the top eigenvalue of Q(P_3)
    CHECK(is_rational_root(charpoly_q_exact(path(3)), 3, 1));
    CHECK_THROWS_AS(is_rational_root(cp, 1, 0), std::invalid_argument);
}

TEST_CASE("neighborhood decomposition") {
    NeighborhoodDecomposition f7 = neighborhood_decomposition(friendship(7), 0);
    CHECK(f7.degree == 6);
    CHECK(f7.inner_edges == 3);
    CHECK(f7.outgoing_edges == 0);

    NeighborhoodDecomposition g3 = neighborhood_decomposition(witness_g3(6), 0);
    CHECK(g3.degree == 4);
    CHECK(g3.inner_edges == 1);
    CHECK(g3.outgoing_edges == 3);

    NeighborhoodDecomposition s5 = neighborhood_decomposition(star(5), 0);
    CHECK(s5.degree == 4);
    CHECK(s5.inner_edges == 0);
    CHECK(s5.outgoing_edges == 0);
    CHECK_THROWS_AS(neighborhood_decomposition(Graph(2), 0), std::invalid_argument);
}

TEST_CASE("cubic root bracketing") {
    // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
    CHECK(largest_root(CubicSpec{-6, 11, -6, 2.5, 3.5}) == doctest::Approx(3.0).epsilon(1e-11));
    // deliberately misplaced bracket recovers via widening
    CHECK(largest_root(CubicSpec{-6, 11, -6, 3.2, 3.9}) == doctest::Approx(3.0).epsilon(1e-11));
    CHECK_THROWS_AS(largest_root(CubicSpec{0, 0, 1, 5, 6}), std::invalid_argument);
}

TEST_SUITE_END();
