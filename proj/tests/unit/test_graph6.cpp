#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/families.hpp"
#include "spectra/graph6.hpp"

using namespace spectra;

TEST_SUITE_BEGIN("graph6");

TEST_CASE("fixed strings") {
    CHECK(graph6_encode(complete(1)) == "@");
    CHECK(graph6_encode(complete(2)) == "A_");
    CHECK(graph6_encode(empty_graph(2)) == "A?");
    CHECK(graph6_encode(complete(3)) == "Bw");
    CHECK(graph6_encode(complete(4)) == "C~");
    CHECK(graph6_encode(path(4)) == "Ch");
    CHECK(graph6_encode(cycle(4)) == "Cl");
    CHECK(graph6_decode("Bw") == complete(3));
    CHECK(graph6_decode(">>graph6<<Bw") == complete(3));
}

TEST_CASE("long order form for n = 63 and 64") {
    Graph g63 = star(63);
    std::string s = graph6_encode(g63);
    CHECK(s.substr(0, 4) == "~??~");
    CHECK(graph6_decode(s) == g63);

    Graph g64 = cycle(64);
    s = graph6_encode(g64);
    CHECK(s.substr(0, 4) == "~?@?");
    CHECK(graph6_decode(s) == g64);
}

TEST_CASE("round trip is the identity") {
    for (int n = 1; n <= 6; ++n) {
        const int t = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << t); ++mask) {
            Graph g = Graph::from_upper_bits(n, mask);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
    }
    for (const Graph& g : enumerate_classes(7, Constraints{}))
        CHECK(graph6_decode(graph6_encode(g)) == g);
    for (const Graph& g : enumerate_classes(8, Constraints{}))
        CHECK(graph6_decode(graph6_encode(g)) == g);
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 8 + static_cast<int>(rng() % 57);
        Graph g = oracles::random_graph(rng, n, 0.3);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("decoder rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);       // truncated adjacency
    CHECK_THROWS_AS(graph6_decode("Bww"), Graph6Error);     // trailing characters
    CHECK_THROWS_AS(graph6_decode("B\x1f"), Graph6Error);   // character below offset
    CHECK_THROWS_AS(graph6_decode("Bx"), Graph6Error);      // nonzero padding bits
    CHECK_THROWS_AS(graph6_decode("?"), Graph6Error);       // order 0 unsupported
    CHECK_THROWS_AS(graph6_decode("~?A?"), Graph6Error);    // order 128 beyond cap
}

TEST_SUITE_END();
