#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);      // n >= 3
Graph complete(int n);
Graph star(int n);       // center is vertex 0

// (n-1)/2 triangles through vertex 0 for odd n; for even n the odd graph one
// smaller plus a pendant at vertex 0. n >= 3.
Graph friendship(int n);

// K_k on 0..k-1 joined to n-k independent vertices; 1 <= k <= n-2
Graph split_star(int n, int k);
// split_star plus the edge {k, k+1}; needs n-k >= 2
Graph split_star_plus(int n, int k);

// two poles joined by three (or t >= 2) internally disjoint paths; lengths are
// sorted internally; at most one length may be 1 and all must be positive
Graph theta(int l1, int l2, int l3);
Graph generalized_theta(std::span<const int> lengths);

// star K_{1,n-1} with one leaf joined to k+1 other leaves; 3 <= k <= n-3
Graph h_graph(int n, int k);

// one apex joined to (n-1)/3 disjoint triangles; n = 1 mod 3, n >= 4
Graph cone_over_triangles(int n);

// Equality-case graphs of the degree-pressure bound analysis. Vertex 0 has
// degree n-2, vertex n-1 is the single outside vertex; the attachment choice
// inside each matching edge is fixed to the lower label.
Graph witness_g1(int n);  // odd n >= 7: N(0) induces a near-perfect matching
Graph witness_g2(int n);  // even n >= 6: N(0) induces a perfect matching
Graph witness_g3(int n);  // n >= 6: N(0) induces one edge, w misses one endpoint

enum class Family {
    Friendship,
    SplitStar,
    SplitStarPlus,
    Theta,
    GeneralizedTheta,
    HGraph,
    ConeOverTriangles,
    WitnessG1,
    WitnessG2,
    WitnessG3,
    Path,
    Cycle,
    Complete,
    Star,
};

struct FamilySpec {
    Family family;
    std::vector<int> params;  // meaning depends on the family: n, (n,k), or lengths
};

Graph build(const FamilySpec& spec);
std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family f);

}  // namespace spectra
