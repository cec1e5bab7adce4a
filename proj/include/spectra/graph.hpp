#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spectra {

// Vertices are labeled 0..n-1; a VertexSet is a bit mask over them.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }

// Immutable simple undirected graph on at most 64 vertices.
// One adjacency bit row per vertex, so neighborhood operations are word ops.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Graph(int n);  // edgeless graph on n vertices
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    // inverse of upper_bits(); requires n <= 11
    static Graph from_upper_bits(int n, std::uint64_t bits);

    int order() const { return n_; }
    int size() const;  // edge count
    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const;
    VertexSet vertices() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }
    std::span<const std::uint64_t> rows() const { return rows_; }

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    // relabel: vertex v becomes new_label[v]
    Graph permuted(std::span<const int> new_label) const;

    // Upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),(0,3),...
    // packed with the first pair most significant. Requires n <= 11 so the
    // n(n-1)/2 bits fit one word.
    std::uint64_t upper_bits() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint64_t> rows_;
};

int degree(const Graph& g, int v);
// vertices at graph distance exactly two from u
VertexSet second_neighborhood(const Graph& g, int u);
// number of edges with one end in x and the other in y; x and y must be disjoint
int edges_between(const Graph& g, VertexSet x, VertexSet y);
// subgraph induced by s, relabeled 0..|s|-1 in ascending original order
Graph induced_subgraph(const Graph& g, VertexSet s);
// join adds all cross edges, disjoint_union none; vertex blocks are g then h
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

std::vector<int> degrees(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
// connected graphs only: bipartite with constant degree on each side
bool is_semiregular_bipartite(const Graph& g);

// Relabeling-invariant key, exact for isomorphism at n <= 10: equal keys iff
// the graphs are isomorphic. bits is the minimal upper-triangle encoding over
// all relabelings compatible with the refined degree partition.
struct CanonicalKey {
    std::uint8_t n = 0;
    std::uint64_t bits = 0;
    auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const Graph& g);
// the canonically labeled representative, i.e. decode of the key
Graph canonical_form(const Graph& g);

namespace canon {

// Ordered equitable refinement of the ascending-degree partition. Cell order
// is invariant under relabeling, which makes the backtracking search below a
// complete isomorphism invariant.
std::vector<std::vector<int>> refine_cells(std::span<const std::uint64_t> rows, int n);

std::uint64_t min_encoding(std::span<const std::uint64_t> rows, int n);
// true iff the identity labeling already attains min_encoding; used by the
// enumeration kernel to emit exactly one representative per class
bool is_min_encoding(std::span<const std::uint64_t> rows, int n);

}  // namespace canon

}  // namespace spectra
