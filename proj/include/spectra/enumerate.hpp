#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectra/forbidden.hpp"
#include "spectra/graph.hpp"

namespace spectra {

struct Constraints {
    bool no_isolated = false;
    bool connected = false;
};

// number of worker threads for the parallel kernels; 0 keeps the OpenMP
// default (or the SPECTRA_JOBS environment variable when set)
void set_jobs(int jobs);
int resolve_jobs(int requested);  // requested > 0 wins, else SPECTRA_JOBS, else 0

// Pull-style serial enumeration of isomorphism classes: walks upper-triangle
// masks in increasing order and yields exactly the self-canonical ones.
// This is the reference implementation the parallel kernel is tested against.
class EnumerationStream {
public:
    EnumerationStream(int n, Constraints c);

    std::optional<Graph> next();
    int order() const { return n_; }
    Constraints constraints() const { return constraints_; }

private:
    int n_;
    Constraints constraints_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_;
};

std::vector<Graph> enumerate_classes_serial(int n, Constraints c);
// OpenMP kernel partitioned over the top bits of the adjacency mask;
// result order matches the serial stream regardless of thread count
std::vector<Graph> enumerate_classes(int n, Constraints c, int jobs = 0);

std::uint64_t count_classes(int n, Constraints c, int jobs = 0);

struct ExtremalReport {
    int n = 0;
    std::string family;
    std::uint64_t count_free = 0;
    double max_q = 0.0;
    std::vector<CanonicalKey> witnesses;   // argmax classes, tie band 1e-9 with
                                           // exact characteristic-polynomial grouping
    bool unique = false;
    std::optional<double> runner_up_gap;   // max_q minus the best non-witness class
};

ExtremalReport extremal_search_serial(int n, std::span<const Pattern> family);
ExtremalReport extremal_search(int n, std::span<const Pattern> family, int jobs = 0);

struct TheoremCheck {
    std::string id;
    int n = 0;
    bool asserted = true;   // false for n < 6 where no claim is made
    bool pass = false;
    ExtremalReport report;
    CanonicalKey expected_key;
    std::string expected_name;
    double expected_q = 0.0;
};

// id is "1.2", "1.3" or "1.4"; 4 <= n <= 8
TheoremCheck verify_theorem(const std::string& id, int n, int jobs = 0);

struct PathBoundCheck {
    int n = 0, k = 0;
    bool pass = false;
    int max_edges = 0;
    double bound = 0.0;                       // (k-1)n/2
    std::vector<CanonicalKey> equality_classes;
    bool equality_as_expected = false;        // disjoint K_k unions exactly, iff k | n
    std::uint64_t count_checked = 0;
};

// all graphs of order n (isolated vertices allowed): every P_{k+1}-free graph
// has at most (k-1)n/2 edges, with equality exactly on disjoint K_k unions
PathBoundCheck verify_path_bound(int n, int k);

struct HGraphCheck {
    int n = 0, k = 0;
    bool pass = false;
    double max_q = 0.0;
    std::vector<CanonicalKey> witnesses;
    CanonicalKey expected_key;
    std::optional<double> runner_up_gap;
};

// connected graphs with exactly n + k edges; the stated maximizer must be the
// unique argmax class
HGraphCheck verify_h_graph_max(int n, int k, int jobs = 0);

struct BoundChainCheck {
    int max_n = 0;
    bool pass = false;
    std::uint64_t graphs_checked = 0;
    std::uint64_t chain_violations = 0;       // q <= max degree pressure <= das bound
    std::uint64_t equality_mismatches = 0;    // connected: equality iff regular or
                                              // semiregular bipartite
    std::vector<std::string> failures;        // graph6 of offending graphs, capped
};

// exhaustive over every graph without isolated vertices of order 2..max_n
BoundChainCheck verify_bound_chain(int max_n, int jobs = 0);

struct EdgeMonotonicityCheck {
    int max_n = 0;
    bool pass = false;
    std::uint64_t deletions_checked = 0;
    std::vector<std::string> failures;
};

// deleting any edge of a connected graph strictly lowers q; exhaustive over
// connected classes of order 2..max_n
EdgeMonotonicityCheck verify_edge_monotonicity(int max_n, int jobs = 0);

}  // namespace spectra
