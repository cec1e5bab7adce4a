#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

// A forbidden subgraph. Match order is fixed at construction: highest degree
// first, then greedily adjacent to the already-ordered prefix, so partial
// embeddings fail fast.
class Pattern {
public:
    explicit Pattern(Graph target, std::string name = "");

    const Graph& target() const { return target_; }
    const std::string& name() const { return name_; }
    std::span<const int> match_order() const { return order_; }

private:
    Graph target_;
    std::string name_;
    std::vector<int> order_;
};

struct Embedding {
    std::vector<int> map;  // pattern vertex -> host vertex
};

// First embedding of the pattern as a (not necessarily induced) subgraph of
// the host, in the deterministic search order; nullopt when none exists.
std::optional<Embedding> contains_subgraph(const Graph& host, const Pattern& pattern);

bool is_free(const Graph& host, std::span<const Pattern> family);

// true iff the host contains a path on k vertices as a subgraph
bool has_path_subgraph(const Graph& host, int k);

Pattern pattern_theta(int l1, int l2, int l3);
Pattern pattern_f5();
Pattern pattern_path(int k);

// comma separated literals: theta-1-2-2, theta-1-2-3, f5
std::optional<std::vector<Pattern>> parse_pattern_list(std::string_view text);

}  // namespace spectra
