#include "spectra/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectra {

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

Graph friendship(int n) {
    if (n < 3) throw std::invalid_argument("friendship graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    int odd = (n % 2 == 1) ? n : n - 1;
    for (int i = 0; 2 * i + 2 <= odd - 1; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(a, b);
    }
    if (n % 2 == 0) edges.emplace_back(0, n - 1);  // pendant at the center
    return Graph::from_edges(n, edges);
}

Graph split_star(int n, int k) {
    if (k < 1 || k > n - 2) throw std::invalid_argument("split_star needs 1 <= k <= n-2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph split_star_plus(int n, int k) {
    if (k < 1 || n - k < 2) throw std::invalid_argument("split_star_plus needs k >= 1 and n-k >= 2");
    return split_star(n, k).with_edge(k, k + 1);
}

Graph generalized_theta(std::span<const int> lengths) {
    if (lengths.size() < 2) throw std::invalid_argument("theta graph needs at least two paths");
    std::vector<int> ls(lengths.begin(), lengths.end());
    std::sort(ls.begin(), ls.end());
    if (ls.front() < 1) throw std::invalid_argument("theta path lengths must be positive");
    if (ls.size() > 1 && ls[1] < 2)
        throw std::invalid_argument("theta graph admits at most one path of length 1");
    int n = 2;
    for (int l : ls) n += l - 1;
    std::vector<std::pair<int, int>> edges;
    int next = 2;  // poles are 0 and 1
    for (int l : ls) {
        int prev = 0;
        for (int step = 1; step < l; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph::from_edges(n, edges);
}

Graph theta(int l1, int l2, int l3) {
    const int ls[3] = {l1, l2, l3};
    return generalized_theta(ls);
}

Graph h_graph(int n, int k) {
    if (k < 3 || k > n - 3) throw std::invalid_argument("h_graph needs 3 <= k <= n-3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    for (int v = 2; v < 2 + k + 1; ++v) edges.emplace_back(1, v);
    return Graph::from_edges(n, edges);
}

Graph cone_over_triangles(int n) {
    if (n < 4 || n % 3 != 1)
        throw std::invalid_argument("cone_over_triangles needs n = 1 mod 3, n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < (n - 1) / 3; ++i) {
        int a = 3 * i + 1, b = 3 * i + 2, c = 3 * i + 3;
        edges.emplace_back(a, b);
        edges.emplace_back(a, c);
        edges.emplace_back(b, c);
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(0, c);
    }
    return Graph::from_edges(n, edges);
}

Graph witness_g1(int n) {
    if (n < 7 || n % 2 == 0) throw std::invalid_argument("witness_g1 needs odd n >= 7");
    int t = (n - 3) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n - 2; ++v) edges.emplace_back(0, v);
    for (int i = 0; i < t; ++i) edges.emplace_back(2 * i + 1, 2 * i + 2);
    int w = n - 1;
    for (int i = 0; i < t; ++i) edges.emplace_back(w, 2 * i + 1);
    edges.emplace_back(w, n - 2);  // the vertex isolated inside N(0)
    return Graph::from_edges(n, edges);
}

Graph witness_g2(int n) {
    if (n < 6 || n % 2 == 1) throw std::invalid_argument("witness_g2 needs even n >= 6");
    int t = (n - 2) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n - 2; ++v) edges.emplace_back(0, v);
    for (int i = 0; i < t; ++i) edges.emplace_back(2 * i + 1, 2 * i + 2);
    int w = n - 1;
    for (int i = 0; i < t; ++i) edges.emplace_back(w, 2 * i + 1);
    return Graph::from_edges(n, edges);
}

Graph witness_g3(int n) {
    if (n < 6) throw std::invalid_argument("witness_g3 needs n >= 6");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n - 2; ++v) edges.emplace_back(0, v);
    edges.emplace_back(1, 2);
    // w reaches n-3 neighbors: everything but the lower endpoint of the edge,
    // since covering both endpoints would close a theta(1,2,2)
    int w = n - 1;
    for (int v = 2; v <= n - 2; ++v) edges.emplace_back(w, v);
    return Graph::from_edges(n, edges);
}

namespace {

void need_params(const FamilySpec& spec, std::size_t count) {
    if (spec.params.size() != count)
        throw std::invalid_argument(family_name(spec.family) + " expects " +
                                    std::to_string(count) + " parameter(s)");
}

}  // namespace

Graph build(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Friendship: need_params(spec, 1); return friendship(spec.params[0]);
        case Family::SplitStar: need_params(spec, 2); return split_star(spec.params[0], spec.params[1]);
        case Family::SplitStarPlus:
            need_params(spec, 2);
            return split_star_plus(spec.params[0], spec.params[1]);
        case Family::Theta: need_params(spec, 3); return theta(spec.params[0], spec.params[1], spec.params[2]);
        case Family::GeneralizedTheta: return generalized_theta(spec.params);
        case Family::HGraph: need_params(spec, 2); return h_graph(spec.params[0], spec.params[1]);
        case Family::ConeOverTriangles: need_params(spec, 1); return cone_over_triangles(spec.params[0]);
        case Family::WitnessG1: need_params(spec, 1); return witness_g1(spec.params[0]);
        case Family::WitnessG2: need_params(spec, 1); return witness_g2(spec.params[0]);
        case Family::WitnessG3: need_params(spec, 1); return witness_g3(spec.params[0]);
        case Family::Path: need_params(spec, 1); return path(spec.params[0]);
        case Family::Cycle: need_params(spec, 1); return cycle(spec.params[0]);
        case Family::Complete: need_params(spec, 1); return complete(spec.params[0]);
        case Family::Star: need_params(spec, 1); return star(spec.params[0]);
    }
    throw std::invalid_argument("unknown family");
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "friendship") return Family::Friendship;
    if (name == "split-star") return Family::SplitStar;
    if (name == "split-star-plus") return Family::SplitStarPlus;
    if (name == "theta") return Family::Theta;
    if (name == "generalized-theta") return Family::GeneralizedTheta;
    if (name == "h-graph") return Family::HGraph;
    if (name == "cone-over-triangles") return Family::ConeOverTriangles;
    if (name == "witness-g1") return Family::WitnessG1;
    if (name == "witness-g2") return Family::WitnessG2;
    if (name == "witness-g3") return Family::WitnessG3;
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Friendship: return "friendship";
        case Family::SplitStar: return "split-star";
        case Family::SplitStarPlus: return "split-star-plus";
        case Family::Theta: return "theta";
        case Family::GeneralizedTheta: return "generalized-theta";
        case Family::HGraph: return "h-graph";
        case Family::ConeOverTriangles: return "cone-over-triangles";
        case Family::WitnessG1: return "witness-g1";
        case Family::WitnessG2: return "witness-g2";
        case Family::WitnessG3: return "witness-g3";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Star: return "star";
    }
    return "?";
}

}  // namespace spectra
