#include "spectra/graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace spectra {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        g.rows_[u] |= 1ull << v;
        g.rows_[v] |= 1ull << u;
    }
    return g;
}

Graph Graph::from_upper_bits(int n, std::uint64_t bits) {
    if (n > 11) throw std::invalid_argument("upper_bits form limited to n <= 11");
    Graph g(n);
    int t = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((bits >> --t) & 1u) {
                g.rows_[i] |= 1ull << j;
                g.rows_[j] |= 1ull << i;
            }
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1u;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
}

VertexSet Graph::closed_neighborhood(int v) const { return neighbors(v) | (1ull << v); }

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    Graph g(*this);
    g.rows_[u] |= 1ull << v;
    g.rows_[v] |= 1ull << u;
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g(*this);
    g.rows_[u] &= ~(1ull << v);
    g.rows_[v] &= ~(1ull << u);
    return g;
}

Graph Graph::permuted(std::span<const int> new_label) const {
    if (static_cast<int>(new_label.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((rows_[u] >> v) & 1u) {
                int a = new_label[u], b = new_label[v];
                g.rows_[a] |= 1ull << b;
                g.rows_[b] |= 1ull << a;
            }
    return g;
}

std::uint64_t Graph::upper_bits() const {
    if (n_ > 11) throw std::invalid_argument("upper_bits form limited to n <= 11");
    std::uint64_t b = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            b = (b << 1) | ((rows_[i] >> j) & 1u);
    return b;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

int degree(const Graph& g, int v) { return std::popcount(g.neighbors(v)); }

VertexSet second_neighborhood(const Graph& g, int u) {
    VertexSet closed = g.closed_neighborhood(u);
    VertexSet reach = 0;
    for (VertexSet m = g.neighbors(u); m; m &= m - 1)
        reach |= g.neighbors(std::countr_zero(m));
    return reach & ~closed;
}

int edges_between(const Graph& g, VertexSet x, VertexSet y) {
    if (x & y) throw std::invalid_argument("edges_between requires disjoint sets");
    int count = 0;
    for (VertexSet m = x; m; m &= m - 1)
        count += std::popcount(g.neighbors(std::countr_zero(m)) & y);
    return count;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    s &= g.vertices();
    if (!s) throw std::invalid_argument("induced subgraph of the empty set");
    std::array<int, Graph::kMaxOrder> pick{};
    int k = 0;
    for (VertexSet m = s; m; m &= m - 1) pick[k++] = std::countr_zero(m);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(pick[i], pick[j])) edges.emplace_back(i, j);
    return Graph::from_edges(k, edges);
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::kMaxOrder) throw std::invalid_argument("join exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges;
    int off = g.order();
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.has_edge(u, v)) edges.emplace_back(off + u, off + v);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, off + v);
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::kMaxOrder) throw std::invalid_argument("union exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges;
    int off = g.order();
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.has_edge(u, v)) edges.emplace_back(off + u, off + v);
    return Graph::from_edges(n, edges);
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = degree(g, v);
    return d;
}

int min_degree(const Graph& g) {
    int d = Graph::kMaxOrder;
    for (int v = 0; v < g.order(); ++v) d = std::min(d, degree(g, v));
    return d;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, degree(g, v));
    return d;
}

bool is_connected(const Graph& g) {
    VertexSet seen = 1, frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertices();
}

bool is_regular(const Graph& g) {
    int d = degree(g, 0);
    for (int v = 1; v < g.order(); ++v)
        if (degree(g, v) != d) return false;
    return true;
}

bool is_semiregular_bipartite(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("semiregular test requires a connected graph");
    // 2-color by BFS; the bipartition of a connected graph is unique
    std::vector<int> color(g.order(), -1);
    color[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (color[v] == -1) {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                return false;
            }
        }
    }
    int side_deg[2] = {-1, -1};
    for (int v = 0; v < g.order(); ++v) {
        int d = degree(g, v);
        if (side_deg[color[v]] == -1)
            side_deg[color[v]] = d;
        else if (side_deg[color[v]] != d)
            return false;
    }
    return true;
}

namespace canon {

std::vector<std::vector<int>> refine_cells(std::span<const std::uint64_t> rows, int n) {
    std::vector<std::vector<int>> cells;
    {
        std::vector<std::vector<int>> by_deg(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) by_deg[std::popcount(rows[v])].push_back(v);
        for (auto& c : by_deg)
            if (!c.empty()) cells.push_back(std::move(c));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint64_t> mask(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) mask[c] |= 1ull << v;
        std::vector<std::vector<int>> next;
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> tagged;
            tagged.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig(cells.size());
                for (std::size_t c = 0; c < cells.size(); ++c)
                    sig[c] = std::popcount(rows[v] & mask[c]);
                tagged.emplace_back(std::move(sig), v);
            }
            std::sort(tagged.begin(), tagged.end());
            std::size_t groups = 0;
            std::size_t start = 0;
            for (std::size_t i = 1; i <= tagged.size(); ++i) {
                if (i == tagged.size() || tagged[i].first != tagged[start].first) {
                    std::vector<int> sub;
                    for (std::size_t j = start; j < i; ++j) sub.push_back(tagged[j].second);
                    next.push_back(std::move(sub));
                    ++groups;
                    start = i;
                }
            }
            if (groups > 1) changed = true;
        }
        cells = std::move(next);
    }
    return cells;
}

namespace {

constexpr std::uint64_t kAllOnes = ~0ull;

struct CanonSearch {
    int n = 0;
    const std::uint64_t* rows = nullptr;
    int cell_of_pos[12] = {};
    std::uint64_t cell_mask[12] = {};
    std::uint64_t best[12] = {};
    int chosen[12] = {};
    std::uint64_t used = 0;
    bool abort_on_improve = false;
    bool improved = false;

    void init(std::span<const std::uint64_t> r, int order) {
        n = order;
        rows = r.data();
        auto cells = refine_cells(r, order);
        int pos = 0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::uint64_t m = 0;
            for (int v : cells[c]) m |= 1ull << v;
            for (std::size_t i = 0; i < cells[c].size(); ++i) {
                cell_of_pos[pos] = static_cast<int>(c);
                ++pos;
            }
            cell_mask[c] = m;
        }
    }

    // true iff the identity labeling respects the ordered cells
    bool identity_in_order() const {
        for (int p = 0; p < n; ++p)
            if (!((cell_mask[cell_of_pos[p]] >> p) & 1u)) return false;
        return true;
    }

    std::uint64_t identity_chunk(int p) const {
        std::uint64_t chunk = 0;
        for (int q = 0; q < p; ++q) chunk |= ((rows[p] >> q) & 1ull) << (p - 1 - q);
        return chunk;
    }

    // explores relabelings position by position; best[] holds the minimal
    // column chunks found so far, suffix reset to all-ones on improvement
    bool place(int p) {
        if (p == n) return true;
        for (std::uint64_t m = cell_mask[cell_of_pos[p]] & ~used; m; m &= m - 1) {
            int v = std::countr_zero(m);
            std::uint64_t chunk = 0;
            for (int q = 0; q < p; ++q) chunk |= ((rows[v] >> chosen[q]) & 1ull) << (p - 1 - q);
            if (chunk > best[p]) continue;
            if (chunk < best[p]) {
                if (abort_on_improve) {
                    improved = true;
                    return false;
                }
                best[p] = chunk;
                for (int r = p + 1; r < n; ++r) best[r] = kAllOnes;
            }
            chosen[p] = v;
            used |= 1ull << v;
            bool keep_going = place(p + 1);
            used &= ~(1ull << v);
            if (!keep_going) return false;
        }
        return true;
    }

    std::uint64_t packed_best() const {
        std::uint64_t bits = 0;
        for (int p = 1; p < n; ++p) bits = (bits << p) | best[p];
        return bits;
    }
};

}  // namespace

std::uint64_t min_encoding(std::span<const std::uint64_t> rows, int n) {
    CanonSearch s;
    s.init(rows, n);
    for (int p = 0; p < n; ++p) s.best[p] = kAllOnes;
    s.place(0);
    return s.packed_best();
}

bool is_min_encoding(std::span<const std::uint64_t> rows, int n) {
    CanonSearch s;
    s.init(rows, n);
    if (!s.identity_in_order()) return false;
    for (int p = 0; p < n; ++p) s.best[p] = s.identity_chunk(p);
    s.abort_on_improve = true;
    s.place(0);
    return !s.improved;
}

}  // namespace canon

CanonicalKey canonical_key(const Graph& g) {
    if (g.order() > 10)
        throw std::invalid_argument("canonical_key is exact only up to 10 vertices");
    return CanonicalKey{static_cast<std::uint8_t>(g.order()),
                        canon::min_encoding(g.rows(), g.order())};
}

Graph canonical_form(const Graph& g) {
    CanonicalKey k = canonical_key(g);
    return Graph::from_upper_bits(k.n, k.bits);
}

}  // namespace spectra
