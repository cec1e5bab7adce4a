#include "spectra/forbidden.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "spectra/families.hpp"

namespace spectra {

Pattern::Pattern(Graph target, std::string name)
    : target_(std::move(target)), name_(std::move(name)) {
    const int k = target_.order();
    for (int v = 0; v < k; ++v)
        if (degree(target_, v) == 0)
            throw std::invalid_argument("pattern must not have isolated vertices");
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        bool pick_attached = false;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            bool attached = false;
            for (int u : order_)
                if (target_.has_edge(u, v)) attached = true;
            if (pick == -1 || (attached && !pick_attached) ||
                (attached == pick_attached && degree(target_, v) > degree(target_, pick))) {
                pick = v;
                pick_attached = attached;
            }
        }
        placed[pick] = true;
        order_.push_back(pick);
    }
}

namespace {

bool extend(const Graph& host, const Pattern& pattern, std::size_t depth, std::vector<int>& map,
            VertexSet& used) {
    auto order = pattern.match_order();
    if (depth == order.size()) return true;
    const Graph& target = pattern.target();
    const int u = order[depth];
    const int want_deg = degree(target, u);

    // host candidates must dominate the pattern vertex degree and cover every
    // already-placed pattern neighbor
    for (int v = 0; v < host.order(); ++v) {
        if (set_contains(used, v)) continue;
        if (degree(host, v) < want_deg) continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d)
            if (target.has_edge(order[d], u) && !host.has_edge(map[order[d]], v)) ok = false;
        if (!ok) continue;
        // unplaced pattern neighbors still need unused host neighbors
        int unplaced = 0;
        for (VertexSet m = target.neighbors(u); m; m &= m - 1)
            if (map[std::countr_zero(m)] < 0) ++unplaced;
        if (std::popcount(host.neighbors(v) & ~used) < unplaced) continue;

        map[u] = v;
        used |= 1ull << v;
        if (extend(host, pattern, depth + 1, map, used)) return true;
        used &= ~(1ull << v);
        map[u] = -1;
    }
    return false;
}

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& host, const Pattern& pattern) {
    if (pattern.target().order() > host.order()) return std::nullopt;
    std::vector<int> map(pattern.target().order(), -1);
    VertexSet used = 0;
    if (!extend(host, pattern, 0, map, used)) return std::nullopt;
    return Embedding{std::move(map)};
}

bool is_free(const Graph& host, std::span<const Pattern> family) {
    for (const Pattern& p : family)
        if (contains_subgraph(host, p)) return false;
    return true;
}

namespace {

bool path_extend(const Graph& host, int last, VertexSet visited, int remaining,
                 std::unordered_set<std::uint64_t>* dead) {
    if (remaining == 0) return true;
    const bool memo = host.order() <= 57;
    std::uint64_t key = 0;
    if (memo) {
        key = (visited << 6) | static_cast<std::uint64_t>(last);
        if (dead->count(key)) return false;
    }
    for (VertexSet m = host.neighbors(last) & ~visited; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (path_extend(host, v, visited | (1ull << v), remaining - 1, dead)) return true;
    }
    if (memo) dead->insert(key);
    return false;
}

}  // namespace

bool has_path_subgraph(const Graph& host, int k) {
    if (k < 1) throw std::invalid_argument("path length must be at least 1");
    if (k > host.order()) return false;
    if (k == 1) return true;
    std::unordered_set<std::uint64_t> dead;
    for (int start = 0; start < host.order(); ++start)
        if (path_extend(host, start, 1ull << start, k - 1, &dead)) return true;
    return false;
}

Pattern pattern_theta(int l1, int l2, int l3) {
    return Pattern(theta(l1, l2, l3), "theta-" + std::to_string(l1) + "-" + std::to_string(l2) +
                                          "-" + std::to_string(l3));
}

Pattern pattern_f5() { return Pattern(friendship(5), "f5"); }

Pattern pattern_path(int k) { return Pattern(path(k), "p" + std::to_string(k)); }

std::optional<std::vector<Pattern>> parse_pattern_list(std::string_view text) {
    std::vector<Pattern> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        if (tok.empty()) return std::nullopt;
        if (tok == "f5") {
            out.push_back(pattern_f5());
        } else if (tok.substr(0, 6) == "theta-") {
            int ls[3];
            int count = 0;
            std::size_t p = 6;
            while (p < tok.size() && count < 3) {
                std::size_t dash = tok.find('-', p);
                std::string_view num = tok.substr(p, dash == std::string_view::npos ? dash : dash - p);
                if (num.empty()) return std::nullopt;
                int val = 0;
                for (char c : num) {
                    if (c < '0' || c > '9') return std::nullopt;
                    val = val * 10 + (c - '0');
                }
                ls[count++] = val;
                if (dash == std::string_view::npos) {
                    p = tok.size();
                    break;
                }
                p = dash + 1;
            }
            if (count != 3 || p != tok.size()) return std::nullopt;
            out.push_back(pattern_theta(ls[0], ls[1], ls[2]));
        } else {
            return std::nullopt;
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace spectra
