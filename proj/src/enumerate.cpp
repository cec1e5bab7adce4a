#include "spectra/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spectra/families.hpp"
#include "spectra/graph6.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

namespace {

constexpr int kMaxEnumerationOrder = 8;
constexpr double kTieBand = 1e-9;

int g_jobs = 0;

void check_order(int n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("exact enumeration handles 1 <= n <= 8, got " +
                                    std::to_string(n));
}

// builders on stack adjacency rows; the Graph value is only materialized for
// masks that survive every filter
void rows_from_mask(std::uint64_t mask, int n, std::uint64_t* rows) {
    for (int i = 0; i < n; ++i) rows[i] = 0;
    int t = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> --t) & 1u) {
                rows[i] |= 1ull << j;
                rows[j] |= 1ull << i;
            }
}

bool rows_connected(const std::uint64_t* rows, int n) {
    const std::uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= rows[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

// degrees must be nondecreasing on a canonical representative; rejects the
// bulk of masks before the full canonicity search
bool degrees_sorted(const std::uint64_t* rows, int n) {
    int prev = 0;
    for (int v = 0; v < n; ++v) {
        int d = std::popcount(rows[v]);
        if (d < prev) return false;
        prev = d;
    }
    return true;
}

struct ScanOpts {
    Constraints c;
    int edge_count = -1;  // exact edge count filter when >= 0
};

bool mask_passes(std::uint64_t mask, int n, ScanOpts opts, std::uint64_t* rows) {
    if (opts.edge_count >= 0 && std::popcount(mask) != opts.edge_count) return false;
    rows_from_mask(mask, n, rows);
    if (opts.c.no_isolated) {
        for (int v = 0; v < n; ++v)
            if (rows[v] == 0) return false;
    }
    if (opts.c.connected && !rows_connected(rows, n)) return false;
    if (!degrees_sorted(rows, n)) return false;
    return canon::is_min_encoding(std::span<const std::uint64_t>(rows, n), n);
}

std::vector<Graph> scan_serial(int n, ScanOpts opts) {
    check_order(n);
    const int t = n * (n - 1) / 2;
    const std::uint64_t end = 1ull << t;
    std::vector<Graph> reps;
    std::uint64_t rows[kMaxEnumerationOrder];
    for (std::uint64_t mask = 0; mask < end; ++mask)
        if (mask_passes(mask, n, opts, rows)) reps.push_back(Graph::from_upper_bits(n, mask));
    return reps;
}

std::vector<Graph> scan_parallel(int n, ScanOpts opts, int jobs) {
    check_order(n);
    const int t = n * (n - 1) / 2;
    // chunked over the top bits of the mask; chunk order restores determinism
    const int chunk_bits = std::min(t, 12);
    const int shift = t - chunk_bits;
    const std::int64_t chunks = 1ll << chunk_bits;
    std::vector<std::vector<Graph>> found(static_cast<std::size_t>(chunks));

    jobs = resolve_jobs(jobs);
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
        std::uint64_t rows[kMaxEnumerationOrder];
        const std::uint64_t lo = static_cast<std::uint64_t>(chunk) << shift;
        const std::uint64_t hi = (static_cast<std::uint64_t>(chunk) + 1) << shift;
        auto& local = found[static_cast<std::size_t>(chunk)];
        for (std::uint64_t mask = lo; mask < hi; ++mask)
            if (mask_passes(mask, n, opts, rows)) local.push_back(Graph::from_upper_bits(n, mask));
    }

    std::vector<Graph> reps;
    for (auto& part : found)
        for (auto& g : part) reps.push_back(std::move(g));
    return reps;
}

}  // namespace

void set_jobs(int jobs) { g_jobs = jobs < 0 ? 0 : jobs; }

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (g_jobs > 0) return g_jobs;
    if (const char* env = std::getenv("SPECTRA_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;
}

EnumerationStream::EnumerationStream(int n, Constraints c) : n_(n), constraints_(c) {
    check_order(n);
    end_ = 1ull << (n * (n - 1) / 2);
}

std::optional<Graph> EnumerationStream::next() {
    std::uint64_t rows[kMaxEnumerationOrder];
    ScanOpts opts{constraints_, -1};
    while (mask_ < end_) {
        std::uint64_t mask = mask_++;
        if (mask_passes(mask, n_, opts, rows)) return Graph::from_upper_bits(n_, mask);
    }
    return std::nullopt;
}

std::vector<Graph> enumerate_classes_serial(int n, Constraints c) {
    return scan_serial(n, ScanOpts{c, -1});
}

std::vector<Graph> enumerate_classes(int n, Constraints c, int jobs) {
    return scan_parallel(n, ScanOpts{c, -1}, jobs);
}

std::uint64_t count_classes(int n, Constraints c, int jobs) {
    return enumerate_classes(n, c, jobs).size();
}

namespace {

std::string family_label(std::span<const Pattern> family) {
    std::string label;
    for (const Pattern& p : family) {
        if (!label.empty()) label += ",";
        label += p.name().empty() ? "pattern-" + std::to_string(p.target().order()) : p.name();
    }
    return label;
}

// Argmax bookkeeping shared by extremal_search and the h-graph check. Classes
// inside the 1e-9 band of the maximum are grouped by the exact integer
// characteristic polynomial of Q: equal polynomials are genuine ties, the
// rest fall out as runners-up.
struct ArgmaxSet {
    double max_q = -1.0;
    std::vector<std::pair<Graph, double>> in_band;
    double best_below = -1.0;

    void add(const Graph& g, double q) {
        if (q > max_q + kTieBand) {
            for (auto& [bg, bq] : in_band) best_below = std::max(best_below, bq);
            in_band.clear();
            in_band.emplace_back(g, q);
            max_q = q;
        } else if (q >= max_q - kTieBand) {
            in_band.emplace_back(g, q);
            max_q = std::max(max_q, q);
        } else {
            best_below = std::max(best_below, q);
        }
    }

    // returns witnesses; runner-up value (if any) via out parameter
    std::vector<CanonicalKey> resolve(std::optional<double>& runner_gap) {
        std::vector<CanonicalKey> witnesses;
        if (in_band.empty()) {
            runner_gap = std::nullopt;
            return witnesses;
        }
        // winner = polynomial of the numerically largest member
        std::size_t top = 0;
        for (std::size_t i = 1; i < in_band.size(); ++i)
            if (in_band[i].second > in_band[top].second) top = i;
        std::vector<long long> win_poly = charpoly_q_exact(in_band[top].first);
        double runner = best_below;
        for (auto& [g, q] : in_band) {
            if (charpoly_q_exact(g) == win_poly)
                witnesses.push_back(canonical_key(g));
            else
                runner = std::max(runner, q);
        }
        std::sort(witnesses.begin(), witnesses.end());
        runner_gap = runner >= 0.0 ? std::optional<double>(max_q - runner) : std::nullopt;
        return witnesses;
    }
};

ExtremalReport report_from_reps(int n, std::span<const Pattern> family,
                                const std::vector<Graph>& reps) {
    ExtremalReport report;
    report.n = n;
    report.family = family_label(family);
    ArgmaxSet argmax;
    for (const Graph& g : reps) {
        if (!is_free(g, family)) continue;
        ++report.count_free;
        argmax.add(g, q_max(g).q);
    }
    report.max_q = argmax.max_q;
    report.witnesses = argmax.resolve(report.runner_up_gap);
    report.unique = report.witnesses.size() == 1;
    return report;
}

}  // namespace

ExtremalReport extremal_search_serial(int n, std::span<const Pattern> family) {
    return report_from_reps(n, family, enumerate_classes_serial(n, Constraints{true, false}));
}

ExtremalReport extremal_search(int n, std::span<const Pattern> family, int jobs) {
    return report_from_reps(n, family, enumerate_classes(n, Constraints{true, false}, jobs));
}

TheoremCheck verify_theorem(const std::string& id, int n, int jobs) {
    if (n < 4 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("theorem verification handles 4 <= n <= 8");
    TheoremCheck check;
    check.id = id;
    check.n = n;
    check.asserted = n >= 6;

    std::vector<Pattern> family;
    Graph expected(1);
    if (id == "1.2") {
        family.push_back(pattern_theta(1, 2, 2));
        expected = friendship(n);
        check.expected_name = "friendship(" + std::to_string(n) + ")";
        check.expected_q = closed_q_friendship(n);
    } else if (id == "1.3") {
        family.push_back(pattern_theta(1, 2, 3));
        expected = split_star(n, 2);
        check.expected_name = "split-star(" + std::to_string(n) + ",2)";
        check.expected_q = closed_q_splitstar2(n);
    } else if (id == "1.4") {
        family.push_back(pattern_theta(1, 2, 2));
        family.push_back(pattern_f5());
        expected = split_star_plus(n, 1);
        check.expected_name = "split-star-plus(" + std::to_string(n) + ",1)";
        check.expected_q = closed_q_splitstarplus1(n);
    } else {
        throw std::invalid_argument("unknown theorem id: " + id);
    }

    check.expected_key = canonical_key(expected);
    check.report = extremal_search(n, family, jobs);
    check.pass = check.report.unique && check.report.witnesses.size() == 1 &&
                 check.report.witnesses[0] == check.expected_key &&
                 std::abs(check.report.max_q - check.expected_q) <= 1e-8;
    return check;
}

PathBoundCheck verify_path_bound(int n, int k) {
    if (n < 2 || n > 7) throw std::invalid_argument("path bound verification handles 2 <= n <= 7");
    if (k < 2 || k > n) throw std::invalid_argument("path bound verification needs 2 <= k <= n");
    PathBoundCheck check;
    check.n = n;
    check.k = k;
    check.bound = (k - 1) * n / 2.0;

    for (const Graph& g : enumerate_classes(n, Constraints{})) {
        if (has_path_subgraph(g, k + 1)) continue;
        ++check.count_checked;
        int m = g.size();
        check.max_edges = std::max(check.max_edges, m);
        if (2 * m == (k - 1) * n) check.equality_classes.push_back(canonical_key(g));
    }
    std::sort(check.equality_classes.begin(), check.equality_classes.end());

    bool no_overflow = 2 * check.max_edges <= (k - 1) * n;
    if (n % k == 0) {
        Graph target = complete(k);
        for (int copies = 1; copies < n / k; ++copies) target = disjoint_union(target, complete(k));
        check.equality_as_expected =
            check.equality_classes.size() == 1 && check.equality_classes[0] == canonical_key(target);
    } else {
        check.equality_as_expected = check.equality_classes.empty();
    }
    check.pass = no_overflow && check.equality_as_expected;
    return check;
}

HGraphCheck verify_h_graph_max(int n, int k, int jobs) {
    check_order(n);
    if (k < 3 || k > n - 3) throw std::invalid_argument("h-graph verification needs 3 <= k <= n-3");
    HGraphCheck check;
    check.n = n;
    check.k = k;
    check.expected_key = canonical_key(h_graph(n, k));

    ArgmaxSet argmax;
    for (const Graph& g : scan_parallel(n, ScanOpts{Constraints{false, true}, n + k}, jobs))
        argmax.add(g, q_max(g).q);
    check.max_q = argmax.max_q;
    check.witnesses = argmax.resolve(check.runner_up_gap);
    check.pass = check.witnesses.size() == 1 && check.witnesses[0] == check.expected_key;
    return check;
}

namespace {

// exact equality test for q == max degree pressure: the pressure value
// (d^2 + s)/d is an eigenvalue of Q iff it is a root of the characteristic
// polynomial, and any eigenvalue matching an upper bound must be the largest
bool pressure_equals_q_exact(const Graph& g) {
    long long best_num = -1, best_den = 1;
    for (int u = 0; u < g.order(); ++u) {
        long long d = degree(g, u);
        long long s = 0;
        for (VertexSet m = g.neighbors(u); m; m &= m - 1) s += degree(g, std::countr_zero(m));
        long long num = d * d + s, den = d;
        if (best_num < 0 || num * best_den > best_num * den) {
            best_num = num;
            best_den = den;
        }
    }
    return is_rational_root(charpoly_q_exact(g), best_num, best_den);
}

}  // namespace

BoundChainCheck verify_bound_chain(int max_n, int jobs) {
    if (max_n < 2 || max_n > 7)
        throw std::invalid_argument("bound chain verification handles 2 <= max_n <= 7");
    BoundChainCheck check;
    check.max_n = max_n;
    for (int n = 2; n <= max_n; ++n) {
        for (const Graph& g : enumerate_classes(n, Constraints{true, false}, jobs)) {
            ++check.graphs_checked;
            double q = q_max(g).q;
            double pressure = max_degree_pressure(g).second;
            double das = das_bound(g);
            if (q > pressure + kTieBand || pressure > das + kTieBand) {
                ++check.chain_violations;
                if (check.failures.size() < 16) check.failures.push_back(graph6_encode(g));
                continue;
            }
            if (!is_connected(g)) continue;
            bool equal = std::abs(q - pressure) <= kTieBand && pressure_equals_q_exact(g);
            bool predicted = is_regular(g) || is_semiregular_bipartite(g);
            if (equal != predicted) {
                ++check.equality_mismatches;
                if (check.failures.size() < 16) check.failures.push_back(graph6_encode(g));
            }
        }
    }
    check.pass = check.chain_violations == 0 && check.equality_mismatches == 0;
    return check;
}

EdgeMonotonicityCheck verify_edge_monotonicity(int max_n, int jobs) {
    if (max_n < 2 || max_n > 7)
        throw std::invalid_argument("edge monotonicity verification handles 2 <= max_n <= 7");
    EdgeMonotonicityCheck check;
    check.max_n = max_n;
    for (int n = 2; n <= max_n; ++n) {
        for (const Graph& g : enumerate_classes(n, Constraints{false, true}, jobs)) {
            double q = q_max(g).q;
            for (int u = 0; u < n; ++u) {
                for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    if (v < u) continue;
                    ++check.deletions_checked;
                    if (q_max(g.without_edge(u, v)).q >= q - 1e-12) {
                        if (check.failures.size() < 16) check.failures.push_back(graph6_encode(g));
                    }
                }
            }
        }
    }
    check.pass = check.failures.empty();
    return check;
}

}  // namespace spectra
