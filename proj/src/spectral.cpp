#include "spectra/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spectra {

Matrix signless_laplacian(const Graph& g) {
    int n = g.order();
    Matrix q(n);
    for (int u = 0; u < n; ++u) {
        q.at(u, u) = degree(g, u);
        for (VertexSet m = g.neighbors(u); m; m &= m - 1) q.at(u, std::countr_zero(m)) = 1.0;
    }
    return q;
}

int jacobi_eigen(Matrix& a, Matrix* vecs) {
    const int n = a.n;
    if (vecs) {
        *vecs = Matrix(n);
        for (int i = 0; i < n; ++i) vecs->at(i, i) = 1.0;
    }
    if (n == 1) return 0;

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a.at(i, j)));
    if (scale == 0.0) return 0;
    const double stop = 1e-15 * scale;

    int rotations = 0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a.at(p, q)));
        if (off <= stop) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (std::abs(apq) <= stop * 1e-2) continue;
                double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) t = -t;
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a.at(p, p), aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = a.at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a.at(i, p), aiq = a.at(i, q);
                    a.at(i, p) = a.at(p, i) = aip - s * (aiq + tau * aip);
                    a.at(i, q) = a.at(q, i) = aiq + s * (aip - tau * aiq);
                }
                if (vecs) {
                    for (int i = 0; i < n; ++i) {
                        double vip = vecs->at(i, p), viq = vecs->at(i, q);
                        vecs->at(i, p) = vip - s * (viq + tau * vip);
                        vecs->at(i, q) = viq + s * (vip - tau * viq);
                    }
                }
                ++rotations;
            }
        }
    }
    return rotations;
}

SpectralResult q_max(const Graph& g) {
    const int n = g.order();
    const Matrix q = signless_laplacian(g);
    Matrix work = q;
    Matrix vecs(n);
    SpectralResult result;
    result.iterations = jacobi_eigen(work, &vecs);

    int best = 0;
    for (int i = 1; i < n; ++i)
        if (work.at(i, i) > work.at(best, best)) best = i;
    result.q = work.at(best, best);

    result.vector.resize(n);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        result.vector[i] = vecs.at(i, best);
        norm += result.vector[i] * result.vector[i];
    }
    norm = std::sqrt(norm);
    for (double& x : result.vector) x /= norm;
    for (int i = 0; i < n; ++i) {
        if (std::abs(result.vector[i]) > 1e-12) {
            if (result.vector[i] < 0)
                for (double& x : result.vector) x = -x;
            break;
        }
    }

    double res2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += q.at(i, j) * result.vector[j];
        double diff = row - result.q * result.vector[i];
        res2 += diff * diff;
    }
    result.residual = std::sqrt(res2);
    return result;
}

PowerIterationResult power_iteration_largest(const Matrix& m, double tol, int max_iter) {
    const int n = m.n;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    PowerIterationResult out;
    for (int it = 1; it <= max_iter; ++it) {
        double ynorm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
            y[i] = s;
            ynorm2 += s * s;
        }
        double rho = 0.0;
        for (int i = 0; i < n; ++i) rho += x[i] * y[i];
        out.value = rho;
        out.iterations = it;
        double res2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double d = y[i] - rho * x[i];
            res2 += d * d;
        }
        if (std::sqrt(res2) <= tol * std::max(1.0, std::abs(rho))) break;
        double ynorm = std::sqrt(ynorm2);
        if (ynorm == 0.0) {  // x in the kernel; 0 is the dominant eigenvalue here
            out.value = 0.0;
            break;
        }
        for (int i = 0; i < n; ++i) x[i] = y[i] / ynorm;
    }
    return out;
}

namespace {

double cubic_eval(const CubicSpec& c, double x) { return ((x + c.a) * x + c.b) * x + c.c; }

}  // namespace

double largest_root(const CubicSpec& cubic, double tol) {
    double lo = cubic.lo, hi = cubic.hi;
    if (!(cubic_eval(cubic, lo) < 0.0)) lo -= 1.0;
    if (!(cubic_eval(cubic, hi) > 0.0)) hi += 1.0;
    if (!(cubic_eval(cubic, lo) < 0.0 && cubic_eval(cubic, hi) > 0.0))
        throw std::invalid_argument("cubic bracket does not enclose a sign change");
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        (cubic_eval(cubic, mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double closed_q_friendship(int n) {
    if (n < 3) throw std::invalid_argument("closed_q_friendship needs n >= 3");
    if (n % 2 == 1) {
        double d = n - 2.0;
        return (n + 2.0 + std::sqrt(d * d + 8.0)) / 2.0;
    }
    CubicSpec c{-(n + 3.0), 3.0 * n, -(2.0 * n - 4.0), n + 2.0 / n, n + 2.0 / (n - 1.0)};
    return largest_root(c);
}

double closed_q_splitstar2(int n) {
    if (n < 4) throw std::invalid_argument("closed_q_splitstar2 needs n >= 4");
    return (n + 2.0 + std::sqrt(static_cast<double>(n) * n + 4.0 * n - 12.0)) / 2.0;
}

double closed_q_splitstarplus1(int n) {
    if (n < 4) throw std::invalid_argument("closed_q_splitstarplus1 needs n >= 4");
    CubicSpec c{-(n + 3.0), 3.0 * n, -4.0, static_cast<double>(n), n + 1.0};
    return largest_root(c);
}

double q_cone_over_triangles(int n) {
    if (n < 4 || n % 3 != 1)
        throw std::invalid_argument("q_cone_over_triangles needs n = 1 mod 3, n >= 4");
    double d = n - 4.0;
    return (n + 4.0 + std::sqrt(d * d + 16.0)) / 2.0;
}

double friendship_bracket_lo(int n) { return n % 2 == 1 ? n + 2.0 / (n - 1.0) : n + 2.0 / n; }
double friendship_bracket_hi(int n) { return n % 2 == 1 ? n + 2.0 / (n - 2.0) : n + 2.0 / (n - 1.0); }
double splitstar2_lower(int n) { return n + 2.0 - 4.0 / (n + 1.0); }

double degree_pressure(const Graph& g, int u) {
    int d = degree(g, u);
    if (d == 0) throw std::invalid_argument("degree_pressure undefined on an isolated vertex");
    long long s = 0;
    for (VertexSet m = g.neighbors(u); m; m &= m - 1) s += degree(g, std::countr_zero(m));
    return d + static_cast<double>(s) / d;
}

std::pair<int, double> max_degree_pressure(const Graph& g) {
    if (min_degree(g) == 0)
        throw std::invalid_argument("max_degree_pressure requires no isolated vertices");
    int arg = 0;
    double best = -1.0;
    for (int u = 0; u < g.order(); ++u) {
        double p = degree_pressure(g, u);
        if (p > best) {
            best = p;
            arg = u;
        }
    }
    return {arg, best};
}

double das_bound(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("das_bound needs n >= 2");
    return 2.0 * g.size() / (g.order() - 1.0) + g.order() - 2.0;
}

NeighborhoodDecomposition neighborhood_decomposition(const Graph& g, int u) {
    NeighborhoodDecomposition out;
    out.degree = degree(g, u);
    if (out.degree == 0)
        throw std::invalid_argument("neighborhood decomposition undefined on an isolated vertex");
    VertexSet nb = g.neighbors(u);
    out.inner_edges = induced_subgraph(g, nb).size();
    out.outgoing_edges = edges_between(g, nb, second_neighborhood(g, u));
    return out;
}

QuotientMatrix quotient_matrix(const Graph& g, std::span<const VertexSet> partition,
                               QuotientMode mode) {
    const int k = static_cast<int>(partition.size());
    if (k == 0) throw std::invalid_argument("empty partition");
    VertexSet seen = 0;
    for (VertexSet block : partition) {
        if (!block) throw std::invalid_argument("empty partition block");
        if (block & seen) throw std::invalid_argument("partition blocks overlap");
        if (block & ~g.vertices()) throw std::invalid_argument("partition block out of range");
        seen |= block;
    }
    if (seen != g.vertices()) throw std::invalid_argument("partition does not cover the graph");

    QuotientMatrix out;
    out.k = k;
    out.b.assign(static_cast<std::size_t>(k) * k, 0);
    out.partition.assign(partition.begin(), partition.end());
    for (int i = 0; i < k; ++i) {
        int first = std::countr_zero(partition[i]);
        for (int j = 0; j < k; ++j)
            out.b[static_cast<std::size_t>(i) * k + j] =
                std::popcount(g.neighbors(first) & partition[j]);
        for (VertexSet m = partition[i] & (partition[i] - 1); m; m &= m - 1) {
            int v = std::countr_zero(m);
            for (int j = 0; j < k; ++j) {
                long long cnt = std::popcount(g.neighbors(v) & partition[j]);
                if (cnt != out.at(i, j))
                    throw NonEquitableError(
                        first, v, j,
                        "partition not equitable: vertices " + std::to_string(first) + " and " +
                            std::to_string(v) + " of block " + std::to_string(i) +
                            " count " + std::to_string(out.at(i, j)) + " vs " + std::to_string(cnt) +
                            " neighbors in block " + std::to_string(j));
            }
        }
    }
    if (mode == QuotientMode::signless_laplacian) {
        for (int i = 0; i < k; ++i) {
            long long deg = 0;
            for (int j = 0; j < k; ++j) deg += out.at(i, j);
            out.b[static_cast<std::size_t>(i) * k + i] += deg;
        }
    }
    return out;
}

namespace {

// characteristic polynomial of a k x k matrix in doubles via Faddeev-LeVerrier
std::vector<double> charpoly_double(int k, std::span<const double> a) {
    std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
    coeffs[k] = 1.0;
    std::vector<double> m(a.begin(), a.end());
    for (int step = 1; step <= k; ++step) {
        if (step > 1) {
            // m = a * (m + c I)
            std::vector<double> tmp(m);
            for (int i = 0; i < k; ++i) tmp[static_cast<std::size_t>(i) * k + i] += coeffs[k - step + 1];
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    double s = 0.0;
                    for (int l = 0; l < k; ++l)
                        s += a[static_cast<std::size_t>(i) * k + l] * tmp[static_cast<std::size_t>(l) * k + j];
                    m[static_cast<std::size_t>(i) * k + j] = s;
                }
        }
        double trace = 0.0;
        for (int i = 0; i < k; ++i) trace += m[static_cast<std::size_t>(i) * k + i];
        coeffs[k - step] = -trace / step;
    }
    return coeffs;
}

double poly_eval(std::span<const double> coeffs, double x) {
    double v = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

}  // namespace

double largest_eigenvalue_small(int k, std::span<const double> b) {
    if (k < 1 || k > 4) throw std::invalid_argument("largest_eigenvalue_small handles k in 1..4");
    if (static_cast<int>(b.size()) != k * k) throw std::invalid_argument("matrix size mismatch");
    if (k == 1) return b[0];
    std::vector<double> coeffs = charpoly_double(k, b);
    double cauchy = 1.0;
    for (int i = 0; i < k; ++i) cauchy = std::max(cauchy, std::abs(coeffs[i]));
    double hi = 1.0 + cauchy;
    // walk down from the Cauchy bound to a sign change around the largest real root
    double step = std::max(1.0, hi / 256.0);
    double lo = hi - step;
    while (lo > -hi - step && poly_eval(coeffs, lo) > 0.0) lo -= step;
    if (poly_eval(coeffs, lo) > 0.0)
        throw std::invalid_argument("no real eigenvalue bracket found");
    double high = lo + step;
    for (int it = 0; it < 200 && high - lo > 1e-13; ++it) {
        double mid = 0.5 * (lo + high);
        (poly_eval(coeffs, mid) < 0.0 ? lo : high) = mid;
    }
    return 0.5 * (lo + high);
}

double largest_eigenvalue_small(const QuotientMatrix& q) {
    std::vector<double> b = q.as_doubles();
    return largest_eigenvalue_small(q.k, b);
}

std::vector<long long> charpoly_exact(int k, std::span<const long long> entries) {
    if (static_cast<int>(entries.size()) != k * k) throw std::invalid_argument("matrix size mismatch");
    using I = __int128;
    std::vector<I> a(entries.begin(), entries.end());
    std::vector<I> m(a), tmp(a.size());
    std::vector<I> coeffs(static_cast<std::size_t>(k) + 1, 0);
    coeffs[k] = 1;
    for (int step = 1; step <= k; ++step) {
        if (step > 1) {
            tmp = m;
            for (int i = 0; i < k; ++i) tmp[static_cast<std::size_t>(i) * k + i] += coeffs[k - step + 1];
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    I s = 0;
                    for (int l = 0; l < k; ++l)
                        s += a[static_cast<std::size_t>(i) * k + l] * tmp[static_cast<std::size_t>(l) * k + j];
                    m[static_cast<std::size_t>(i) * k + j] = s;
                }
        }
        I trace = 0;
        for (int i = 0; i < k; ++i) trace += m[static_cast<std::size_t>(i) * k + i];
        if (trace % step != 0) throw std::logic_error("charpoly trace not divisible");
        coeffs[k - step] = -(trace / step);
    }
    std::vector<long long> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > I(9223372036854775807LL) || coeffs[i] < -I(9223372036854775807LL) - 1)
            throw std::overflow_error("characteristic polynomial coefficient overflow");
        out[i] = static_cast<long long>(coeffs[i]);
    }
    return out;
}

std::vector<long long> charpoly_q_exact(const Graph& g) {
    const int n = g.order();
    if (n > 12) throw std::invalid_argument("exact charpoly limited to n <= 12");
    std::vector<long long> q(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        q[static_cast<std::size_t>(u) * n + u] = degree(g, u);
        for (VertexSet m = g.neighbors(u); m; m &= m - 1)
            q[static_cast<std::size_t>(u) * n + std::countr_zero(m)] = 1;
    }
    return charpoly_exact(n, q);
}

bool is_rational_root(std::span<const long long> coeffs, long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial");
    const std::size_t k = coeffs.size() - 1;
    long double maxc = 1.0L;
    for (long long c : coeffs) maxc = std::max(maxc, fabsl(static_cast<long double>(c)));
    long double base = std::max<long double>(std::abs(static_cast<long double>(num)), den);
    if ((k + 1) * maxc * powl(base, static_cast<long double>(k)) > 1e37L)
        throw std::overflow_error("rational root test out of exact range");
    // Horner on den^k * p(num/den), exact in 128-bit integers
    using I = __int128;
    I value = coeffs[k];
    I pw = 1;
    for (std::size_t i = k; i-- > 0;) {
        pw *= den;
        value = value * num + I(coeffs[i]) * pw;
    }
    return value == 0;
}

}  // namespace spectra
