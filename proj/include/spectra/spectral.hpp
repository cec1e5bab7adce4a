#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

// dense symmetric matrix, row major
struct Matrix {
    int n = 0;
    std::vector<double> a;

    explicit Matrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Q(G) = D(G) + A(G)
Matrix signless_laplacian(const Graph& g);

struct SpectralResult {
    double q = 0.0;                // largest eigenvalue of Q(G)
    std::vector<double> vector;    // unit eigenvector, first nonzero entry positive
    double residual = 0.0;         // ||Qx - qx||_2
    int iterations = 0;            // Jacobi rotations applied
};

// Largest signless Laplacian eigenvalue by cyclic Jacobi diagonalization.
// Deterministic; residual comes out near machine precision.
SpectralResult q_max(const Graph& g);

// Jacobi on an arbitrary symmetric matrix; diagonal of `a` ends up holding the
// eigenvalues, `vecs` (if non-null) the eigenvectors in columns. Returns the
// rotation count.
int jacobi_eigen(Matrix& a, Matrix* vecs);

struct PowerIterationResult {
    double value = 0.0;
    int iterations = 0;
};

// Rayleigh-quotient power iteration, the independent cross-check for q_max.
PowerIterationResult power_iteration_largest(const Matrix& m, double tol = 1e-12,
                                             int max_iter = 1000000);

// monic cubic x^3 + a x^2 + b x + c with a bracket around its largest root
struct CubicSpec {
    double a = 0, b = 0, c = 0;
    double lo = 0, hi = 0;
};

// Bisection on the bracket to 1e-12; the bracket is widened by one on each
// side if the endpoint signs do not enclose a root.
double largest_root(const CubicSpec& cubic, double tol = 1e-12);

// closed forms for q of the named families
double closed_q_friendship(int n);       // n >= 3; radical for odd n, cubic root for even n
double closed_q_splitstar2(int n);       // n >= 4
double closed_q_splitstarplus1(int n);   // n >= 4, largest root of x^3-(n+3)x^2+3nx-4
double q_cone_over_triangles(int n);     // n = 1 mod 3, n >= 4

// paper-style brackets used by the reports; domains as in the closed forms
double friendship_bracket_lo(int n);     // n + 2/(n-1) odd, n + 2/n even
double friendship_bracket_hi(int n);     // n + 2/(n-2) odd, n + 2/(n-1) even
double splitstar2_lower(int n);          // n + 2 - 4/(n+1)

// d(u) + (sum of neighbor degrees)/d(u); an upper bound for q when maximized
double degree_pressure(const Graph& g, int u);
// lowest-indexed maximizer and its value; requires no isolated vertices
std::pair<int, double> max_degree_pressure(const Graph& g);

// 2m/(n-1) + n - 2; requires n >= 2
double das_bound(const Graph& g);

struct NeighborhoodDecomposition {
    int degree = 0;
    int inner_edges = 0;     // e(G[N(u)])
    int outgoing_edges = 0;  // e(N(u), N^2(u))
};
// satisfies sum of neighbor degrees = degree + 2*inner + outgoing
NeighborhoodDecomposition neighborhood_decomposition(const Graph& g, int u);

struct NonEquitableError : std::invalid_argument {
    NonEquitableError(int first, int second, int block, std::string msg)
        : std::invalid_argument(std::move(msg)), witness_u(first), witness_v(second),
          against_block(block) {}
    int witness_u;
    int witness_v;
    int against_block;
};

enum class QuotientMode { adjacency, signless_laplacian };

// k x k quotient of an equitable partition; entries are exact integers
struct QuotientMatrix {
    int k = 0;
    std::vector<long long> b;  // row major
    std::vector<VertexSet> partition;

    long long at(int i, int j) const { return b[static_cast<std::size_t>(i) * k + j]; }
    std::vector<double> as_doubles() const { return std::vector<double>(b.begin(), b.end()); }
};

// Verifies blocks are nonempty, disjoint, covering, and equitable; throws
// NonEquitableError naming two vertices of one block with different counts.
QuotientMatrix quotient_matrix(const Graph& g, std::span<const VertexSet> partition,
                               QuotientMode mode);

// characteristic polynomial plus bisection inside the Cauchy bound; k <= 4
double largest_eigenvalue_small(int k, std::span<const double> b);
double largest_eigenvalue_small(const QuotientMatrix& q);

// Exact integer characteristic polynomial (Faddeev-LeVerrier). Returns
// coefficients c[0..k] of sum c[i] x^i with c[k] = 1.
std::vector<long long> charpoly_exact(int k, std::span<const long long> entries);
std::vector<long long> charpoly_q_exact(const Graph& g);  // of Q(G), n <= 12

// exact sign test: is num/den a root of the integer polynomial?
bool is_rational_root(std::span<const long long> coeffs, long long num, long long den);

}  // namespace spectra
