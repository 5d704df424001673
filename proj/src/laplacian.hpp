#ifndef NETEPI_LAPLACIAN_HPP
#define NETEPI_LAPLACIAN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "graph.hpp"

namespace netepi {

/// Discrete graph Laplacian: (Lf)(x) = sum over neighbors y of
/// w(x,y) * [f(y) - f(x)]. Matrix view: off-diagonal L_xy = w(x,y) >= 0,
/// diagonal L_xx = -(sum of incident weights), so every row sums to zero
/// exactly. Immutable after construction; safe to share across threads.
class LaplacianOperator {
public:
    static LaplacianOperator build(const WeightedGraph& g);

    std::int32_t dimension() const { return n_; }

    /// Stored entries of the matrix form: 2|E| off-diagonals plus the full
    /// diagonal.
    std::int64_t nnz() const { return static_cast<std::int64_t>(col_.size()) + n_; }

    double diagonal(std::int32_t i) const { return -weighted_degree_[i]; }
    double weighted_degree(std::int32_t i) const { return weighted_degree_[i]; }

    /// out[x] = sum_{y~x} w(x,y) * (f[y] - f[x]). The difference form keeps
    /// constant vectors exactly in the kernel. Fixed per-row summation order.
    void apply(std::span<const double> f, std::span<double> out) const;
    std::vector<double> apply(std::span<const double> f) const;

    /// sum_x f(x) * (Lg)(x)
    double quadratic_form(std::span<const double> f, std::span<const double> g) const;

    /// sum over undirected edges of w(u,v) * (f[v]-f[u]) * (g[v]-g[u]);
    /// equals one half of the ordered-pair double sum.
    double edge_form(std::span<const double> f, std::span<const double> g) const;

    // CSR row access (off-diagonal entries only), used by tests.
    std::span<const std::int32_t> row_cols(std::int32_t i) const;
    std::span<const double> row_weights(std::int32_t i) const;

private:
    LaplacianOperator() = default;

    std::int32_t n_ = 0;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> col_;
    std::vector<double> val_;
    std::vector<double> weighted_degree_;
    std::vector<Edge> edges_;

    void require_dimension(std::size_t len, const char* what) const;
};

/// Floating-point residual of the summation-by-parts identity
///   sum_x f(x) (Lg)(x) = -1/2 sum_{x,y} w(x,y)[f(y)-f(x)][g(y)-g(x)];
/// exact in real arithmetic, so the return value is pure rounding error.
double green_identity_residual(const LaplacianOperator& L,
                               std::span<const double> f,
                               std::span<const double> g);

} // namespace netepi

#endif
