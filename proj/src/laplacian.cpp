#include "laplacian.hpp"

#include <cmath>
#include <string>

namespace netepi {

LaplacianOperator LaplacianOperator::build(const WeightedGraph& g)
{
    LaplacianOperator L;
    L.n_ = g.node_count();
    L.edges_ = g.edges();

    std::vector<std::int64_t> counts(L.n_ + 1, 0);
    for (const auto& e : L.edges_) {
        ++counts[e.u + 1];
        ++counts[e.v + 1];
    }
    L.row_ptr_.resize(L.n_ + 1, 0);
    for (std::int32_t i = 0; i < L.n_; ++i)
        L.row_ptr_[i + 1] = L.row_ptr_[i] + counts[i + 1];

    const auto total = L.row_ptr_[L.n_];
    L.col_.resize(total);
    L.val_.resize(total);
    std::vector<std::int64_t> cursor(L.row_ptr_.begin(), L.row_ptr_.end() - 1);
    // Edges are sorted by (u,v) with u < v, so each row's columns come out
    // already sorted: row i first collects u's from edges (u,i), then v's
    // from edges (i,v).
    for (const auto& e : L.edges_) {
        L.col_[cursor[e.u]] = e.v;
        L.val_[cursor[e.u]] = e.w;
        ++cursor[e.u];
        L.col_[cursor[e.v]] = e.u;
        L.val_[cursor[e.v]] = e.w;
        ++cursor[e.v];
    }

    L.weighted_degree_.assign(L.n_, 0.0);
    for (std::int32_t i = 0; i < L.n_; ++i) {
        double deg = 0.0;
        for (auto k = L.row_ptr_[i]; k < L.row_ptr_[i + 1]; ++k)
            deg += L.val_[k];
        L.weighted_degree_[i] = deg;
    }
    return L;
}

void LaplacianOperator::require_dimension(std::size_t len, const char* what) const
{
    if (static_cast<std::int32_t>(len) != n_)
        fail(ErrorCode::DimensionMismatch,
             std::string(what) + ": vector length " + std::to_string(len) +
                 " does not match dimension " + std::to_string(n_));
}

void LaplacianOperator::apply(std::span<const double> f, std::span<double> out) const
{
    require_dimension(f.size(), "apply");
    require_dimension(out.size(), "apply output");
    for (std::int32_t i = 0; i < n_; ++i) {
        const double fi = f[i];
        double acc = 0.0;
        for (auto k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            acc += val_[k] * (f[col_[k]] - fi);
        out[i] = acc;
    }
}

std::vector<double> LaplacianOperator::apply(std::span<const double> f) const
{
    std::vector<double> out(n_);
    apply(f, out);
    return out;
}

double LaplacianOperator::quadratic_form(std::span<const double> f,
                                         std::span<const double> g) const
{
    require_dimension(f.size(), "quadratic_form");
    require_dimension(g.size(), "quadratic_form");
    double acc = 0.0;
    for (std::int32_t i = 0; i < n_; ++i) {
        const double gi = g[i];
        double row = 0.0;
        for (auto k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            row += val_[k] * (g[col_[k]] - gi);
        acc += f[i] * row;
    }
    return acc;
}

double LaplacianOperator::edge_form(std::span<const double> f,
                                    std::span<const double> g) const
{
    require_dimension(f.size(), "edge_form");
    require_dimension(g.size(), "edge_form");
    double acc = 0.0;
    for (const auto& e : edges_)
        acc += e.w * (f[e.v] - f[e.u]) * (g[e.v] - g[e.u]);
    return acc;
}

std::span<const std::int32_t> LaplacianOperator::row_cols(std::int32_t i) const
{
    return {col_.data() + row_ptr_[i],
            static_cast<std::size_t>(row_ptr_[i + 1] - row_ptr_[i])};
}

std::span<const double> LaplacianOperator::row_weights(std::int32_t i) const
{
    return {val_.data() + row_ptr_[i],
            static_cast<std::size_t>(row_ptr_[i + 1] - row_ptr_[i])};
}

double green_identity_residual(const LaplacianOperator& L,
                               std::span<const double> f,
                               std::span<const double> g)
{
    return std::abs(L.quadratic_form(f, g) + L.edge_form(f, g));
}

} // namespace netepi
