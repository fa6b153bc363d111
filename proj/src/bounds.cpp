#include "chromspec/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "chromspec/kernels.hpp"

namespace chromspec::bounds {

using linalg::eigen_hermitian;
using linalg::eigen_symmetric;

double hoffman_bound(const graphs::Graph& g) {
    if (g.size() == 0)
        throw UndefinedBoundError("Hoffman bound is undefined for an edgeless graph");
    const auto spectrum = eigen_symmetric(graphs::adjacency_matrix(g));
    return 1.0 + spectrum.max() / (-spectrum.min());
}

double nikiforov_bound(const graphs::Graph& g) {
    if (g.size() == 0)
        throw UndefinedBoundError("Laplacian bound is undefined for an edgeless graph");
    const auto spec_a = eigen_symmetric(graphs::adjacency_matrix(g));
    const auto spec_l = eigen_symmetric(graphs::laplacian(g));
    const double denom = spec_l.max() - spec_a.max();
    if (denom <= 1e-9)
        throw std::logic_error("mu(L) - mu(A) = " + std::to_string(denom) +
                               " is not safely positive on a nonempty graph");
    return 1.0 + spec_a.max() / denom;
}

double ratio_bound_alpha(const graphs::Graph& g) {
    const auto k = graphs::regular_degree(g);
    if (!k) throw ValidationError("ratio bound requires a regular graph");
    if (*k < 1) throw ValidationError("ratio bound requires degree k >= 1");
    const auto spectrum = eigen_symmetric(graphs::adjacency_matrix(g));
    const double tau = std::fabs(spectrum.min());
    return double(g.order()) * tau / (double(*k) + tau);
}

double theorem1_gap(const linalg::HermitianMatrix& a, const linalg::BlockPartition& p,
                    const linalg::SymmetricMatrix& b) {
    if (a.dim() != p.size() || a.dim() != b.dim())
        throw DimensionError("matrix and partition dimensions differ");
    if (!linalg::validate_block_zero(a, p))
        throw ValidationError("matrix has a nonzero diagonal block");
    const int r = p.parts();
    const auto left = eigen_hermitian(linalg::scaled_combination(b, a, -1.0));
    const auto right = eigen_hermitian(linalg::scaled_combination(b, a, 1.0 / double(r - 1)));
    return left.max() - right.max();
}

double lemma1_gap(const linalg::SymmetricMatrix& a, int r) {
    if (r < 2) throw ValidationError("lemma gap requires r >= 2");
    if (!a.is_nonnegative()) throw ValidationError("matrix has a negative entry");

    // irreducibility of a symmetric nonnegative matrix == connected support graph
    const int n = a.dim();
    {
        std::vector<char> seen(std::size_t(n), 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        int visited = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v = 0; v < n; ++v) {
                if (!seen[std::size_t(v)] && u != v && a(u, v) != 0.0) {
                    seen[std::size_t(v)] = 1;
                    ++visited;
                    queue.push_back(v);
                }
            }
        }
        if (visited != n) throw ValidationError("matrix is reducible (support graph disconnected)");
    }

    const auto rowsum_diag = linalg::SymmetricMatrix::diagonal(a.row_sums());
    std::vector<double> m(std::size_t(n) * n);
    kernels::scaled_add(m.data(), rowsum_diag.data().data(), a.data().data(), m.size(),
                        1.0 / double(r - 1));
    const auto lhs = linalg::detail::jacobi_eigenvalues(std::move(m), n, 100);
    const auto spec_a = eigen_symmetric(a);
    return lhs.max() - double(r) / double(r - 1) * spec_a.max();
}

double signless_gap(const graphs::Graph& g) {
    if (!graphs::is_connected(g))
        throw ValidationError("signless gap requires a connected graph");
    const auto q = eigen_symmetric(graphs::signless_laplacian(g));
    const auto l = eigen_symmetric(graphs::laplacian(g));
    return q.max() - l.max();
}

BoundReport bound_report(const graphs::Graph& g, const ReportOptions& opts) {
    BoundReport report;
    report.n = g.order();
    report.m = g.size();
    report.connected = graphs::is_connected(g);

    const auto spec_a = eigen_symmetric(graphs::adjacency_matrix(g));
    const auto spec_l = eigen_symmetric(graphs::laplacian(g));
    report.mu_a = spec_a.max();
    report.mu_min_a = spec_a.min();
    report.mu_l = spec_l.max();

    if (g.size() > 0) {
        report.bounds_defined = true;
        report.hoffman = 1.0 + report.mu_a / (-report.mu_min_a);
        report.hoffman_ceil = ceil_with_slack(report.hoffman);
        const double denom = report.mu_l - report.mu_a;
        if (denom <= 1e-9)
            throw std::logic_error("mu(L) - mu(A) is not safely positive on a nonempty graph");
        report.nikiforov = 1.0 + report.mu_a / denom;
        report.nikiforov_ceil = ceil_with_slack(report.nikiforov);
    }

    if (opts.compute_chi || opts.compute_equality)
        report.chi = coloring::chromatic_number_exact(g, opts.node_budget);
    if (opts.compute_alpha)
        report.alpha = coloring::independence_number_exact(g, opts.node_budget);

    if (const auto k = graphs::regular_degree(g); k && *k >= 1) {
        const double tau = std::fabs(report.mu_min_a);
        report.ratio_bound = double(g.order()) * tau / (double(*k) + tau);
    }

    if (opts.compute_equality && report.bounds_defined && report.chi &&
        report.chi->status == coloring::SolveStatus::exact && report.chi->chi >= 2) {
        report.equality =
            coloring::equality_witness(g, report.chi->witness, spec_a, opts.equality_tol);
    }
    return report;
}

} // namespace chromspec::bounds
