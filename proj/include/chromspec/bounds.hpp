#pragma once

#include <cstdint>
#include <optional>

#include "chromspec/coloring.hpp"
#include "chromspec/graph.hpp"
#include "chromspec/linalg.hpp"

namespace chromspec::bounds {

// Integer bound with slack: floating error must never inflate a lower bound
// past the true chromatic number.
inline int ceil_with_slack(double v) { return static_cast<int>(std::ceil(v - 1e-9)); }

// chi >= 1 + mu(A) / (-mu_min(A)); needs at least one edge.
double hoffman_bound(const graphs::Graph& g);

// chi >= 1 + mu(A) / (mu(L) - mu(A)); needs at least one edge. Throws
// std::logic_error if the denominator is not safely positive, which cannot
// happen for a nonempty graph.
double nikiforov_bound(const graphs::Graph& g);

// alpha <= n*tau / (k + tau) for k-regular graphs, tau = |mu_min(A)|.
double ratio_bound_alpha(const graphs::Graph& g);

// mu(B - A) - mu(B + A/(r-1)) for Hermitian A with zero diagonal blocks and
// real diagonal B; nonnegative by the block-partition eigenvalue inequality.
double theorem1_gap(const linalg::HermitianMatrix& a, const linalg::BlockPartition& p,
                    const linalg::SymmetricMatrix& b);

// mu(R + A/(r-1)) - r/(r-1) * mu(A) for irreducible nonnegative symmetric A,
// R the diagonal of row sums; zero exactly when all row sums are equal.
double lemma1_gap(const linalg::SymmetricMatrix& a, int r);

// mu(D + A) - mu(D - A) for connected G; zero iff G is bipartite.
double signless_gap(const graphs::Graph& g);

struct ReportOptions {
    bool compute_chi = false;
    bool compute_alpha = false;
    bool compute_equality = false; // implies compute_chi
    std::uint64_t node_budget = coloring::kDefaultNodeBudget;
    double equality_tol = 1e-6;
};

struct BoundReport {
    int n = 0;
    int m = 0;
    bool connected = false;
    // bounds are undefined for edgeless graphs (both denominators vanish)
    bool bounds_defined = false;
    double mu_a = 0.0;
    double mu_min_a = 0.0;
    double mu_l = 0.0;
    double hoffman = 0.0;
    int hoffman_ceil = 0;
    double nikiforov = 0.0;
    int nikiforov_ceil = 0;
    std::optional<coloring::ChiResult> chi;
    std::optional<coloring::AlphaResult> alpha;
    std::optional<double> ratio_bound; // regular graphs with k >= 1 only
    std::optional<coloring::EqualityReport> equality;
};

BoundReport bound_report(const graphs::Graph& g, const ReportOptions& opts = {});

} // namespace chromspec::bounds
