#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromspec/graph.hpp"
#include "chromspec/linalg.hpp"

namespace chromspec::harness {

struct Range {
    int min = 0;
    int max = 0;
};

struct FuzzConfig {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    Range n_range{2, 24};
    Range r_range{2, 6};
    double entry_scale = 1.0;
    double diag_scale = 1.0;
    double tolerance = 1e-8;

    void validate() const; // throws ValidationError
};

// Closed vocabulary of structural tags so downstream tabulation stays stable.
enum class Family {
    random,             // unconstrained random instance
    bipartite_b_zero,   // 2-block support, B = 0
    bipartite_b_degree, // bipartite graph adjacency, B = degree diagonal
    singleton_complete, // scaled complete-graph pattern, singleton parts
    rowsum_diagonal,    // nonnegative blocked matrix, B = rowsum diagonal
    constant_rowsum,    // circulant-support equal-rowsum instance
    rowsum_spread,      // row sums forced >= 0.5 * entry_scale apart
    exhaustive,         // exhaustive small-graph sweep
    gnp,                // random graph sample
    bipartite_sample,   // constructed connected bipartite graph sample
};
std::string_view family_name(Family f) noexcept;

struct InstanceTags {
    Family family = Family::random;
    int r = 0;
    std::vector<int> block_sizes; // sorted ascending
    bool b_is_zero = false;
    bool b_is_rowsum_diagonal = false;
    bool bipartite_support = false;

    bool operator==(const InstanceTags&) const = default;
};

// One reproducible observation: the instance is a pure function of
// (config seed, trial index), and the digest pins its bytes.
struct Record {
    std::uint64_t trial = 0;
    std::string digest;
    double gap = 0.0;
    InstanceTags tags;
    // set by the bounds-vs-chi campaign only
    std::optional<double> tau;
    std::optional<bool> characterization_holds;

    bool operator==(const Record&) const = default;
};

struct FuzzSummary {
    std::string target;
    std::uint64_t trials_run = 0;
    std::uint64_t violation_count = 0;
    std::vector<Record> violations;
    std::optional<double> min_gap;
    std::uint64_t near_equality_count = 0;
    // smallest gaps first, ties by trial index, capped at max_records
    std::vector<Record> near_equality;
    std::uint64_t max_records = 100;

    bool operator==(const FuzzSummary&) const = default;
};

// --- seeded instance generators ----------------------------------------------

// Hermitian matrix with zero diagonal blocks over a random partition of [0, n)
// into r parts (empty parts repaired by moving indices out of the largest
// part). Off-block entries have re and im uniform in [-entry_scale, entry_scale].
std::pair<linalg::HermitianMatrix, linalg::BlockPartition>
random_hermitian_blocked(int n, int r, double entry_scale, std::uint64_t key);

linalg::SymmetricMatrix random_diagonal(int n, double diag_scale, std::uint64_t key);

// Support contains a uniform random spanning tree (Aldous-Broder), so the
// matrix is irreducible; extra support pairs appear with probability
// `density`; positive entries uniform in (0, entry_scale]; diagonal uniform
// in [0, entry_scale].
linalg::SymmetricMatrix random_connected_nonneg_symmetric(int n, double density,
                                                          double entry_scale,
                                                          std::uint64_t key);

// Connected bipartite graph: bipartition from a random spanning tree's depth
// parity plus extra cross-side edges with probability `extra_p`.
std::pair<graphs::Graph, std::vector<int>>
random_connected_bipartite(int n, double extra_p, std::uint64_t key);

// --- instance re-materialization ---------------------------------------------

struct Theorem1Instance {
    linalg::HermitianMatrix a;
    linalg::BlockPartition p;
    linalg::SymmetricMatrix b;
    InstanceTags tags;
};
Theorem1Instance theorem1_instance(const FuzzConfig& cfg, std::uint64_t trial);
Theorem1Instance explore_instance(const FuzzConfig& cfg, std::uint64_t trial);

struct Lemma1Instance {
    linalg::SymmetricMatrix a;
    int r;
    InstanceTags tags;
};
// `family` is random, constant_rowsum, or rowsum_spread.
Lemma1Instance lemma1_instance(const FuzzConfig& cfg, std::uint64_t trial, Family family);

// Combined index over the exhaustive n <= 6 sweep followed by gnp samples.
graphs::Graph bounds_sweep_instance(const FuzzConfig& cfg, std::uint64_t trial);
std::uint64_t bounds_sweep_exhaustive_count();

graphs::Graph signless_instance(const FuzzConfig& cfg, std::uint64_t trial);

// --- campaigns ----------------------------------------------------------------

// Violations count gaps below -tolerance * (1 + ||A||_F + ||B||_F); gaps
// within the band are near-equality data, not errors.
FuzzSummary fuzz_theorem1(const FuzzConfig& cfg);

// Runs cfg.trials of each sub-campaign: random (violation iff gap below the
// scaled band), constant-rowsum (|gap| must stay inside +-tolerance scaled),
// and rowsum-spread (gap must exceed 1e-6 scaled).
FuzzSummary fuzz_lemma1(const FuzzConfig& cfg);

// Exhaustive sweep over all labeled graphs on n <= 6 with at least one edge,
// plus cfg.trials gnp samples at n in [7, 12]: both chromatic bounds must
// stay at or below the exact chromatic number.
FuzzSummary fuzz_bounds_vs_chi(const FuzzConfig& cfg);

// Connected samples; the signless gap must vanish exactly for the bipartite
// ones and stay positive otherwise (threshold 1e-9 * (1 + mu(Q)), pinned).
FuzzSummary fuzz_signless(const FuzzConfig& cfg);

// Theorem sampling plus targeted families, ranked by gap; exploratory output
// for the open equality question, no mathematical claim attached.
FuzzSummary explore_equality(const FuzzConfig& cfg, int top_k);

} // namespace chromspec::harness
