#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chromspec/graph.hpp"
#include "chromspec/linalg.hpp"

namespace chromspec::coloring {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Proper coloring in DSATUR order: highest saturation first, ties by degree,
// then by lowest index. The color count is an upper bound on chi.
struct GreedyResult {
    int k = 0;
    graphs::Coloring coloring;
};
GreedyResult greedy_upper(const graphs::Graph& g);

// Greedy clique, used as the combinatorial lower bound seeding the exact
// search. The witness is returned so callers can verify it.
std::vector<int> greedy_clique(const graphs::Graph& g);

enum class SolveStatus { exact, unknown };

// Exact chromatic number by iterative k-colorability with DSATUR-ordered
// backtracking. A budget exhaustion is a first-class "unknown" outcome
// carrying the bracket proven so far; a wrong number is never returned.
struct ChiResult {
    SolveStatus status = SolveStatus::unknown;
    int chi = 0;              // meaningful when status == exact
    graphs::Coloring witness; // proper chi-coloring when exact
    int lower = 1;
    int upper = 0;
    std::uint64_t nodes = 0;
};
ChiResult chromatic_number_exact(const graphs::Graph& g,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

// Exact independence number as a maximum clique of the complement,
// branch-and-bound with greedy-coloring bounds.
struct AlphaResult {
    SolveStatus status = SolveStatus::unknown;
    int alpha = 0;
    std::vector<int> witness; // independent set when exact
    int lower = 0;
    int upper = 0;
    std::uint64_t nodes = 0;
};
AlphaResult independence_number_exact(const graphs::Graph& g,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

// Diagnostics for the equality characterization: the bound is attained iff
// every two color classes induce a |mu_min|-regular subgraph.
struct PairRegularity {
    int class_a = 0;
    int class_b = 0;
    bool regular = false;
    double target_degree = 0.0; // tau; regularity is checked against round(tau)
    std::optional<int> violating_vertex;
};

struct EqualityReport {
    double tau = 0.0;
    bool tau_is_integer = false;
    std::vector<PairRegularity> pair_results;
    bool characterization_holds = false;
};

EqualityReport equality_witness(const graphs::Graph& g, const graphs::Coloring& c,
                                const linalg::Spectrum& spectrum_a, double tol = 1e-6);

} // namespace chromspec::coloring
