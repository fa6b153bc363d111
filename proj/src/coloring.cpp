#include "chromspec/coloring.hpp"

#include <algorithm>
#include <cmath>

namespace chromspec::coloring {

using graphs::DynBitset;
using graphs::Graph;

// ---------------------------------------------------------------------------
// DSATUR greedy
// ---------------------------------------------------------------------------

namespace {

// Highest saturation, ties by degree, then lowest index. -1 when all colored.
int dsatur_pick(const Graph& g, const std::vector<int>& color,
                const std::vector<DynBitset>& neighbor_colors) {
    const int n = g.order();
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (color[std::size_t(v)] != -1) continue;
        const int sat = neighbor_colors[std::size_t(v)].count();
        const int deg = g.degree(v);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
    }
    return best;
}

} // namespace

GreedyResult greedy_upper(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(std::size_t(n), -1);
    std::vector<DynBitset> neighbor_colors(static_cast<std::size_t>(n), DynBitset(n));
    int used = 0;

    for (int step = 0; step < n; ++step) {
        const int v = dsatur_pick(g, color, neighbor_colors);
        int c = 0;
        while (neighbor_colors[std::size_t(v)].test(c)) ++c;
        color[std::size_t(v)] = c;
        used = std::max(used, c + 1);
        for (int u = 0; u < n; ++u)
            if (g.has_edge(v, u)) neighbor_colors[std::size_t(u)].set(c);
    }
    return GreedyResult{used, graphs::Coloring{n, used, std::move(color)}};
}

// ---------------------------------------------------------------------------
// Greedy clique
// ---------------------------------------------------------------------------

std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[std::size_t(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> best;
    for (int start : order) {
        std::vector<int> clique{start};
        DynBitset cand = g.neighbors(start);
        while (cand.any()) {
            // highest-degree candidate, lowest index on ties
            int pick = -1, pick_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (cand.test(v) && g.degree(v) > pick_deg) {
                    pick = v;
                    pick_deg = g.degree(v);
                }
            }
            clique.push_back(pick);
            cand &= g.neighbors(pick);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Exact chromatic number: iterative k-colorability, DSATUR branching order,
// symmetry breaking (max-degree vertex pinned to color 0, new colors opened
// in index order only).
// ---------------------------------------------------------------------------

namespace {

struct KColorSearch {
    const Graph& g;
    int k;
    std::uint64_t budget;
    std::uint64_t& nodes;
    std::vector<int> color;
    std::vector<DynBitset> neighbor_colors;
    bool out_of_budget = false;

    KColorSearch(const Graph& graph, int colors, std::uint64_t node_budget,
                 std::uint64_t& node_counter)
        : g(graph), k(colors), budget(node_budget), nodes(node_counter),
          color(std::size_t(graph.order()), -1),
          neighbor_colors(std::size_t(graph.order()), DynBitset(graph.order())) {}

    void assign(int v, int c) {
        color[std::size_t(v)] = c;
        for (int u = 0; u < g.order(); ++u)
            if (g.has_edge(v, u)) neighbor_colors[std::size_t(u)].set(c);
    }

    void unassign(int v, int c) {
        color[std::size_t(v)] = -1;
        for (int u = 0; u < g.order(); ++u) {
            if (!g.has_edge(v, u)) continue;
            // another neighbor of u may still carry color c
            bool still = false;
            for (int w = 0; w < g.order() && !still; ++w)
                still = w != v && g.has_edge(u, w) && color[std::size_t(w)] == c;
            if (!still) neighbor_colors[std::size_t(u)].reset(c);
        }
    }

    bool solve(int colored, int colors_open) {
        if (colored == g.order()) return true;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        const int v = dsatur_pick(g, color, neighbor_colors);
        const int limit = std::min(colors_open + 1, k);
        for (int c = 0; c < limit; ++c) {
            if (neighbor_colors[std::size_t(v)].test(c)) continue;
            assign(v, c);
            if (solve(colored + 1, std::max(colors_open, c + 1))) return true;
            unassign(v, c);
            if (out_of_budget) return false;
        }
        return false;
    }
};

// true / false / nullopt (budget ran out)
std::optional<bool> k_colorable(const Graph& g, int k, std::uint64_t budget,
                                std::uint64_t& nodes, graphs::Coloring& witness) {
    const int n = g.order();
    KColorSearch search(g, k, budget, nodes);

    int pin = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(pin)) pin = v;
    search.assign(pin, 0);

    if (search.solve(1, 1)) {
        int used = 0;
        for (int c : search.color) used = std::max(used, c + 1);
        witness = graphs::Coloring{n, used, search.color};
        return true;
    }
    if (search.out_of_budget) return std::nullopt;
    return false;
}

} // namespace

ChiResult chromatic_number_exact(const Graph& g, std::uint64_t node_budget) {
    ChiResult result;
    const auto greedy = greedy_upper(g);
    result.upper = greedy.k;

    if (g.size() == 0) {
        result.status = SolveStatus::exact;
        result.chi = 1;
        result.lower = 1;
        result.witness = greedy.coloring;
        return result;
    }

    const int clique = static_cast<int>(greedy_clique(g).size());
    result.lower = std::max(2, clique);

    graphs::Coloring best = greedy.coloring;
    for (int k = result.lower; k < result.upper; ++k) {
        graphs::Coloring witness;
        const auto outcome = k_colorable(g, k, node_budget, result.nodes, witness);
        if (!outcome.has_value()) {
            result.status = SolveStatus::unknown; // chi in [lower, upper], unproven
            return result;
        }
        if (*outcome) {
            result.status = SolveStatus::exact;
            result.chi = k;
            result.witness = std::move(witness);
            result.lower = k;
            result.upper = k;
            return result;
        }
        result.lower = k + 1;
    }

    // every k below the greedy bound refuted; the greedy coloring is optimal
    result.status = SolveStatus::exact;
    result.chi = result.upper;
    result.lower = result.upper;
    result.witness = std::move(best);
    return result;
}

// ---------------------------------------------------------------------------
// Exact independence number: maximum clique on the complement with
// greedy-coloring bounds (Tomita-style ordering).
// ---------------------------------------------------------------------------

namespace {

struct CliqueSearch {
    const Graph& h; // complement of the input
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> best;
    std::vector<int> current;
    std::vector<DynBitset> rows;

    CliqueSearch(const Graph& graph, std::uint64_t node_budget)
        : h(graph), budget(node_budget) {
        rows.reserve(std::size_t(graph.order()));
        for (int v = 0; v < graph.order(); ++v) rows.push_back(graph.neighbors(v));
    }

    // Greedy coloring of the candidate set; vertices listed in color order so
    // bounds[i] is nondecreasing and reverse iteration prunes whole suffixes.
    void color_order(const DynBitset& cand, std::vector<int>& order,
                     std::vector<int>& bounds) {
        order.clear();
        bounds.clear();
        DynBitset uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            DynBitset avail = uncolored;
            while (true) {
                const int v = avail.first();
                if (v == -1) break;
                order.push_back(v);
                bounds.push_back(color);
                uncolored.reset(v);
                avail.reset(v);
                avail.subtract(rows[std::size_t(v)]);
            }
        }
    }

    void expand(DynBitset cand) {
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (!cand.any()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        std::vector<int> order, bounds;
        color_order(cand, order, bounds);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (out_of_budget) return;
            if (current.size() + std::size_t(bounds[std::size_t(i)]) <= best.size()) return;
            const int v = order[std::size_t(i)];
            current.push_back(v);
            DynBitset next = cand;
            next &= rows[std::size_t(v)];
            expand(next);
            current.pop_back();
            cand.reset(v);
        }
    }
};

} // namespace

AlphaResult independence_number_exact(const Graph& g, std::uint64_t node_budget) {
    const Graph h = g.complement();
    CliqueSearch search(h, node_budget);

    // root upper bound: colors of a greedy coloring of the complement
    const auto greedy_h = greedy_upper(h);

    DynBitset all(h.order());
    for (int v = 0; v < h.order(); ++v) all.set(v);
    search.expand(all);

    AlphaResult result;
    result.nodes = search.nodes;
    result.lower = static_cast<int>(search.best.size());
    result.upper = search.out_of_budget ? greedy_h.k : result.lower;
    result.witness = search.best;
    std::sort(result.witness.begin(), result.witness.end());
    if (!search.out_of_budget) {
        result.status = SolveStatus::exact;
        result.alpha = result.lower;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Equality characterization witness
// ---------------------------------------------------------------------------

EqualityReport equality_witness(const Graph& g, const graphs::Coloring& c,
                                const linalg::Spectrum& spectrum_a, double tol) {
    graphs::validate_coloring(g, c);
    if (spectrum_a.size() != g.order())
        throw DimensionError("spectrum size does not match graph order");

    EqualityReport report;
    report.tau = std::fabs(spectrum_a.min());
    report.tau_is_integer = std::fabs(report.tau - std::round(report.tau)) <= tol;
    const int target = static_cast<int>(std::lround(report.tau));

    std::vector<std::vector<int>> classes(std::size_t(c.k));
    for (int v = 0; v < g.order(); ++v)
        classes[std::size_t(c.color_of[std::size_t(v)])].push_back(v);

    bool all_regular = true;
    for (int i = 0; i < c.k; ++i) {
        for (int j = i + 1; j < c.k; ++j) {
            PairRegularity pair;
            pair.class_a = i;
            pair.class_b = j;
            pair.target_degree = report.tau;
            pair.regular = true;
            for (int side = 0; side < 2 && pair.regular; ++side) {
                const auto& from = classes[std::size_t(side == 0 ? i : j)];
                const auto& into = classes[std::size_t(side == 0 ? j : i)];
                for (int v : from) {
                    int deg = 0;
                    for (int u : into) deg += g.has_edge(v, u) ? 1 : 0;
                    if (deg != target) {
                        pair.regular = false;
                        pair.violating_vertex = v;
                        break;
                    }
                }
            }
            all_regular = all_regular && pair.regular;
            report.pair_results.push_back(std::move(pair));
        }
    }
    report.characterization_holds = report.tau_is_integer && all_regular;
    return report;
}

} // namespace chromspec::coloring
