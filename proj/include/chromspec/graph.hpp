#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chromspec/linalg.hpp"

namespace chromspec::graphs {

// Small dynamic bitset used for adjacency rows and the solvers.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(int n) : n_(n), words_(std::size_t((n + 63) / 64), 0) {}

    int universe() const noexcept { return n_; }
    void set(int i) noexcept { words_[std::size_t(i >> 6)] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) noexcept { words_[std::size_t(i >> 6)] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const noexcept {
        return (words_[std::size_t(i >> 6)] >> (i & 63)) & 1u;
    }
    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    // Lowest set bit, or -1.
    int first() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k << 6) + __builtin_ctzll(words_[k]);
        return -1;
    }
    DynBitset& operator&=(const DynBitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    DynBitset& subtract(const DynBitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1. No self-loops; duplicate edges
// collapse silently at construction.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }
    bool has_edge(int u, int v) const noexcept {
        return (adj_[row_index(u) + std::size_t(v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const noexcept;
    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    DynBitset neighbors(int v) const;
    Graph complement() const;

    bool operator==(const Graph& other) const = default;

private:
    std::size_t row_index(int v) const noexcept { return std::size_t(v) * words_; }
    void add_edge_checked(int u, int v);

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Vertex coloring with colors 0..k-1. validate() checks the full invariant
// set (ids in range, every color used); is_proper checks only properness.
struct Coloring {
    int n = 0;
    int k = 0;
    std::vector<int> color_of;
};

bool is_proper(const Graph& g, const Coloring& c);
void validate_coloring(const Graph& g, const Coloring& c);

// --- derived matrices -------------------------------------------------------

linalg::SymmetricMatrix adjacency_matrix(const Graph& g);
linalg::SymmetricMatrix degree_matrix(const Graph& g);
linalg::SymmetricMatrix laplacian(const Graph& g);
linalg::SymmetricMatrix signless_laplacian(const Graph& g);

// --- generators --------------------------------------------------------------

Graph complete(int n);
Graph complete_minus_edge(int n); // K_n without the edge {0, 1}; n >= 2
Graph cycle(int n);               // n >= 3
Graph wheel(int cycle_len);       // hub is vertex cycle_len; cycle_len >= 3
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph petersen();
// Erdos-Renyi G(n, p); edge {i, j} is a pure function of (seed, i, j), so
// results are bit-stable across platforms and parallel runs.
Graph gnp(int n, double p, std::uint64_t seed);

// --- predicates ---------------------------------------------------------------

bool is_connected(const Graph& g);

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int> side;      // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle; // odd closed walk witness otherwise
};
BipartiteCheck is_bipartite(const Graph& g);

// Engaged with the common degree iff every vertex has the same degree.
std::optional<int> regular_degree(const Graph& g);

// Color classes of a proper coloring as a block partition; the adjacency
// matrix then has zero diagonal blocks.
linalg::BlockPartition coloring_partition(const Graph& g, const Coloring& c);

} // namespace chromspec::graphs
