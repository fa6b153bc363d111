#include "chromspec/graph.hpp"

#include <algorithm>
#include <string>

#include "chromspec/rng.hpp"

namespace chromspec::graphs {

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(int n) : n_(n), m_(0), words_((n + 63) / 64) {
    if (n < 1) throw ValidationError("graph needs at least one vertex");
    adj_.assign(std::size_t(n) * words_, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge_checked(u, v);
}

void Graph::add_edge_checked(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw ValidationError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                              std::to_string(v) + ")");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return; // duplicates collapse silently
    adj_[row_index(u) + std::size_t(v >> 6)] |= std::uint64_t(1) << (v & 63);
    adj_[row_index(v) + std::size_t(u >> 6)] |= std::uint64_t(1) << (u & 63);
    ++m_;
}

int Graph::degree(int v) const noexcept {
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += __builtin_popcountll(adj_[row_index(v) + std::size_t(w)]);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(std::size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

DynBitset Graph::neighbors(int v) const {
    DynBitset b(n_);
    for (int u = 0; u < n_; ++u)
        if (has_edge(v, u)) b.set(u);
    return b;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n_, edges);
}

// ---------------------------------------------------------------------------
// Coloring
// ---------------------------------------------------------------------------

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.n != g.order() || c.color_of.size() != std::size_t(g.order())) return false;
    for (const auto& [u, v] : g.edges())
        if (c.color_of[std::size_t(u)] == c.color_of[std::size_t(v)]) return false;
    return true;
}

void validate_coloring(const Graph& g, const Coloring& c) {
    if (c.n != g.order() || c.color_of.size() != std::size_t(g.order()))
        throw DimensionError("coloring size does not match graph order");
    if (c.k < 1) throw ValidationError("coloring must use at least one color");
    std::vector<int> used(std::size_t(c.k), 0);
    for (int col : c.color_of) {
        if (col < 0 || col >= c.k) throw ValidationError("color id out of range");
        ++used[std::size_t(col)];
    }
    for (int cnt : used)
        if (cnt == 0) throw ValidationError("unused color id");
    if (!is_proper(g, c)) throw ValidationError("coloring is not proper");
}

// ---------------------------------------------------------------------------
// Derived matrices
// ---------------------------------------------------------------------------

linalg::SymmetricMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<double> entries(std::size_t(n) * n, 0.0);
    for (const auto& [u, v] : g.edges()) {
        entries[std::size_t(u) * n + v] = 1.0;
        entries[std::size_t(v) * n + u] = 1.0;
    }
    return linalg::SymmetricMatrix::from_rows(n, std::move(entries));
}

linalg::SymmetricMatrix degree_matrix(const Graph& g) {
    std::vector<double> diag(std::size_t(g.order()));
    for (int v = 0; v < g.order(); ++v) diag[std::size_t(v)] = double(g.degree(v));
    return linalg::SymmetricMatrix::diagonal(std::move(diag));
}

linalg::SymmetricMatrix laplacian(const Graph& g) {
    const int n = g.order();
    std::vector<double> entries(std::size_t(n) * n, 0.0);
    for (const auto& [u, v] : g.edges()) {
        entries[std::size_t(u) * n + v] = -1.0;
        entries[std::size_t(v) * n + u] = -1.0;
    }
    for (int v = 0; v < n; ++v) entries[std::size_t(v) * n + v] = double(g.degree(v));
    return linalg::SymmetricMatrix::from_rows(n, std::move(entries));
}

linalg::SymmetricMatrix signless_laplacian(const Graph& g) {
    const int n = g.order();
    std::vector<double> entries(std::size_t(n) * n, 0.0);
    for (const auto& [u, v] : g.edges()) {
        entries[std::size_t(u) * n + v] = 1.0;
        entries[std::size_t(v) * n + u] = 1.0;
    }
    for (int v = 0; v < n; ++v) entries[std::size_t(v) * n + v] = double(g.degree(v));
    return linalg::SymmetricMatrix::from_rows(n, std::move(entries));
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Graph complete(int n) {
    if (n < 1) throw ValidationError("complete(n) needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph complete_minus_edge(int n) {
    if (n < 2) throw ValidationError("complete_minus_edge(n) needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw ValidationError("cycle(n) needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph wheel(int cycle_len) {
    if (cycle_len < 3) throw ValidationError("wheel(n) needs cycle length n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < cycle_len; ++v) {
        edges.emplace_back(v, (v + 1) % cycle_len);
        edges.emplace_back(v, cycle_len); // hub
    }
    return Graph(cycle_len + 1, edges);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty()) throw ValidationError("need at least one part");
    int n = 0;
    for (int s : part_sizes) {
        if (s < 1) throw ValidationError("part sizes must be >= 1");
        n += s;
    }
    std::vector<int> part_of;
    part_of.reserve(std::size_t(n));
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        part_of.insert(part_of.end(), std::size_t(part_sizes[p]), int(p));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[std::size_t(u)] != part_of[std::size_t(v)]) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);               // spokes
    }
    return Graph(10, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw ValidationError("gnp(n, p) needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("gnp probability must be in [0, 1]");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rng::Counter edge_stream(rng::derive(rng::derive(seed, std::uint64_t(i)),
                                                 std::uint64_t(j)));
            if (edge_stream.next_unit() < p) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(std::size_t(n), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    std::size_t head = 0;
    int visited = 1;
    while (head < queue.size()) {
        const int u = queue[head++];
        for (int v = 0; v < n; ++v) {
            if (!seen[std::size_t(v)] && g.has_edge(u, v)) {
                seen[std::size_t(v)] = 1;
                ++visited;
                queue.push_back(v);
            }
        }
    }
    return visited == n;
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.order();
    BipartiteCheck result;
    std::vector<int> side(std::size_t(n), -1);
    std::vector<int> parent(std::size_t(n), -1);

    for (int start = 0; start < n; ++start) {
        if (side[std::size_t(start)] != -1) continue;
        side[std::size_t(start)] = 0;
        std::vector<int> queue{start};
        std::size_t head = 0;
        while (head < queue.size()) {
            const int u = queue[head++];
            for (int v = 0; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                if (side[std::size_t(v)] == -1) {
                    side[std::size_t(v)] = 1 - side[std::size_t(u)];
                    parent[std::size_t(v)] = u;
                    queue.push_back(v);
                } else if (side[std::size_t(v)] == side[std::size_t(u)]) {
                    // walk both endpoints up to the root; the joined paths plus
                    // the edge (u, v) contain an odd cycle
                    std::vector<int> up_u, up_v;
                    for (int x = u; x != -1; x = parent[std::size_t(x)]) up_u.push_back(x);
                    for (int x = v; x != -1; x = parent[std::size_t(x)]) up_v.push_back(x);
                    // trim the common tail above the lowest common ancestor
                    while (up_u.size() > 1 && up_v.size() > 1 &&
                           up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
                        up_u.pop_back();
                        up_v.pop_back();
                    }
                    result.bipartite = false;
                    result.odd_cycle.assign(up_u.begin(), up_u.end());
                    result.odd_cycle.insert(result.odd_cycle.end(), up_v.rbegin() + 1,
                                            up_v.rend());
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    result.side = std::move(side);
    return result;
}

std::optional<int> regular_degree(const Graph& g) {
    const int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

linalg::BlockPartition coloring_partition(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    if (c.k < 2) throw ValidationError("partition needs at least two color classes");
    return linalg::BlockPartition(g.order(), c.k, c.color_of);
}

} // namespace chromspec::graphs
