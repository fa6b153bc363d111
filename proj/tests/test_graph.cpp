#include "doctest.h"

#include <cmath>
#include <set>

#include "chromspec/graph.hpp"
#include "chromspec/linalg.hpp"

using namespace chromspec;
using graphs::Graph;

TEST_SUITE("graph") {

TEST_CASE("construction rejects loops and stray endpoints, collapses duplicates") {
    CHECK_THROWS_AS(Graph(0), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ValidationError);
    const Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
    CHECK(g.has_edge(1, 0));
}

TEST_CASE("derived matrices on the named small graphs") {
    const auto k2_a = graphs::adjacency_matrix(graphs::complete(2));
    CHECK(k2_a.data() == std::vector<double>{0, 1, 1, 0});

    const auto empty3 = graphs::adjacency_matrix(Graph(3));
    CHECK(empty3.data() == std::vector<double>(9, 0.0));

    const Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(graphs::adjacency_matrix(p3).data() ==
          std::vector<double>{0, 1, 0, 1, 0, 1, 0, 1, 0});

    CHECK(graphs::laplacian(graphs::complete(2)).data() ==
          std::vector<double>{1, -1, -1, 1});
    CHECK(graphs::laplacian(Graph(3)).data() == std::vector<double>(9, 0.0));
    CHECK(graphs::laplacian(graphs::complete(3)).data() ==
          std::vector<double>{2, -1, -1, -1, 2, -1, -1, -1, 2});

    CHECK(graphs::signless_laplacian(graphs::complete(2)).data() ==
          std::vector<double>{1, 1, 1, 1});
    CHECK(graphs::signless_laplacian(Graph(3)).data() == std::vector<double>(9, 0.0));
    CHECK(graphs::signless_laplacian(p3).data() ==
          std::vector<double>{1, 1, 0, 1, 2, 1, 0, 1, 1});
}

TEST_CASE("matrix identities hold on generator and random graphs") {
    std::vector<Graph> samples{graphs::petersen(), graphs::wheel(6), graphs::cycle(7),
                               graphs::complete_multipartite({2, 3, 1})};
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        samples.push_back(graphs::gnp(9, 0.4, seed));

    for (const auto& g : samples) {
        const int n = g.order();
        const auto a = graphs::adjacency_matrix(g);
        const auto l = graphs::laplacian(g);
        const auto q = graphs::signless_laplacian(g);
        for (int i = 0; i < n; ++i) {
            CHECK(a(i, i) == 0.0);
            double rowsum = 0.0;
            for (int j = 0; j < n; ++j) {
                rowsum += l(i, j);
                CHECK(q(i, j) == l(i, j) + 2.0 * a(i, j));
            }
            CHECK(rowsum == 0.0);
        }
    }
}

TEST_CASE("generators produce the named graphs") {
    CHECK(graphs::complete(3).size() == 3);
    CHECK(graphs::wheel(3) == graphs::complete(4));
    CHECK(graphs::complete_minus_edge(4).size() == 5);
    CHECK_FALSE(graphs::complete_minus_edge(4).has_edge(0, 1));

    const auto pet = graphs::petersen();
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    CHECK(graphs::regular_degree(pet) == 3);

    CHECK(graphs::complete_multipartite({2, 2}).size() == 4);
    CHECK(graphs::complete_multipartite({1, 1, 1}) == graphs::complete(3));

    CHECK_THROWS_AS(graphs::cycle(2), ValidationError);
    CHECK_THROWS_AS(graphs::wheel(2), ValidationError);
    CHECK_THROWS_AS(graphs::complete_multipartite({0, 2}), ValidationError);
}

TEST_CASE("gnp is deterministic per seed and honors the endpoints") {
    CHECK(graphs::gnp(10, 0.5, 7) == graphs::gnp(10, 0.5, 7));
    CHECK(graphs::gnp(10, 0.5, 7) != graphs::gnp(10, 0.5, 8));
    CHECK(graphs::gnp(10, 0.0, 7).size() == 0);
    CHECK(graphs::gnp(10, 1.0, 7).size() == 45);
    CHECK_THROWS_AS(graphs::gnp(10, 1.5, 7), ValidationError);
}

TEST_CASE("predicates on C_6, C_5 and two disjoint edges") {
    const auto c6 = graphs::cycle(6);
    CHECK(graphs::is_connected(c6));
    CHECK(graphs::is_bipartite(c6).bipartite);
    CHECK(graphs::regular_degree(c6) == 2);

    const auto c5 = graphs::cycle(5);
    CHECK(graphs::is_connected(c5));
    const auto check = graphs::is_bipartite(c5);
    CHECK_FALSE(check.bipartite);
    REQUIRE(check.odd_cycle.size() == 5);
    // the witness closes into an odd cycle of existing edges
    const auto& cyc = check.odd_cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        CHECK(c5.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    CHECK(std::set<int>(cyc.begin(), cyc.end()).size() == cyc.size());
    CHECK(graphs::regular_degree(c5) == 2);

    const Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(graphs::is_connected(two_edges));
    CHECK(graphs::is_bipartite(two_edges).bipartite);
    CHECK(graphs::regular_degree(two_edges) == 1);

    CHECK(graphs::regular_degree(Graph(3, {{0, 1}})) == std::nullopt);
}

TEST_CASE("odd-cycle witnesses are valid on random non-bipartite graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = graphs::gnp(8, 0.35, 1000 + seed);
        const auto check = graphs::is_bipartite(g);
        if (check.bipartite) {
            // both sides 2-color the graph properly
            for (const auto& [u, v] : g.edges())
                CHECK(check.side[std::size_t(u)] != check.side[std::size_t(v)]);
        } else {
            REQUIRE(check.odd_cycle.size() >= 3);
            CHECK(check.odd_cycle.size() % 2 == 1);
            const auto& cyc = check.odd_cycle;
            for (std::size_t i = 0; i < cyc.size(); ++i)
                CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
        }
    }
}

TEST_CASE("regular graphs satisfy spectrum(L) = k - spectrum(A) reversed") {
    for (const auto& g : {graphs::complete(5), graphs::cycle(7), graphs::petersen(),
                          graphs::complete_multipartite({2, 2, 2})}) {
        const int k = *graphs::regular_degree(g);
        const auto sa = linalg::eigen_symmetric(graphs::adjacency_matrix(g));
        const auto sl = linalg::eigen_symmetric(graphs::laplacian(g));
        const int n = g.order();
        for (int i = 0; i < n; ++i)
            CHECK(std::fabs(sl.values()[std::size_t(i)] -
                            (k - sa.values()[std::size_t(n - 1 - i)])) <= 1e-9);
    }
}

TEST_CASE("coloring_partition mirrors color classes") {
    const auto k2 = graphs::complete(2);
    const auto p2 = graphs::coloring_partition(k2, {2, 2, {0, 1}});
    CHECK(p2.part_sizes() == std::vector<int>{1, 1});

    const auto c4 = graphs::cycle(4);
    const auto p4 = graphs::coloring_partition(c4, {4, 2, {0, 1, 0, 1}});
    CHECK(p4.assignment() == std::vector<int>{0, 1, 0, 1});

    const auto k3 = graphs::complete(3);
    CHECK(graphs::coloring_partition(k3, {3, 3, {0, 1, 2}}).parts() == 3);

    CHECK_THROWS_AS(graphs::coloring_partition(k3, {3, 2, {0, 1, 0}}),
                    ValidationError); // improper
    CHECK_THROWS_AS(graphs::coloring_partition(Graph(2), {2, 1, {0, 0}}),
                    ValidationError); // k < 2

    // partition output always passes validate_block_zero
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = graphs::gnp(7, 0.5, 2000 + seed);
        if (g.size() == 0) continue;
        // alternate a trivially proper coloring: every vertex its own class
        std::vector<int> singleton(7);
        for (int i = 0; i < 7; ++i) singleton[std::size_t(i)] = i;
        const auto part = graphs::coloring_partition(g, {7, 7, singleton});
        CHECK(linalg::validate_block_zero(
            linalg::HermitianMatrix::from_real(graphs::adjacency_matrix(g)), part));
    }
}

} // TEST_SUITE
