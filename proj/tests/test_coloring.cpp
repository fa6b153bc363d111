#include "doctest.h"

#include <cmath>

#include "chromspec/coloring.hpp"
#include "chromspec/graph.hpp"
#include "oracles.hpp"

using namespace chromspec;
using coloring::SolveStatus;
using graphs::Graph;

namespace {

bool independent_set_spans_no_edge(const Graph& g, const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) return false;
    return true;
}

} // namespace

TEST_SUITE("coloring") {

TEST_CASE("DSATUR greedy on the named graphs") {
    CHECK(coloring::greedy_upper(Graph(5)).k == 1);
    CHECK(coloring::greedy_upper(graphs::complete(4)).k == 4);
    CHECK(coloring::greedy_upper(graphs::cycle(5)).k == 3);
    for (const auto& g : {graphs::petersen(), graphs::wheel(7), graphs::cycle(9)})
        CHECK(graphs::is_proper(g, coloring::greedy_upper(g).coloring));
}

TEST_CASE("exact chromatic number on the named graphs") {
    for (int n = 1; n <= 8; ++n) {
        const auto r = coloring::chromatic_number_exact(graphs::complete(n));
        REQUIRE(r.status == SolveStatus::exact);
        CHECK(r.chi == n);
    }
    const auto c5 = coloring::chromatic_number_exact(graphs::cycle(5));
    REQUIRE(c5.status == SolveStatus::exact);
    CHECK(c5.chi == 3);

    const auto pet = coloring::chromatic_number_exact(graphs::petersen());
    REQUIRE(pet.status == SolveStatus::exact);
    CHECK(pet.chi == 3);
    CHECK(graphs::is_proper(graphs::petersen(), pet.witness));
    CHECK(pet.witness.k == 3);
}

TEST_CASE("exact chi agrees with brute force on every graph with n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t masks = std::uint64_t(1) << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const auto g = oracles::labeled_graph(n, mask);
            const auto r = coloring::chromatic_number_exact(g);
            REQUIRE(r.status == SolveStatus::exact);
            CHECK(r.chi == oracles::brute_force_chi(g));
            CHECK(graphs::is_proper(g, r.witness));
        }
    }
}

TEST_CASE("exact independence number on the named graphs") {
    const auto empty = coloring::independence_number_exact(Graph(5));
    REQUIRE(empty.status == SolveStatus::exact);
    CHECK(empty.alpha == 5);

    for (int n = 1; n <= 8; ++n) {
        const auto r = coloring::independence_number_exact(graphs::complete(n));
        REQUIRE(r.status == SolveStatus::exact);
        CHECK(r.alpha == 1);
    }

    const auto pet = coloring::independence_number_exact(graphs::petersen());
    REQUIRE(pet.status == SolveStatus::exact);
    CHECK(pet.alpha == 4);
    CHECK(pet.witness.size() == 4);
    CHECK(independent_set_spans_no_edge(graphs::petersen(), pet.witness));
}

TEST_CASE("exact alpha agrees with brute force on every graph with n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t masks = std::uint64_t(1) << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const auto g = oracles::labeled_graph(n, mask);
            const auto r = coloring::independence_number_exact(g);
            REQUIRE(r.status == SolveStatus::exact);
            CHECK(r.alpha == oracles::brute_force_alpha(g));
            CHECK(independent_set_spans_no_edge(g, r.witness));
        }
    }
}

TEST_CASE("alpha equals the complement's maximum clique (independent enumeration)") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = graphs::gnp(9, 0.45, 5000 + seed);
        const auto r = coloring::independence_number_exact(g);
        REQUIRE(r.status == SolveStatus::exact);
        CHECK(r.alpha == oracles::brute_force_max_clique(g.complement()));
    }
    const auto pet = coloring::independence_number_exact(graphs::petersen());
    CHECK(pet.alpha == oracles::brute_force_max_clique(graphs::petersen().complement()));
}

TEST_CASE("sandwich and quotient inequalities hold on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = graphs::gnp(8, 0.1 * double(1 + seed % 9), 6000 + seed);
        const auto chi = coloring::chromatic_number_exact(g);
        const auto alpha = coloring::independence_number_exact(g);
        REQUIRE(chi.status == SolveStatus::exact);
        REQUIRE(alpha.status == SolveStatus::exact);
        CHECK(coloring::greedy_upper(g).k >= chi.chi);
        CHECK(double(chi.chi) >= double(g.order()) / double(alpha.alpha));
    }
}

TEST_CASE("budget exhaustion is an explicit unknown outcome with a valid bracket") {
    const auto chi = coloring::chromatic_number_exact(graphs::petersen(), 1);
    CHECK(chi.status == SolveStatus::unknown);
    CHECK(chi.lower >= 2);
    CHECK(chi.upper >= chi.lower);
    CHECK(chi.upper <= 10);

    const auto alpha = coloring::independence_number_exact(graphs::petersen(), 1);
    CHECK(alpha.status == SolveStatus::unknown);
    CHECK(alpha.lower <= 4);
    CHECK(alpha.upper >= 4);
}

TEST_CASE("equality witness on K_n with singleton classes") {
    const auto g = graphs::complete(4);
    const auto spec = linalg::eigen_symmetric(graphs::adjacency_matrix(g));
    const auto rep = coloring::equality_witness(g, {4, 4, {0, 1, 2, 3}}, spec, 1e-6);
    CHECK(rep.tau == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.tau_is_integer);
    CHECK(rep.pair_results.size() == 6);
    for (const auto& p : rep.pair_results) CHECK(p.regular);
    CHECK(rep.characterization_holds);
}

TEST_CASE("equality witness rejects C_5: tau is irrational") {
    const auto g = graphs::cycle(5);
    const auto spec = linalg::eigen_symmetric(graphs::adjacency_matrix(g));
    const auto rep = coloring::equality_witness(g, {5, 3, {0, 1, 0, 1, 2}}, spec, 1e-6);
    CHECK(rep.tau == doctest::Approx(2.0 * std::cos(M_PI / 5.0)).epsilon(1e-9)); // 1.618...
    CHECK_FALSE(rep.tau_is_integer);
    CHECK_FALSE(rep.characterization_holds);
}

TEST_CASE("equality witness accepts C_4 with the alternating 2-coloring") {
    const auto g = graphs::cycle(4);
    const auto spec = linalg::eigen_symmetric(graphs::adjacency_matrix(g));
    const auto rep = coloring::equality_witness(g, {4, 2, {0, 1, 0, 1}}, spec, 1e-6);
    CHECK(rep.tau == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.characterization_holds);
}

TEST_CASE("equality witness validates its inputs") {
    const auto g = graphs::complete(3);
    const auto spec = linalg::eigen_symmetric(graphs::adjacency_matrix(g));
    CHECK_THROWS_AS(coloring::equality_witness(g, {3, 2, {0, 0, 1}}, spec, 1e-6),
                    ValidationError);
}

TEST_CASE("report invariant: holds == integral tau and all pairs regular") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = graphs::gnp(7, 0.5, 7000 + seed);
        if (g.size() == 0) continue;
        const auto chi = coloring::chromatic_number_exact(g);
        REQUIRE(chi.status == SolveStatus::exact);
        if (chi.chi < 2) continue;
        const auto spec = linalg::eigen_symmetric(graphs::adjacency_matrix(g));
        const auto rep = coloring::equality_witness(g, chi.witness, spec, 1e-6);
        bool all = true;
        for (const auto& p : rep.pair_results) all = all && p.regular;
        CHECK(rep.characterization_holds == (rep.tau_is_integer && all));
        for (const auto& p : rep.pair_results)
            if (!p.regular) CHECK(p.violating_vertex.has_value());
    }
}

} // TEST_SUITE
