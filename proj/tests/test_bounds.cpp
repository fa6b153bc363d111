#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "chromspec/bounds.hpp"
#include "chromspec/coloring.hpp"
#include "chromspec/graph.hpp"
#include "oracles.hpp"

using namespace chromspec;
using graphs::Graph;

TEST_SUITE("bounds") {

TEST_CASE("Hoffman bound on K_2, Petersen and K_10 minus an edge") {
    CHECK(bounds::hoffman_bound(graphs::complete(2)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(bounds::hoffman_bound(graphs::petersen()) == doctest::Approx(2.5).epsilon(1e-10));

    // K_10 - e = K_{1x8,2}: quotient matrix [[7, 2], [8, 0]] gives
    // mu = (7 + sqrt(113))/2 and mu_min = (7 - sqrt(113))/2
    const double mu = (7.0 + std::sqrt(113.0)) / 2.0;
    const double mu_min = (7.0 - std::sqrt(113.0)) / 2.0;
    const double expected = 1.0 + mu / (-mu_min);
    const double got = bounds::hoffman_bound(graphs::complete_minus_edge(10));
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));
    CHECK(std::fabs(got - 5.857) <= 1e-3);

    CHECK_THROWS_AS(bounds::hoffman_bound(Graph(4)), UndefinedBoundError);
}

TEST_CASE("Laplacian bound is exactly n on complete graphs") {
    for (int n = 2; n <= 8; ++n)
        CHECK(std::fabs(bounds::nikiforov_bound(graphs::complete(n)) - double(n)) <= 1e-9);
}

TEST_CASE("Laplacian bound on the diamond K_4 - e") {
    // mu(A) = (1 + sqrt(17))/2 from the quotient [[1, 2], [2, 0]];
    // mu(L) = 4 since K_4 - e is complete multipartite on 4 vertices
    const double mu = (1.0 + std::sqrt(17.0)) / 2.0;
    const double expected = 1.0 + mu / (4.0 - mu);
    const double got = bounds::nikiforov_bound(graphs::complete_minus_edge(4));
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));
    CHECK(std::fabs(got - 2.7808) <= 1e-4);
    CHECK(bounds::ceil_with_slack(got) == 3);
    CHECK_THROWS_AS(bounds::nikiforov_bound(Graph(3)), UndefinedBoundError);
}

TEST_CASE("wheel W_{1,100}: the two bounds split as the paper describes") {
    const auto w = graphs::wheel(100);
    const double hoffman = bounds::hoffman_bound(w);
    const double nikiforov = bounds::nikiforov_bound(w);
    CHECK(nikiforov > 1.0);
    CHECK(nikiforov <= 2.0);
    CHECK(bounds::ceil_with_slack(nikiforov) == 2);
    CHECK(bounds::ceil_with_slack(hoffman) == 3);

    // mu(A) = 1 + sqrt(101) from the hub/rim quotient [[0, 100], [1, 2]]
    const auto spec = linalg::eigen_symmetric(graphs::adjacency_matrix(w));
    CHECK(std::fabs(spec.max() - (1.0 + std::sqrt(101.0))) <= 1e-9);
}

TEST_CASE("ratio bound on K_n, Petersen and C_5") {
    for (int n = 2; n <= 8; ++n)
        CHECK(bounds::ratio_bound_alpha(graphs::complete(n)) ==
              doctest::Approx(1.0).epsilon(1e-9));

    CHECK(bounds::ratio_bound_alpha(graphs::petersen()) ==
          doctest::Approx(4.0).epsilon(1e-10));

    const double tau = 2.0 * std::cos(M_PI / 5.0); // |2 cos(4 pi / 5)|
    CHECK(bounds::ratio_bound_alpha(graphs::cycle(5)) ==
          doctest::Approx(5.0 * tau / (2.0 + tau)).epsilon(1e-10));
    CHECK(std::fabs(bounds::ratio_bound_alpha(graphs::cycle(5)) - 2.2361) <= 1e-4);

    CHECK_THROWS_AS(bounds::ratio_bound_alpha(Graph(3, {{0, 1}, {1, 2}})), ValidationError);
    CHECK_THROWS_AS(bounds::ratio_bound_alpha(Graph(3)), ValidationError); // 0-regular
}

TEST_CASE("theorem1_gap on the zero matrix and bipartite 2-block instances") {
    const auto b = linalg::SymmetricMatrix::diagonal({3.0, -1.0, 0.5, 2.0});
    const auto p = linalg::BlockPartition(4, 2, {0, 0, 1, 1});
    CHECK(std::fabs(bounds::theorem1_gap(linalg::HermitianMatrix::zero(4), p, b)) <= 1e-12);

    // bipartite adjacency with its 2-part partition and B = 0: both sides
    // have the same spectral radius by sign-flip symmetry
    const auto path = Graph(4, {{0, 2}, {0, 3}, {1, 2}});
    const auto a = linalg::HermitianMatrix::from_real(graphs::adjacency_matrix(path));
    CHECK(std::fabs(bounds::theorem1_gap(a, p, linalg::SymmetricMatrix::zero(4))) <= 1e-10);
}

TEST_CASE("theorem1_gap vanishes on K_3 with singleton parts") {
    const auto a = linalg::HermitianMatrix::from_real(
        graphs::adjacency_matrix(graphs::complete(3)));
    const auto p = linalg::BlockPartition(3, 3, {0, 1, 2});
    CHECK(std::fabs(bounds::theorem1_gap(a, p, linalg::SymmetricMatrix::zero(3))) <= 1e-9);
}

TEST_CASE("theorem1_gap validates the zero-block precondition") {
    const auto a = linalg::HermitianMatrix::from_real(
        graphs::adjacency_matrix(graphs::complete(3)));
    CHECK_THROWS_AS(
        bounds::theorem1_gap(a, linalg::BlockPartition(3, 2, {0, 0, 1}),
                             linalg::SymmetricMatrix::zero(3)),
        ValidationError);
}

TEST_CASE("lemma1_gap equality and strictness directions") {
    const auto k2 = graphs::adjacency_matrix(graphs::complete(2));
    CHECK(std::fabs(bounds::lemma1_gap(k2, 2)) <= 1e-12);

    // equal row sums force equality at every r
    for (const auto& g : {graphs::cycle(6), graphs::petersen(), graphs::complete(5)})
        for (int r : {2, 3, 7})
            CHECK(std::fabs(bounds::lemma1_gap(graphs::adjacency_matrix(g), r)) <= 1e-9);

    // P_3 has row sums (1, 2, 1): R + A is the signless Laplacian of P_3 with
    // spectrum {3, 1, 0}, and mu(A) = sqrt(2), so the gap is 3 - 2*sqrt(2)
    const auto p3 = graphs::adjacency_matrix(Graph(3, {{0, 1}, {1, 2}}));
    const double gap = bounds::lemma1_gap(p3, 2);
    CHECK(gap == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-10));
    CHECK(gap > 1e-6);

    // star K_{1,3}: row sums (3, 1, 1, 1), strictly positive gap
    const auto star = graphs::adjacency_matrix(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(bounds::lemma1_gap(star, 2) > 1e-6);
}

TEST_CASE("lemma1_gap validates nonnegativity and irreducibility") {
    CHECK_THROWS_AS(
        bounds::lemma1_gap(linalg::SymmetricMatrix::from_rows(2, {0, -1, -1, 0}), 2),
        ValidationError);
    const auto disconnected = graphs::adjacency_matrix(Graph(4, {{0, 1}, {2, 3}}));
    CHECK_THROWS_AS(bounds::lemma1_gap(disconnected, 2), ValidationError);
    CHECK_THROWS_AS(bounds::lemma1_gap(graphs::adjacency_matrix(graphs::complete(2)), 1),
                    ValidationError);
}

TEST_CASE("signless_gap separates bipartite from non-bipartite") {
    CHECK(std::fabs(bounds::signless_gap(graphs::complete(2))) <= 1e-12);
    CHECK(std::fabs(bounds::signless_gap(graphs::cycle(4))) <= 1e-9);
    CHECK(bounds::signless_gap(graphs::complete(3)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(bounds::signless_gap(Graph(4, {{0, 1}, {2, 3}})), ValidationError);
}

TEST_CASE("bound_report on Petersen composes every field") {
    bounds::ReportOptions opts;
    opts.compute_chi = true;
    opts.compute_alpha = true;
    opts.compute_equality = true;
    const auto rep = bounds::bound_report(graphs::petersen(), opts);

    CHECK(rep.n == 10);
    CHECK(rep.m == 15);
    CHECK(rep.connected);
    CHECK(rep.bounds_defined);
    CHECK(rep.hoffman == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(rep.nikiforov == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(rep.hoffman_ceil == 3);
    CHECK(rep.nikiforov_ceil == 3);
    REQUIRE(rep.chi.has_value());
    CHECK(rep.chi->chi == 3);
    REQUIRE(rep.alpha.has_value());
    CHECK(rep.alpha->alpha == 4);
    REQUIRE(rep.ratio_bound.has_value());
    CHECK(*rep.ratio_bound == doctest::Approx(4.0).epsilon(1e-10));
    REQUIRE(rep.equality.has_value());
    CHECK_FALSE(rep.equality->characterization_holds); // bound 2.5 < chi = 3
}

TEST_CASE("bound_report invariants and the K_4 equality case") {
    bounds::ReportOptions opts;
    opts.compute_chi = true;
    opts.compute_equality = true;
    const auto rep = bounds::bound_report(graphs::complete(4), opts);
    CHECK(std::fabs(rep.nikiforov - 4.0) <= 1e-9);
    REQUIRE(rep.equality.has_value());
    CHECK(rep.equality->characterization_holds);

    // stored spectra reproduce the bound values
    CHECK(rep.hoffman == 1.0 + rep.mu_a / (-rep.mu_min_a));
    CHECK(rep.nikiforov == 1.0 + rep.mu_a / (rep.mu_l - rep.mu_a));
    CHECK(rep.hoffman_ceil == bounds::ceil_with_slack(rep.hoffman));
    CHECK(rep.nikiforov_ceil == bounds::ceil_with_slack(rep.nikiforov));
    REQUIRE(rep.chi.has_value());
    CHECK(rep.chi->chi >= rep.hoffman_ceil);
    CHECK(rep.chi->chi >= rep.nikiforov_ceil);
}

TEST_CASE("neither bound dominates: the diamond splits them") {
    const auto rep = bounds::bound_report(graphs::complete_minus_edge(4), {});
    CHECK(std::fabs(rep.hoffman - 2.6403) <= 1e-4);
    CHECK(std::fabs(rep.nikiforov - 2.7808) <= 1e-4);
    CHECK(rep.nikiforov > rep.hoffman);

    // and the wheel splits them the other way
    const auto wheel = bounds::bound_report(graphs::wheel(100), {});
    CHECK(wheel.hoffman > wheel.nikiforov);
}

TEST_CASE("bound_report on an edgeless graph") {
    bounds::ReportOptions opts;
    opts.compute_chi = true;
    opts.compute_alpha = true;
    const auto rep = bounds::bound_report(Graph(5), opts);
    CHECK_FALSE(rep.bounds_defined);
    REQUIRE(rep.chi.has_value());
    CHECK(rep.chi->chi == 1);
    REQUIRE(rep.alpha.has_value());
    CHECK(rep.alpha->alpha == 5);
    CHECK_FALSE(rep.ratio_bound.has_value()); // 0-regular
    CHECK_FALSE(rep.equality.has_value());
}

TEST_CASE("regular graphs: the two bounds coincide") {
    for (const auto& g : {graphs::complete(6), graphs::cycle(8), graphs::cycle(9),
                          graphs::petersen(), graphs::complete_multipartite({3, 3, 3})})
        CHECK(std::fabs(bounds::hoffman_bound(g) - bounds::nikiforov_bound(g)) <= 1e-8);
}

TEST_CASE("denominator positivity across the small sweep") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t masks = std::uint64_t(1) << (n * (n - 1) / 2);
        for (std::uint64_t mask = 1; mask < masks; ++mask) {
            const auto g = oracles::labeled_graph(n, mask);
            const auto sa = linalg::eigen_symmetric(graphs::adjacency_matrix(g));
            const auto sl = linalg::eigen_symmetric(graphs::laplacian(g));
            CHECK(sl.max() - sa.max() > 1e-9);
        }
    }
}

TEST_CASE("the proof chain retraces numerically: both gaps nonnegative at r = chi") {
    std::vector<Graph> samples{graphs::petersen(), graphs::wheel(6),
                               graphs::complete_minus_edge(6), graphs::cycle(7)};
    for (std::uint64_t seed = 0; seed < 25; ++seed)
        samples.push_back(graphs::gnp(8, 0.5, 8000 + seed));

    for (const auto& g : samples) {
        if (g.size() == 0) continue;
        const auto chi = coloring::chromatic_number_exact(g);
        REQUIRE(chi.status == coloring::SolveStatus::exact);
        if (chi.chi < 2) continue;

        const auto a = linalg::HermitianMatrix::from_real(graphs::adjacency_matrix(g));
        const auto partition = graphs::coloring_partition(g, chi.witness);
        const auto d = graphs::degree_matrix(g);
        CHECK(bounds::theorem1_gap(a, partition, d) >= -1e-8 * (1.0 + a.frobenius_norm() +
                                                                d.frobenius_norm()));
        if (graphs::is_connected(g)) {
            const auto adj = graphs::adjacency_matrix(g);
            CHECK(bounds::lemma1_gap(adj, chi.chi) >= -1e-8 * (1.0 + adj.frobenius_norm()));
        }
    }
}

} // TEST_SUITE
