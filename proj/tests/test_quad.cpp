#include <stdexcept>

#include <cmath>

#include "doctest.h"
#include "quadra/oracle.hpp"
#include "quadra/quad.hpp"
#include "testutil.hpp"

using namespace quadra;

TEST_CASE("quad numerator: C4, K4, C6") {
    const Graph c4 = testutil::cycle_graph(4);
    for (NodeId i = 0; i < 4; ++i) CHECK(quad_numerator(c4, i) == 2);

    const Graph k4 = testutil::complete_graph(4);
    for (NodeId i = 0; i < 4; ++i) CHECK(quad_numerator(k4, i) == 6);

    const Graph c6 = testutil::cycle_graph(6);
    for (NodeId i = 0; i < 6; ++i) CHECK(quad_numerator(c6, i) == 0);
}

TEST_CASE("i-quad: K4, diamond, path end") {
    const Graph k4 = testutil::complete_graph(4);
    for (NodeId i = 0; i < 4; ++i) CHECK(i_quad(k4, i).value() == doctest::Approx(1.0));

    const Graph diamond = testutil::diamond_graph();
    CHECK(i_quad(diamond, 0).value() == doctest::Approx(1.0));

    const Graph p4 = testutil::path_graph(4);
    CHECK_FALSE(i_quad(p4, 0).has_value());
}

TEST_CASE("o-quad: C4, diamond, C6") {
    const Graph c4 = testutil::cycle_graph(4);
    for (NodeId i = 0; i < 4; ++i) CHECK(o_quad(c4, i).value() == doctest::Approx(1.0));

    const Graph diamond = testutil::diamond_graph();
    CHECK(o_quad(diamond, 0).value() == doctest::Approx(0.5));

    const Graph c6 = testutil::cycle_graph(6);
    for (NodeId i = 0; i < 6; ++i) {
        const auto stats = quad_stats(c6, i);
        CHECK(stats.oqo == 2);
        CHECK(stats.o_quad.value() == doctest::Approx(0.0));
    }
}

TEST_CASE("averages: K4 and error on the empty graph") {
    const Graph k4 = testutil::complete_graph(4);
    CHECK(average_i_quad(k4) == doctest::Approx(1.0));
    CHECK(average_o_quad(k4) == doctest::Approx(1.0));
    CHECK_THROWS_AS(average_i_quad(Graph()), std::domain_error);
    CHECK_THROWS_AS(average_o_quad(Graph()), std::domain_error);
}

TEST_CASE("global i-quad and o-quad: C4, P4 and equality everywhere") {
    const Graph c4 = testutil::cycle_graph(4);
    CHECK(global_i_quad(c4).value() == doctest::Approx(1.0));
    CHECK(global_o_quad(c4).value() == doctest::Approx(1.0));

    const Graph p4 = testutil::path_graph(4);
    CHECK(global_i_quad(p4).value() == doctest::Approx(0.0));
    CHECK(global_o_quad(p4).value() == doctest::Approx(0.0));

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = testutil::random_graph(28, 0.2, seed);
        const auto gi = global_i_quad(g);
        const auto go = global_o_quad(g);
        REQUIRE(gi.has_value() == go.has_value());
        if (gi) CHECK(std::abs(*gi - *go) <= 1e-12);
    }
}

TEST_CASE("global numerator equals eight times the quadrangle total") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = testutil::random_graph(18, 0.3, seed);
        const auto oracle = count_quadrangles_bruteforce(g);
        std::int64_t numerator = 0;
        for (NodeId i = 0; i < g.node_count(); ++i) numerator += quad_numerator(g, i);
        CHECK(numerator == 8 * oracle.total);
    }
}

TEST_CASE("fast-path counts match the oracle exactly on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const double p = 0.1 + 0.05 * static_cast<double>(seed % 5);
        const Graph g = testutil::random_graph(22, p, seed * 31 + 7);
        const auto quad = count_quadrangles_bruteforce(g);
        const auto paths = count_open_paths_bruteforce(g);
        for (NodeId i = 0; i < g.node_count(); ++i) {
            const auto stats = quad_stats(g, i);
            CHECK(stats.quadrangles == quad.per_node[i]);
            CHECK(stats.numerator == 2 * quad.per_node[i]);
            CHECK(stats.oqi == paths.oqi[i]);
            CHECK(stats.oqo == paths.oqo[i]);
            if (paths.oqi[i] > 0) {
                const double expected = static_cast<double>(2 * quad.per_node[i]) /
                                        static_cast<double>(paths.oqi[i]);
                CHECK(std::abs(stats.i_quad.value() - expected) <= 1e-12);
            } else {
                CHECK_FALSE(stats.i_quad.has_value());
            }
            if (paths.oqo[i] > 0) {
                const double expected = static_cast<double>(2 * quad.per_node[i]) /
                                        static_cast<double>(paths.oqo[i]);
                CHECK(std::abs(stats.o_quad.value() - expected) <= 1e-12);
            } else {
                CHECK_FALSE(stats.o_quad.has_value());
            }
        }
    }
}

TEST_CASE("weighted coefficients degrade to unweighted at unit weights") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = testutil::random_graph(16, 0.35, seed + 1000);
        const Graph unit = g.with_unit_weights();
        for (NodeId i = 0; i < g.node_count(); ++i) {
            const auto plain = quad_stats(g, i);
            const auto weighted = weighted_quad_stats(unit, i);
            REQUIRE(plain.i_quad.has_value() == weighted.i_quad.has_value());
            REQUIRE(plain.o_quad.has_value() == weighted.o_quad.has_value());
            if (plain.i_quad) CHECK(*plain.i_quad == *weighted.i_quad);  // exact
            if (plain.o_quad) CHECK(*plain.o_quad == *weighted.o_quad);
        }
    }
}

TEST_CASE("weighted C4 at weight one half") {
    // Direct evaluation of the weighted definitions on the 4-cycle: every
    // node has numerator 2 * 0.5^4 and both denominators 2 * 0.5^3, so both
    // coefficients equal 0.5 (the unweighted value 1 scaled by the weight).
    std::vector<WeightedEdge> edges{{0, 1, 0.5}, {1, 2, 0.5}, {2, 3, 0.5}, {3, 0, 0.5}};
    const Graph c4 = Graph::from_weighted_edges(4, std::move(edges));
    for (NodeId i = 0; i < 4; ++i) {
        const auto stats = weighted_quad_stats(c4, i);
        CHECK(stats.numerator == doctest::Approx(2 * 0.0625));
        CHECK(stats.i_denominator == doctest::Approx(2 * 0.125));
        CHECK(stats.i_quad.value() == doctest::Approx(0.5));
        CHECK(stats.o_quad.value() == doctest::Approx(0.5));
    }
}

TEST_CASE("weighted diamond with unit weights") {
    const Graph diamond = testutil::diamond_graph().with_unit_weights();
    CHECK(weighted_i_quad(diamond, 0).value() == doctest::Approx(1.0));
    CHECK(weighted_o_quad(diamond, 0).value() == doctest::Approx(0.5));
}

TEST_CASE("scaling every weight by c scales both coefficients by c") {
    const double c = 0.37;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = testutil::random_graph(15, 0.4, seed + 77);
        Rng rng(seed);
        std::vector<WeightedEdge> edges, scaled;
        for (const auto& [u, v] : g.edges()) {
            const double w = 0.1 + 0.9 * rng.unit();
            edges.push_back({u, v, w});
            scaled.push_back({u, v, c * w});
        }
        const Graph base = Graph::from_weighted_edges(g.node_count(), std::move(edges));
        const Graph shrunk = Graph::from_weighted_edges(g.node_count(), std::move(scaled));
        for (NodeId i = 0; i < g.node_count(); ++i) {
            const auto a = weighted_quad_stats(base, i);
            const auto b = weighted_quad_stats(shrunk, i);
            if (a.i_quad) CHECK(std::abs(*b.i_quad - c * *a.i_quad) <= 1e-9);
            if (a.o_quad) CHECK(std::abs(*b.o_quad - c * *a.o_quad) <= 1e-9);
        }
    }
}

TEST_CASE("weighted sums match a brute-force path enumeration") {
    // Independent route: enumerate (j, k, l) with plain has_edge tests over
    // all node ids and multiply looked-up weights, instead of walking
    // adjacency arrays.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph plain = testutil::random_graph(14, 0.35, seed + 300);
        Rng rng(seed);
        std::vector<WeightedEdge> edges;
        for (const auto& [u, v] : plain.edges()) edges.push_back({u, v, 0.05 + 0.95 * rng.unit()});
        const Graph g = Graph::from_weighted_edges(plain.node_count(), std::move(edges));
        const NodeId n = static_cast<NodeId>(g.node_count());
        for (NodeId i = 0; i < n; ++i) {
            double num = 0, den_i = 0, den_o = 0;
            for (NodeId j = 0; j < n; ++j) {
                if (j == i || !g.has_edge(i, j)) continue;
                for (NodeId k = 0; k < n; ++k) {
                    if (k == i || k == j || !g.has_edge(j, k)) continue;
                    const double base = g.edge_weight(i, j) * g.edge_weight(j, k);
                    for (NodeId l = 0; l < n; ++l) {
                        if (l == i || l == k) continue;
                        if (l != j && g.has_edge(i, l) && g.has_edge(l, k)) {
                            num += base * g.edge_weight(i, l) * g.edge_weight(l, k);
                        }
                        if (l != j && g.has_edge(i, l)) den_i += base * g.edge_weight(i, l);
                        if (l != j && g.has_edge(k, l)) den_o += base * g.edge_weight(k, l);
                    }
                }
            }
            const auto stats = weighted_quad_stats(g, i);
            CHECK(stats.numerator == doctest::Approx(num).epsilon(1e-12));
            CHECK(stats.i_denominator == doctest::Approx(den_i).epsilon(1e-12));
            CHECK(stats.o_denominator == doctest::Approx(den_o).epsilon(1e-12));
        }
    }
}

TEST_CASE("weighted ops refuse unweighted graphs") {
    const Graph g = testutil::cycle_graph(4);
    CHECK_THROWS_AS(weighted_i_quad(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(weighted_quad_stats(g, 0), std::invalid_argument);
}

TEST_CASE("full report merges everything deterministically") {
    const Graph diamond = testutil::diamond_graph();
    const auto report = full_report(diamond);
    REQUIRE(report.rows.size() == 4);
    const auto& a = report.rows[0];
    CHECK(a.triangles == 1);
    CHECK(a.quadrangles == 1);
    CHECK(a.clustering.value() == doctest::Approx(1.0));
    CHECK(a.closure.value() == doctest::Approx(0.5));
    CHECK(a.i_quad.value() == doctest::Approx(1.0));
    CHECK(a.o_quad.value() == doctest::Approx(0.5));

    const Graph isolated = Graph::from_edges(3, {});
    const auto empty_report = full_report(isolated);
    REQUIRE(empty_report.rows.size() == 3);
    for (const auto& row : empty_report.rows) {
        CHECK_FALSE(row.clustering.has_value());
        CHECK_FALSE(row.closure.has_value());
        CHECK_FALSE(row.i_quad.has_value());
        CHECK_FALSE(row.o_quad.has_value());
    }
}

TEST_CASE("report is identical across thread counts") {
    const Graph g = testutil::random_graph(60, 0.2, 4242);
    const auto sequential = full_report(g, 1);
    const auto parallel = full_report(g, 4);
    REQUIRE(sequential.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < sequential.rows.size(); ++i) {
        CHECK(sequential.rows[i].quadrangles == parallel.rows[i].quadrangles);
        CHECK(sequential.rows[i].i_quad == parallel.rows[i].i_quad);
        CHECK(sequential.rows[i].o_quad == parallel.rows[i].o_quad);
    }
    CHECK(sequential.avg_i_quad == parallel.avg_i_quad);
    CHECK(sequential.global_i_quad == parallel.global_i_quad);
}

TEST_CASE("coefficients stay within the unit interval") {
    for (std::uint64_t seed = 900; seed < 915; ++seed) {
        const Graph g = testutil::random_graph(30, 0.3, seed);
        const auto report = full_report(g);
        for (const auto& row : report.rows) {
            for (const auto& value : {row.i_quad, row.o_quad}) {
                if (value) {
                    CHECK(*value >= 0.0);
                    CHECK(*value <= 1.0);
                }
            }
        }
    }
}
