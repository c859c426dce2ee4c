#include "quadra/quad.hpp"

#include <cassert>
#include <stdexcept>

#include "quadra/detail/motif_kernel.hpp"
#include "quadra/detail/parallel.hpp"

namespace quadra {

namespace {

QuadStats stats_from_counts(const detail::NodeCounts& counts) {
    QuadStats stats;
    assert(counts.quad_numerator % 2 == 0);
    stats.numerator = counts.quad_numerator;
    stats.quadrangles = counts.quad_numerator / 2;
    stats.oqi = counts.oqi;
    stats.oqo = counts.oqo;
    if (counts.oqi > 0) {
        stats.i_quad = static_cast<double>(counts.quad_numerator) / static_cast<double>(counts.oqi);
    }
    if (counts.oqo > 0) {
        stats.o_quad = static_cast<double>(counts.quad_numerator) / static_cast<double>(counts.oqo);
    }
    return stats;
}

WeightedQuadStats weighted_stats_from_counts(const detail::WeightedNodeCounts& counts) {
    WeightedQuadStats stats;
    stats.numerator = counts.numerator;
    stats.i_denominator = counts.i_denominator;
    stats.o_denominator = counts.o_denominator;
    if (counts.i_denominator > 0) stats.i_quad = counts.numerator / counts.i_denominator;
    if (counts.o_denominator > 0) stats.o_quad = counts.numerator / counts.o_denominator;
    return stats;
}

void require_weights(const Graph& g) {
    if (!g.is_weighted()) {
        throw std::invalid_argument(
            "weighted quad coefficients need edge weights; load the graph as weighted or call "
            "with_unit_weights() first");
    }
}

}  // namespace

std::int64_t quad_numerator(const Graph& g, NodeId i) {
    detail::Scratch scratch(g.node_count());
    return detail::node_counts(g, i, scratch).quad_numerator;
}

QuadStats quad_stats(const Graph& g, NodeId i) {
    detail::Scratch scratch(g.node_count());
    return stats_from_counts(detail::node_counts(g, i, scratch));
}

std::optional<double> i_quad(const Graph& g, NodeId i) { return quad_stats(g, i).i_quad; }

std::optional<double> o_quad(const Graph& g, NodeId i) { return quad_stats(g, i).o_quad; }

double average_i_quad(const Graph& g) {
    if (g.node_count() == 0) throw std::domain_error("average i-quad of an empty graph");
    detail::Scratch scratch(g.node_count());
    double sum = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        sum += stats_from_counts(detail::node_counts(g, i, scratch)).i_quad.value_or(0.0);
    }
    return sum / static_cast<double>(g.node_count());
}

double average_o_quad(const Graph& g) {
    if (g.node_count() == 0) throw std::domain_error("average o-quad of an empty graph");
    detail::Scratch scratch(g.node_count());
    double sum = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        sum += stats_from_counts(detail::node_counts(g, i, scratch)).o_quad.value_or(0.0);
    }
    return sum / static_cast<double>(g.node_count());
}

std::optional<double> global_i_quad(const Graph& g) {
    detail::Scratch scratch(g.node_count());
    std::int64_t numerator = 0;
    std::int64_t denominator = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto counts = detail::node_counts(g, i, scratch);
        numerator += counts.quad_numerator;
        denominator += counts.oqi;
    }
    if (denominator == 0) return std::nullopt;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::optional<double> global_o_quad(const Graph& g) {
    detail::Scratch scratch(g.node_count());
    std::int64_t numerator = 0;
    std::int64_t denominator = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto counts = detail::node_counts(g, i, scratch);
        numerator += counts.quad_numerator;
        denominator += counts.oqo;
    }
    if (denominator == 0) return std::nullopt;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

WeightedQuadStats weighted_quad_stats(const Graph& g, NodeId i) {
    require_weights(g);
    if (i >= g.node_count()) throw std::out_of_range("node id out of range");
    return weighted_stats_from_counts(detail::weighted_node_counts(g, i));
}

std::optional<double> weighted_i_quad(const Graph& g, NodeId i) {
    return weighted_quad_stats(g, i).i_quad;
}

std::optional<double> weighted_o_quad(const Graph& g, NodeId i) {
    return weighted_quad_stats(g, i).o_quad;
}

CoefficientReport full_report(const Graph& g, unsigned threads) {
    const std::size_t n = g.node_count();
    CoefficientReport report;
    report.weighted = g.is_weighted();
    report.rows.resize(n);

    detail::parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end) {
        detail::Scratch scratch(n);
        for (std::size_t idx = begin; idx < end; ++idx) {
            const NodeId i = static_cast<NodeId>(idx);
            const auto counts = detail::node_counts(g, i, scratch);
            NodeCoefficients& row = report.rows[idx];
            row.degree = static_cast<std::int64_t>(g.degree(i));
            row.triangles = counts.tri_numerator / 2;
            row.quadrangles = counts.quad_numerator / 2;
            row.otc = counts.otc;
            row.ote = counts.ote;
            row.oqi = counts.oqi;
            row.oqo = counts.oqo;
            if (counts.otc > 0) {
                row.clustering = static_cast<double>(counts.tri_numerator) /
                                 static_cast<double>(2 * counts.otc);
            }
            if (counts.ote > 0) {
                row.closure = static_cast<double>(counts.tri_numerator) /
                              static_cast<double>(counts.ote);
            }
            if (counts.oqi > 0) {
                row.i_quad = static_cast<double>(counts.quad_numerator) /
                             static_cast<double>(counts.oqi);
            }
            if (counts.oqo > 0) {
                row.o_quad = static_cast<double>(counts.quad_numerator) /
                             static_cast<double>(counts.oqo);
            }
            if (report.weighted) {
                const auto w = detail::weighted_node_counts(g, i);
                if (w.i_denominator > 0) row.weighted_i_quad = w.numerator / w.i_denominator;
                if (w.o_denominator > 0) row.weighted_o_quad = w.numerator / w.o_denominator;
            }
        }
    });

    // Averages and global ratios reduce sequentially in node order so the
    // results do not depend on the thread count.
    std::int64_t tri_num_total = 0, otc2_total = 0, ote_total = 0;
    std::int64_t quad_num_total = 0, oqi_total = 0, oqo_total = 0;
    double c_sum = 0, e_sum = 0, i_sum = 0, o_sum = 0;
    for (const auto& row : report.rows) {
        tri_num_total += 2 * row.triangles;
        otc2_total += 2 * row.otc;
        ote_total += row.ote;
        quad_num_total += 2 * row.quadrangles;
        oqi_total += row.oqi;
        oqo_total += row.oqo;
        c_sum += row.clustering.value_or(0.0);
        e_sum += row.closure.value_or(0.0);
        i_sum += row.i_quad.value_or(0.0);
        o_sum += row.o_quad.value_or(0.0);
    }
    if (n > 0) {
        report.avg_clustering = c_sum / static_cast<double>(n);
        report.avg_closure = e_sum / static_cast<double>(n);
        report.avg_i_quad = i_sum / static_cast<double>(n);
        report.avg_o_quad = o_sum / static_cast<double>(n);
    }
    if (otc2_total > 0) {
        report.global_clustering =
            static_cast<double>(tri_num_total) / static_cast<double>(otc2_total);
    }
    if (ote_total > 0) {
        report.global_closure = static_cast<double>(tri_num_total) / static_cast<double>(ote_total);
    }
    if (oqi_total > 0) {
        report.global_i_quad =
            static_cast<double>(quad_num_total) / static_cast<double>(oqi_total);
    }
    if (oqo_total > 0) {
        report.global_o_quad =
            static_cast<double>(quad_num_total) / static_cast<double>(oqo_total);
    }
    return report;
}

}  // namespace quadra
