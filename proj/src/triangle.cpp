#include "quadra/triangle.hpp"

#include <stdexcept>

#include "quadra/detail/motif_kernel.hpp"

namespace quadra {

namespace {

TriangleStats stats_from_counts(const detail::NodeCounts& counts) {
    TriangleStats stats;
    stats.triangles = counts.tri_numerator / 2;
    stats.otc = counts.otc;
    stats.ote = counts.ote;
    if (counts.otc > 0) {
        stats.clustering = static_cast<double>(counts.tri_numerator) /
                           static_cast<double>(2 * counts.otc);
    }
    if (counts.ote > 0) {
        stats.closure = static_cast<double>(counts.tri_numerator) /
                        static_cast<double>(counts.ote);
    }
    return stats;
}

}  // namespace

TriangleStats triangle_stats(const Graph& g, NodeId i) {
    detail::Scratch scratch(g.node_count());
    return stats_from_counts(detail::node_counts(g, i, scratch));
}

std::optional<double> local_clustering(const Graph& g, NodeId i) {
    return triangle_stats(g, i).clustering;
}

std::optional<double> local_closure(const Graph& g, NodeId i) {
    return triangle_stats(g, i).closure;
}

double average_clustering(const Graph& g) {
    if (g.node_count() == 0) throw std::domain_error("average clustering of an empty graph");
    detail::Scratch scratch(g.node_count());
    double sum = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto stats = stats_from_counts(detail::node_counts(g, i, scratch));
        sum += stats.clustering.value_or(0.0);
    }
    return sum / static_cast<double>(g.node_count());
}

double average_closure(const Graph& g) {
    if (g.node_count() == 0) throw std::domain_error("average closure of an empty graph");
    detail::Scratch scratch(g.node_count());
    double sum = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto stats = stats_from_counts(detail::node_counts(g, i, scratch));
        sum += stats.closure.value_or(0.0);
    }
    return sum / static_cast<double>(g.node_count());
}

std::optional<double> global_clustering(const Graph& g) {
    detail::Scratch scratch(g.node_count());
    std::int64_t numerator = 0;
    std::int64_t denominator = 0;  // sum_i d_i (d_i - 1) = 2 sum_i OTC(i)
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto counts = detail::node_counts(g, i, scratch);
        numerator += counts.tri_numerator;
        denominator += 2 * counts.otc;
    }
    if (denominator == 0) return std::nullopt;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::optional<double> global_closure(const Graph& g) {
    detail::Scratch scratch(g.node_count());
    std::int64_t numerator = 0;
    std::int64_t denominator = 0;  // sum_i OTE(i)
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto counts = detail::node_counts(g, i, scratch);
        numerator += counts.tri_numerator;
        denominator += counts.ote;
    }
    if (denominator == 0) return std::nullopt;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace quadra
