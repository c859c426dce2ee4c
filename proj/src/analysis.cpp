#include "quadra/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadra {

namespace {

std::optional<double> quotient(double a, double b) {
    if (b == 0.0) return std::nullopt;
    return a / b;
}

}  // namespace

SummaryRow summary(const Graph& g, std::string name, const CoefficientReport* report) {
    if (g.node_count() == 0) throw std::domain_error("summary of an empty graph");
    CoefficientReport local;
    if (report == nullptr) {
        local = full_report(g);
        report = &local;
    }
    SummaryRow row;
    row.name = std::move(name);
    row.nodes = g.node_count();
    row.edges = g.edge_count();
    row.mean_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
    row.avg_clustering = report->avg_clustering;
    row.avg_closure = report->avg_closure;
    row.avg_i_quad = report->avg_i_quad;
    row.avg_o_quad = report->avg_o_quad;
    row.c_over_e = quotient(row.avg_clustering, row.avg_closure);
    row.i_over_o = quotient(row.avg_i_quad, row.avg_o_quad);
    row.i_over_c = quotient(row.avg_i_quad, row.avg_clustering);
    row.o_over_e = quotient(row.avg_o_quad, row.avg_closure);
    return row;
}

NetworkFeatureVector feature_vector(const Graph& g, const CoefficientReport* report) {
    if (g.node_count() == 0) throw std::domain_error("feature vector of an empty graph");
    CoefficientReport local;
    if (report == nullptr) {
        local = full_report(g);
        report = &local;
    }
    NetworkFeatureVector features;
    features.mean_degree =
        2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
    features.avg_clustering = report->avg_clustering;
    features.avg_closure = report->avg_closure;
    features.avg_i_quad = report->avg_i_quad;
    features.avg_o_quad = report->avg_o_quad;
    return features;
}

std::vector<std::pair<double, double>> cdf(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("cdf of an empty value sequence");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> steps;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 == sorted.size() || sorted[i + 1] != sorted[i]) {
            steps.emplace_back(sorted[i], static_cast<double>(i + 1) / n);
        }
    }
    return steps;
}

std::vector<double> coefficient_values(const CoefficientReport& report, char which) {
    std::vector<double> values;
    values.reserve(report.rows.size());
    for (const auto& row : report.rows) {
        switch (which) {
            case 'C': values.push_back(row.clustering.value_or(0.0)); break;
            case 'E': values.push_back(row.closure.value_or(0.0)); break;
            case 'I': values.push_back(row.i_quad.value_or(0.0)); break;
            case 'O': values.push_back(row.o_quad.value_or(0.0)); break;
            default: throw std::invalid_argument("coefficient selector must be C, E, I or O");
        }
    }
    return values;
}

std::vector<DegreeBinRow> degree_binned_means(const Graph& g, const CoefficientReport* report) {
    if (g.node_count() == 0) throw std::domain_error("degree bins of an empty graph");
    CoefficientReport local;
    if (report == nullptr) {
        local = full_report(g);
        report = &local;
    }

    std::uint64_t max_degree = 0;
    for (const auto& row : report->rows) {
        max_degree = std::max<std::uint64_t>(max_degree, static_cast<std::uint64_t>(row.degree));
    }
    std::vector<DegreeBinRow> bins;
    for (std::uint64_t low = 1; low <= max_degree; low *= 2) {
        DegreeBinRow bin;
        bin.bin_low = low;
        bin.bin_high = low * 2;
        bins.push_back(bin);
    }
    std::vector<double> i_sums(bins.size(), 0.0), o_sums(bins.size(), 0.0);
    for (const auto& row : report->rows) {
        if (row.degree < 1) continue;
        std::size_t b = 0;
        while (static_cast<std::uint64_t>(row.degree) >= bins[b].bin_high) ++b;
        ++bins[b].node_count;
        i_sums[b] += row.i_quad.value_or(0.0);
        o_sums[b] += row.o_quad.value_or(0.0);
    }
    std::vector<DegreeBinRow> occupied;
    for (std::size_t b = 0; b < bins.size(); ++b) {
        if (bins[b].node_count == 0) continue;
        bins[b].mean_i = i_sums[b] / static_cast<double>(bins[b].node_count);
        bins[b].mean_o = o_sums[b] / static_cast<double>(bins[b].node_count);
        occupied.push_back(bins[b]);
    }
    return occupied;
}

}  // namespace quadra
