#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadra/graph.hpp"
#include "quadra/quad.hpp"

namespace quadra {

// The 5 features used for network classification.
struct NetworkFeatureVector {
    double mean_degree = 0;
    double avg_clustering = 0;
    double avg_closure = 0;
    double avg_i_quad = 0;
    double avg_o_quad = 0;
};

struct SummaryRow {
    std::string name;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double mean_degree = 0;
    double avg_clustering = 0;
    double avg_closure = 0;
    double avg_i_quad = 0;
    double avg_o_quad = 0;
    std::optional<double> c_over_e;
    std::optional<double> i_over_o;
    std::optional<double> i_over_c;
    std::optional<double> o_over_e;
};

struct DegreeBinRow {
    std::uint64_t bin_low = 0;   // inclusive
    std::uint64_t bin_high = 0;  // exclusive
    std::size_t node_count = 0;
    double mean_i = 0;
    double mean_o = 0;
};

// Network-level summary (nodes, edges, mean degree, the four coefficient
// averages and their quotients). Pass a precomputed report to avoid
// recomputation; quotients with a zero denominator stay empty.
SummaryRow summary(const Graph& g, std::string name, const CoefficientReport* report = nullptr);

NetworkFeatureVector feature_vector(const Graph& g, const CoefficientReport* report = nullptr);

// Right-continuous empirical CDF: one (value, F(value)) step per distinct
// value, terminal point exactly 1. Throws std::invalid_argument when empty.
std::vector<std::pair<double, double>> cdf(std::span<const double> values);

// Per-node coefficient values with undefined treated as zero; which is one
// of 'C', 'E', 'I', 'O'.
std::vector<double> coefficient_values(const CoefficientReport& report, char which);

// Mean i-quad/o-quad per logarithmic degree bin [2^t, 2^(t+1)); degree-0
// nodes are excluded, empty bins are omitted.
std::vector<DegreeBinRow> degree_binned_means(const Graph& g,
                                              const CoefficientReport* report = nullptr);

}  // namespace quadra
