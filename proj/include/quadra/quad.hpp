#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadra/graph.hpp"

namespace quadra {

// Per-node quadrangle-formation counts and coefficients. The i-quad and
// o-quad coefficients share one numerator (twice the number of quadrangles
// containing the node) and differ only in which open quadriads normalize it:
// inner-node-based (OQI) or outer-node-based (OQO).
struct QuadStats {
    std::int64_t quadrangles = 0;   // Q(i)
    std::int64_t numerator = 0;     // 2 Q(i)
    std::int64_t oqi = 0;
    std::int64_t oqo = 0;
    std::optional<double> i_quad;
    std::optional<double> o_quad;
};

std::int64_t quad_numerator(const Graph& g, NodeId i);
QuadStats quad_stats(const Graph& g, NodeId i);
std::optional<double> i_quad(const Graph& g, NodeId i);
std::optional<double> o_quad(const Graph& g, NodeId i);

// Means over all nodes, undefined values contributing zero.
// Throw std::domain_error on an empty graph.
double average_i_quad(const Graph& g);
double average_o_quad(const Graph& g);

// Network-level ratio forms, computed through independent denominators;
// empty when no open quadriad of the respective kind exists.
std::optional<double> global_i_quad(const Graph& g);
std::optional<double> global_o_quad(const Graph& g);

// Weighted extensions (throw std::invalid_argument on unweighted graphs;
// assign unit weights first to run them on binary data). With all weights
// equal to one they reproduce the unweighted coefficients exactly.
struct WeightedQuadStats {
    double numerator = 0;
    double i_denominator = 0;
    double o_denominator = 0;
    std::optional<double> i_quad;
    std::optional<double> o_quad;
};

WeightedQuadStats weighted_quad_stats(const Graph& g, NodeId i);
std::optional<double> weighted_i_quad(const Graph& g, NodeId i);
std::optional<double> weighted_o_quad(const Graph& g, NodeId i);

// One row per node merging the triangle and quadrangle views.
struct NodeCoefficients {
    std::int64_t degree = 0;
    std::int64_t triangles = 0;
    std::int64_t quadrangles = 0;
    std::int64_t otc = 0;
    std::int64_t ote = 0;
    std::int64_t oqi = 0;
    std::int64_t oqo = 0;
    std::optional<double> clustering;
    std::optional<double> closure;
    std::optional<double> i_quad;
    std::optional<double> o_quad;
    std::optional<double> weighted_i_quad;
    std::optional<double> weighted_o_quad;
};

struct CoefficientReport {
    std::vector<NodeCoefficients> rows;  // indexed by node id
    bool weighted = false;

    double avg_clustering = 0;
    double avg_closure = 0;
    double avg_i_quad = 0;
    double avg_o_quad = 0;
    std::optional<double> global_clustering;
    std::optional<double> global_closure;
    std::optional<double> global_i_quad;
    std::optional<double> global_o_quad;
};

// Computes every coefficient in one pass over the nodes. Per-node work is
// independent and runs on `threads` workers (0 = hardware concurrency);
// output is identical for any thread count.
CoefficientReport full_report(const Graph& g, unsigned threads = 0);

}  // namespace quadra
