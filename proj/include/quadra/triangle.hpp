#pragma once

#include <cstdint>
#include <optional>

#include "quadra/graph.hpp"

namespace quadra {

// Per-node triangle-formation counts and coefficients. clustering is
// T / OTC (focal node at the centre of the open triad), closure is
// 2T / OTE (focal node at the end); both are empty when the denominator
// vanishes, and that distinction is preserved in reports.
struct TriangleStats {
    std::int64_t triangles = 0;  // T(i)
    std::int64_t otc = 0;
    std::int64_t ote = 0;
    std::optional<double> clustering;
    std::optional<double> closure;
};

TriangleStats triangle_stats(const Graph& g, NodeId i);
std::optional<double> local_clustering(const Graph& g, NodeId i);
std::optional<double> local_closure(const Graph& g, NodeId i);

// Means over all nodes with undefined values contributing zero.
// Throw std::domain_error on an empty graph.
double average_clustering(const Graph& g);
double average_closure(const Graph& g);

// Network-level ratio forms; empty when no node has the required open
// triads. The two are computed through independent denominators and agree.
std::optional<double> global_clustering(const Graph& g);
std::optional<double> global_closure(const Graph& g);

}  // namespace quadra
