#pragma once

#include <cstdint>
#include <vector>

#include "quadra/graph.hpp"

namespace quadra::detail {

// Raw per-node path/closure counts shared by the triangle and quadrangle
// coefficients. tri_numerator is sum_j |N(i) ∩ N(j)| (= 2 T(i)); the quad
// numerator is the triple sum shared by the i-quad and o-quad definitions
// (= 2 Q(i)).
struct NodeCounts {
    std::int64_t tri_numerator = 0;
    std::int64_t otc = 0;
    std::int64_t ote = 0;
    std::int64_t quad_numerator = 0;
    std::int64_t oqi = 0;
    std::int64_t oqo = 0;
};

// Scratch buffer reused across nodes: neighbor_flag must be node_count()
// zeros on entry and is restored to zeros before returning.
class Scratch {
public:
    explicit Scratch(std::size_t node_count) : neighbor_flag(node_count, 0) {}
    std::vector<std::uint8_t> neighbor_flag;
};

inline NodeCounts node_counts(const Graph& g, NodeId i, Scratch& scratch) {
    NodeCounts counts;
    auto& flag = scratch.neighbor_flag;
    const auto nbrs = g.neighbors(i);
    const std::int64_t d = static_cast<std::int64_t>(nbrs.size());
    counts.otc = d * (d - 1) / 2;

    for (NodeId j : nbrs) flag[j] = 1;
    for (NodeId j : nbrs) {
        const auto jn = g.neighbors(j);
        counts.ote += static_cast<std::int64_t>(jn.size()) - 1;
        for (NodeId k : jn) {
            if (flag[k]) ++counts.tri_numerator;
            if (k == i) continue;
            // k is adjacent to j which is adjacent to i: a length-2 path.
            const std::int64_t k_adjacent_i = flag[k];
            std::int64_t common = 0;  // |N(i) ∩ N(k)|, includes j
            for (NodeId l : g.neighbors(k)) common += flag[l];
            counts.quad_numerator += common - 1;  // minus j itself
            counts.oqi += d - 1 - k_adjacent_i;
            counts.oqo += static_cast<std::int64_t>(g.degree(k)) - 1 - k_adjacent_i;
        }
    }
    for (NodeId j : nbrs) flag[j] = 0;
    return counts;
}

// Weighted counterparts of the quad numerator and the two denominators,
// evaluated literally in ascending (j, k, l) order so results are
// bit-reproducible and degrade exactly to the integer counts at unit weights.
struct WeightedNodeCounts {
    double numerator = 0;
    double i_denominator = 0;
    double o_denominator = 0;
};

inline WeightedNodeCounts weighted_node_counts(const Graph& g, NodeId i) {
    WeightedNodeCounts counts;
    const auto nbrs = g.neighbors(i);
    const auto nbr_ws = g.neighbor_weights(i);

    for (std::size_t ji = 0; ji < nbrs.size(); ++ji) {
        const NodeId j = nbrs[ji];
        const double w_ij = nbr_ws[ji];
        const auto jn = g.neighbors(j);
        const auto jw = g.neighbor_weights(j);
        for (std::size_t ki = 0; ki < jn.size(); ++ki) {
            const NodeId k = jn[ki];
            if (k == i) continue;
            const double w_jk = jw[ki];
            const double base = w_ij * w_jk;
            const auto kn = g.neighbors(k);
            const auto kw = g.neighbor_weights(k);

            // numerator: l in N(i) ∩ N(k), l != j  (merge of two sorted lists)
            std::size_t a = 0, b = 0;
            while (a < nbrs.size() && b < kn.size()) {
                if (nbrs[a] < kn[b]) {
                    ++a;
                } else if (nbrs[a] > kn[b]) {
                    ++b;
                } else {
                    if (nbrs[a] != j) counts.numerator += base * nbr_ws[a] * kw[b];
                    ++a;
                    ++b;
                }
            }
            // i-denominator: l in N(i), l != j, l != k
            for (std::size_t li = 0; li < nbrs.size(); ++li) {
                if (nbrs[li] == j || nbrs[li] == k) continue;
                counts.i_denominator += base * nbr_ws[li];
            }
            // o-denominator: l in N(k), l != j, l != i
            for (std::size_t li = 0; li < kn.size(); ++li) {
                if (kn[li] == j || kn[li] == i) continue;
                counts.o_denominator += base * kw[li];
            }
        }
    }
    return counts;
}

}  // namespace quadra::detail
