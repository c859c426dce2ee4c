#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quadra {

using NodeId = std::uint32_t;

struct WeightedEdge {
    NodeId u;
    NodeId v;
    double w;
};

struct DegreeStats {
    double mean_degree;       // <k> = 2m / |V|
    double size_biased_mean;  // k-bar = (sum d^2) / (sum d)
    std::size_t edge_count;   // m
};

// Immutable undirected simple graph. Adjacency is CSR-style with per-node
// sorted neighbor lists so intersections run in O(d_i + d_j) and iteration
// order is deterministic. Optional per-edge weights are stored aligned with
// the adjacency array (each edge's weight appears once per direction).
class Graph {
public:
    Graph() = default;

    // Self-loops are dropped; parallel edges collapse (max weight wins).
    static Graph from_edges(std::size_t node_count,
                            std::vector<std::pair<NodeId, NodeId>> edges);
    static Graph from_weighted_edges(std::size_t node_count,
                                     std::vector<WeightedEdge> edges);

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }
    bool is_weighted() const { return weighted_flag_; }

    std::size_t degree(NodeId i) const {
        check_node(i);
        return offsets_[i + 1] - offsets_[i];
    }

    std::span<const NodeId> neighbors(NodeId i) const {
        check_node(i);
        return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    // Aligned with neighbors(i); only valid on weighted graphs.
    std::span<const double> neighbor_weights(NodeId i) const;

    bool has_edge(NodeId i, NodeId j) const;

    // Weight of an existing edge; throws std::out_of_range if absent.
    double edge_weight(NodeId i, NodeId j) const;

    const std::string& label(NodeId i) const {
        check_node(i);
        return labels_[i];
    }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // Copy with every edge weight set to 1 (for weighted ops on binary data).
    Graph with_unit_weights() const;

    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    void check_node(NodeId i) const;
    void build(std::size_t node_count, std::vector<WeightedEdge>&& edges, bool weighted);

    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<double> weights_;
    std::vector<std::string> labels_;
    bool weighted_flag_ = false;
};

// Throws std::domain_error when the graph has no edges.
DegreeStats degree_stats(const Graph& g);

}  // namespace quadra
