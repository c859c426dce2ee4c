#include "quadra/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace quadra {

void Graph::check_node(NodeId i) const {
    if (i >= node_count()) {
        throw std::out_of_range("node id " + std::to_string(i) + " out of range (|V| = " +
                                std::to_string(node_count()) + ")");
    }
}

Graph Graph::from_edges(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges) {
    std::vector<WeightedEdge> weighted;
    weighted.reserve(edges.size());
    for (const auto& [u, v] : edges) weighted.push_back({u, v, 1.0});
    Graph g;
    g.build(node_count, std::move(weighted), false);
    return g;
}

Graph Graph::from_weighted_edges(std::size_t node_count, std::vector<WeightedEdge> edges) {
    Graph g;
    g.build(node_count, std::move(edges), true);
    return g;
}

void Graph::build(std::size_t node_count, std::vector<WeightedEdge>&& edges, bool weighted) {
    weighted_flag_ = weighted;
    for (auto& e : edges) {
        if (e.u >= node_count || e.v >= node_count) {
            throw std::out_of_range("edge endpoint exceeds node count");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    // Drop self-loops, collapse parallels keeping the maximum weight.
    std::erase_if(edges, [](const WeightedEdge& e) { return e.u == e.v; });
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    std::vector<WeightedEdge> unique;
    unique.reserve(edges.size());
    for (const auto& e : edges) {
        if (!unique.empty() && unique.back().u == e.u && unique.back().v == e.v) {
            unique.back().w = std::max(unique.back().w, e.w);
        } else {
            unique.push_back(e);
        }
    }

    offsets_.assign(node_count + 1, 0);
    for (const auto& e : unique) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i <= node_count; ++i) offsets_[i] += offsets_[i - 1];

    adjacency_.assign(offsets_[node_count], 0);
    if (weighted) weights_.assign(offsets_[node_count], 0.0);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : unique) {
        adjacency_[cursor[e.u]] = e.v;
        adjacency_[cursor[e.v]] = e.u;
        if (weighted) {
            weights_[cursor[e.u]] = e.w;
            weights_[cursor[e.v]] = e.w;
        }
        ++cursor[e.u];
        ++cursor[e.v];
    }
    // Filling from (u,v)-sorted edges leaves every neighbor list sorted: a
    // node's smaller neighbors all arrive before its larger ones, each group
    // in ascending order.
#ifndef NDEBUG
    for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) {
        assert(std::is_sorted(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1])));
    }
#endif

    labels_.resize(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels_[i] = std::to_string(i);
}

std::span<const double> Graph::neighbor_weights(NodeId i) const {
    check_node(i);
    if (!is_weighted()) throw std::logic_error("graph has no edge weights");
    return {weights_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

bool Graph::has_edge(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    auto nbrs = neighbors(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

double Graph::edge_weight(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    if (!is_weighted()) throw std::logic_error("graph has no edge weights");
    auto nbrs = neighbors(i);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j);
    if (it == nbrs.end() || *it != j) {
        throw std::out_of_range("no edge between " + std::to_string(i) + " and " + std::to_string(j));
    }
    return weights_[offsets_[i] + static_cast<std::size_t>(it - nbrs.begin())];
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (labels.size() != node_count()) {
        throw std::invalid_argument("label count does not match node count");
    }
    labels_ = std::move(labels);
}

Graph Graph::with_unit_weights() const {
    Graph g = *this;
    g.weighted_flag_ = true;
    g.weights_.assign(g.adjacency_.size(), 1.0);
    return g;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId i = 0; i < node_count(); ++i) {
        for (NodeId j : neighbors(i)) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    if (g.edge_count() == 0) {
        throw std::domain_error("degree statistics are undefined on a graph without edges");
    }
    const std::size_t n = g.node_count();
    std::uint64_t sum_d = 0;
    std::uint64_t sum_d2 = 0;
    for (NodeId i = 0; i < n; ++i) {
        const std::uint64_t d = g.degree(i);
        sum_d += d;
        sum_d2 += d * d;
    }
    DegreeStats stats;
    stats.edge_count = g.edge_count();
    stats.mean_degree = static_cast<double>(sum_d) / static_cast<double>(n);
    stats.size_biased_mean = static_cast<double>(sum_d2) / static_cast<double>(sum_d);
    return stats;
}

}  // namespace quadra
