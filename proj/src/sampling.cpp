#include "quadra/sampling.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "quadra/rng.hpp"

namespace quadra {

std::vector<NodeId> bfs_sample_nodes(const Graph& g, std::size_t target_nodes,
                                     std::uint64_t seed) {
    if (target_nodes == 0) throw std::invalid_argument("bfs_sample needs target_nodes > 0");
    const std::size_t n = g.node_count();
    if (target_nodes >= n) {
        std::vector<NodeId> all(n);
        for (NodeId v = 0; v < n; ++v) all[v] = v;
        return all;
    }

    Rng rng(seed);
    std::vector<std::uint8_t> visited(n, 0);
    std::vector<NodeId> sampled;
    sampled.reserve(target_nodes);
    std::deque<NodeId> frontier;

    auto visit = [&](NodeId node) {
        visited[node] = 1;
        sampled.push_back(node);
        frontier.push_back(node);
    };

    visit(static_cast<NodeId>(rng.below(n)));
    std::vector<NodeId> order;
    while (sampled.size() < target_nodes) {
        if (frontier.empty()) {
            // Component exhausted: restart from a random unvisited node.
            std::vector<NodeId> unvisited;
            unvisited.reserve(n - sampled.size());
            for (NodeId v = 0; v < n; ++v) {
                if (!visited[v]) unvisited.push_back(v);
            }
            visit(unvisited[rng.below(unvisited.size())]);
            continue;
        }
        const NodeId current = frontier.front();
        frontier.pop_front();
        const auto nbrs = g.neighbors(current);
        order.assign(nbrs.begin(), nbrs.end());
        rng.shuffle(order);
        for (NodeId next : order) {
            if (visited[next]) continue;
            visit(next);
            if (sampled.size() == target_nodes) break;
        }
    }

    std::sort(sampled.begin(), sampled.end());
    return sampled;
}

Graph bfs_sample(const Graph& g, std::size_t target_nodes, std::uint64_t seed) {
    if (target_nodes >= g.node_count() && target_nodes > 0) return g;
    const std::vector<NodeId> sampled = bfs_sample_nodes(g, target_nodes, seed);
    const std::size_t n = g.node_count();

    // Induced subgraph: new dense ids in ascending original-id order.
    std::vector<NodeId> new_id(n, 0);
    std::vector<std::uint8_t> in_sample(n, 0);
    for (std::size_t idx = 0; idx < sampled.size(); ++idx) {
        new_id[sampled[idx]] = static_cast<NodeId>(idx);
        in_sample[sampled[idx]] = 1;
    }

    std::vector<std::string> labels;
    labels.reserve(sampled.size());
    for (NodeId v : sampled) labels.push_back(g.label(v));

    Graph result;
    if (g.is_weighted()) {
        std::vector<WeightedEdge> edges;
        for (NodeId v : sampled) {
            const auto nbrs = g.neighbors(v);
            const auto ws = g.neighbor_weights(v);
            for (std::size_t p = 0; p < nbrs.size(); ++p) {
                if (v < nbrs[p] && in_sample[nbrs[p]]) {
                    edges.push_back({new_id[v], new_id[nbrs[p]], ws[p]});
                }
            }
        }
        result = Graph::from_weighted_edges(sampled.size(), std::move(edges));
    } else {
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId v : sampled) {
            for (NodeId w : g.neighbors(v)) {
                if (v < w && in_sample[w]) edges.emplace_back(new_id[v], new_id[w]);
            }
        }
        result = Graph::from_edges(sampled.size(), std::move(edges));
    }
    result.set_labels(std::move(labels));
    return result;
}

}  // namespace quadra
