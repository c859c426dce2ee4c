#pragma once

#include <utility>
#include <vector>

#include "quadra/graph.hpp"
#include "quadra/rng.hpp"

namespace testutil {

using quadra::Graph;
using quadra::NodeId;

inline Graph path_graph(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<NodeId>((i + 1) % n));
    return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph::from_edges(n, std::move(edges));
}

// Centre is node 0.
inline Graph star_graph(std::size_t leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, std::move(edges));
}

// K4 minus the a-d edge: a=0, b=1, c=2, d=3.
inline Graph diamond_graph() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

// Wrapper used by tests that want a local ER source independent of the
// null-model module under test.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    quadra::Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (rng.unit() < p) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace testutil
