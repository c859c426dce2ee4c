#pragma once

#include <cstdint>

#include "quadra/graph.hpp"

namespace quadra {

// Randomized breadth-first node sampling: start at a random node, visit
// neighbors in random order, restart from a random unvisited node whenever
// the frontier empties, stop once target_nodes are collected. Returns the
// induced subgraph on the sampled set (original labels kept, weights kept).
// Deterministic for a fixed seed. target_nodes >= node_count returns the
// whole graph; target_nodes == 0 throws std::invalid_argument.
Graph bfs_sample(const Graph& g, std::size_t target_nodes, std::uint64_t seed);

// The sampled node ids themselves, ascending.
std::vector<NodeId> bfs_sample_nodes(const Graph& g, std::size_t target_nodes,
                                     std::uint64_t seed);

}  // namespace quadra
