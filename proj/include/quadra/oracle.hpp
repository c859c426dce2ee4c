#pragma once

#include <cstdint>
#include <vector>

#include "quadra/graph.hpp"

namespace quadra {

// Brute-force motif enumeration for small graphs. Deliberately follows the
// subgraph definitions directly (triples, 4-subsets, simple paths) rather
// than any of the arithmetic used by the coefficient fast path, so it can
// serve as an independent correctness oracle.

struct MotifCounts {
    std::vector<std::int64_t> per_node;
    std::int64_t total = 0;
};

struct OpenPathCounts {
    std::vector<std::int64_t> otc;  // open triads with the node as centre
    std::vector<std::int64_t> ote;  // open triads with the node as end
    std::vector<std::int64_t> oqi;  // open quadriads with the node as inner
    std::vector<std::int64_t> oqo;  // open quadriads with the node as outer
};

struct NodeOpenPaths {
    std::int64_t otc = 0;
    std::int64_t ote = 0;
    std::int64_t oqi = 0;
    std::int64_t oqo = 0;
};

// All three throw std::length_error when the graph exceeds the size cap,
// pointing the caller to the coefficient fast path instead.
MotifCounts count_triangles_bruteforce(const Graph& g, std::size_t cap = 2000);

// Quadrangles are simple 4-cycles on distinct nodes; chords are permitted
// (non-induced subgraph count). A K4 contains 3 distinct 4-cycles.
MotifCounts count_quadrangles_bruteforce(const Graph& g, std::size_t cap = 1000);

OpenPathCounts count_open_paths_bruteforce(const Graph& g, std::size_t cap = 1000);
NodeOpenPaths count_node_open_paths_bruteforce(const Graph& g, NodeId i, std::size_t cap = 1000);

}  // namespace quadra
