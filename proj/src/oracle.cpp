#include "quadra/oracle.hpp"

#include <stdexcept>
#include <string>

namespace quadra {

namespace {

void check_cap(const Graph& g, std::size_t cap, const char* what) {
    if (g.node_count() > cap) {
        throw std::length_error(std::string("graph too large for brute-force ") + what + " (" +
                                std::to_string(g.node_count()) + " nodes > cap " +
                                std::to_string(cap) + "); use the coefficient fast path");
    }
}

}  // namespace

MotifCounts count_triangles_bruteforce(const Graph& g, std::size_t cap) {
    check_cap(g, cap, "triangle enumeration");
    const NodeId n = static_cast<NodeId>(g.node_count());
    MotifCounts counts;
    counts.per_node.assign(n, 0);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (NodeId k = j + 1; k < n; ++k) {
                if (g.has_edge(j, k) && g.has_edge(k, i)) {
                    ++counts.per_node[i];
                    ++counts.per_node[j];
                    ++counts.per_node[k];
                    ++counts.total;
                }
            }
        }
    }
    return counts;
}

MotifCounts count_quadrangles_bruteforce(const Graph& g, std::size_t cap) {
    check_cap(g, cap, "quadrangle enumeration");
    const NodeId n = static_cast<NodeId>(g.node_count());
    MotifCounts counts;
    counts.per_node.assign(n, 0);
    // A 4-cycle is a 4-subset plus a choice of the node opposite to the
    // smallest member; the three pairings below enumerate each cycle once.
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            for (NodeId c = b + 1; c < n; ++c) {
                for (NodeId d = c + 1; d < n; ++d) {
                    const bool ab = g.has_edge(a, b), ac = g.has_edge(a, c), ad = g.has_edge(a, d);
                    const bool bc = g.has_edge(b, c), bd = g.has_edge(b, d), cd = g.has_edge(c, d);
                    int cycles = 0;
                    if (ab && bc && cd && ad) ++cycles;  // a-b-c-d-a (opposite: c)
                    if (ab && bd && cd && ac) ++cycles;  // a-b-d-c-a (opposite: d)
                    if (ac && bc && bd && ad) ++cycles;  // a-c-b-d-a (opposite: b)
                    if (cycles > 0) {
                        counts.per_node[a] += cycles;
                        counts.per_node[b] += cycles;
                        counts.per_node[c] += cycles;
                        counts.per_node[d] += cycles;
                        counts.total += cycles;
                    }
                }
            }
        }
    }
    return counts;
}

OpenPathCounts count_open_paths_bruteforce(const Graph& g, std::size_t cap) {
    check_cap(g, cap, "path enumeration");
    const NodeId n = static_cast<NodeId>(g.node_count());
    OpenPathCounts counts;
    counts.otc.assign(n, 0);
    counts.ote.assign(n, 0);
    counts.oqi.assign(n, 0);
    counts.oqo.assign(n, 0);
    // Enumerate directed simple walks a-b-c(-d) over distinct nodes. Each
    // directionless path appears once per direction, so: the end slot a
    // collects both ends across the two directions; the inner slot b collects
    // each inner node exactly once for length-3 paths; the centre of a
    // length-2 path is hit twice and halved afterwards.
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b : g.neighbors(a)) {
            for (NodeId c : g.neighbors(b)) {
                if (c == a) continue;
                counts.ote[a] += 1;
                counts.otc[b] += 1;
                for (NodeId d : g.neighbors(c)) {
                    if (d == a || d == b) continue;
                    counts.oqo[a] += 1;
                    counts.oqi[b] += 1;
                }
            }
        }
    }
    for (auto& value : counts.otc) value /= 2;
    return counts;
}

NodeOpenPaths count_node_open_paths_bruteforce(const Graph& g, NodeId i, std::size_t cap) {
    const OpenPathCounts all = count_open_paths_bruteforce(g, cap);
    if (i >= g.node_count()) throw std::out_of_range("node id out of range");
    return {all.otc[i], all.ote[i], all.oqi[i], all.oqo[i]};
}

}  // namespace quadra
