#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quadra/edge_list.hpp"
#include "quadra/graph.hpp"
#include "quadra/quad.hpp"

namespace quadra {

enum class SplitMode { temporal, shuffled };

struct SplitSpec {
    SplitMode mode = SplitMode::temporal;
    double fraction = 0.7;  // in (0, 1)
    std::uint64_t seed = 0;
    std::uint32_t repeat_index = 0;
};

// Old graph from the first floor(fraction * |records|) records (temporal
// order, or a seeded shuffle of the file order); the new graph keeps the
// remaining records whose endpoints both appear in the old graph's node set
// V*, minus edges already present in the old graph. Both graphs share the
// V* id space, so node ids are interchangeable between them.
struct SplitResult {
    Graph old_graph;
    Graph new_graph;
};

SplitResult split_graph(const TemporalEdgeList& records, const SplitSpec& spec);

struct CandidatePair {
    NodeId u;
    NodeId v;
    int label;  // 1 iff the pair becomes an edge in the new graph
};

// all = every old-graph non-edge; otherwise negatives are sampled without
// replacement down to ratio * (number of positives), or all when fewer exist.
struct NegativeStrategy {
    bool all = true;
    double ratio = 0;
};

std::vector<CandidatePair> generate_candidates(const Graph& old_graph, const Graph& new_graph,
                                               const NegativeStrategy& strategy,
                                               std::uint64_t seed);

struct PairFeatureRow {
    NodeId u = 0;
    NodeId v = 0;
    double cn = 0;  // common neighbours
    double aa = 0;  // Adamic-Adar
    double ra = 0;  // resource allocation
    double c_u = 0, c_v = 0;
    double e_u = 0, e_v = 0;
    double i_u = 0, i_v = 0;
    double o_u = 0, o_v = 0;
    int label = 0;
};

// Structural features on the old graph plus both endpoints' coefficients
// (undefined treated as zero). Pairs must be old-graph non-edges.
std::vector<PairFeatureRow> pair_features(const Graph& old_graph,
                                          std::span<const CandidatePair> pairs,
                                          const CoefficientReport& report);

// Probability that a random positive outranks a random negative, ties
// counted one half. Throws std::domain_error unless both labels occur.
double roc_auc(std::span<const double> scores, std::span<const int> labels);

// Plain logistic regression on standardized features, batch gradient
// descent, zero-initialized: a deterministic stand-in classifier to smoke
// the pipeline end to end (not a reproduction of any boosted-tree results).
struct LogisticModel {
    std::vector<double> weights;
    double bias = 0;
    std::vector<double> feature_mean;
    std::vector<double> feature_scale;
};

LogisticModel train_smoke_classifier(std::span<const PairFeatureRow> rows, int iterations = 400,
                                     double learning_rate = 0.5);
std::vector<double> score(const LogisticModel& model, std::span<const PairFeatureRow> rows);

}  // namespace quadra
