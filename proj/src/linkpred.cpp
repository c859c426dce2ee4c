#include "quadra/linkpred.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "quadra/rng.hpp"

namespace quadra {

namespace {

std::array<double, 11> feature_columns(const PairFeatureRow& row) {
    return {row.cn, row.aa, row.ra, row.c_u, row.c_v, row.e_u,
            row.e_v, row.i_u, row.i_v, row.o_u, row.o_v};
}

}  // namespace

SplitResult split_graph(const TemporalEdgeList& records, const SplitSpec& spec) {
    if (!(spec.fraction > 0.0 && spec.fraction < 1.0)) {
        throw std::invalid_argument("split fraction must lie in (0, 1)");
    }

    std::vector<TemporalRecord> ordered;
    if (spec.mode == SplitMode::temporal) {
        ordered = records.sorted_by_time().records();
    } else {
        ordered = records.records();
        Rng rng = Rng::substream(spec.seed, spec.repeat_index);
        rng.shuffle(ordered);
    }

    const std::size_t cut =
        static_cast<std::size_t>(spec.fraction * static_cast<double>(ordered.size()));

    std::set<std::pair<NodeId, NodeId>> old_edges;
    std::set<NodeId> old_nodes;
    for (std::size_t r = 0; r < cut; ++r) {
        const auto [lo, hi] = std::minmax(ordered[r].u, ordered[r].v);
        if (lo == hi) continue;
        old_edges.insert({lo, hi});
        old_nodes.insert(lo);
        old_nodes.insert(hi);
    }
    if (old_edges.size() < 2) {
        throw std::domain_error("temporal split left fewer than 2 edges in the old graph");
    }

    // Compact V* ids ascending by original id.
    std::vector<NodeId> star_nodes(old_nodes.begin(), old_nodes.end());
    std::vector<NodeId> compact(records.node_count(), 0);
    std::vector<std::uint8_t> in_star(records.node_count(), 0);
    std::vector<std::string> labels;
    labels.reserve(star_nodes.size());
    for (std::size_t idx = 0; idx < star_nodes.size(); ++idx) {
        compact[star_nodes[idx]] = static_cast<NodeId>(idx);
        in_star[star_nodes[idx]] = 1;
        labels.push_back(records.labels()[star_nodes[idx]]);
    }

    std::vector<std::pair<NodeId, NodeId>> old_compact;
    old_compact.reserve(old_edges.size());
    for (const auto& [u, v] : old_edges) old_compact.emplace_back(compact[u], compact[v]);

    std::set<std::pair<NodeId, NodeId>> new_edges;
    for (std::size_t r = cut; r < ordered.size(); ++r) {
        const auto [lo, hi] = std::minmax(ordered[r].u, ordered[r].v);
        if (lo == hi) continue;
        if (!in_star[lo] || !in_star[hi]) continue;
        if (old_edges.count({lo, hi})) continue;
        new_edges.insert({compact[lo], compact[hi]});
    }
    if (new_edges.size() < 2) {
        throw std::domain_error("temporal split left fewer than 2 positive edges in the new graph");
    }

    SplitResult result;
    result.old_graph = Graph::from_edges(star_nodes.size(), std::move(old_compact));
    result.old_graph.set_labels(labels);
    std::vector<std::pair<NodeId, NodeId>> new_compact(new_edges.begin(), new_edges.end());
    result.new_graph = Graph::from_edges(star_nodes.size(), std::move(new_compact));
    result.new_graph.set_labels(std::move(labels));
    return result;
}

std::vector<CandidatePair> generate_candidates(const Graph& old_graph, const Graph& new_graph,
                                               const NegativeStrategy& strategy,
                                               std::uint64_t seed) {
    if (old_graph.node_count() != new_graph.node_count()) {
        throw std::invalid_argument("old and new graph must share the V* node set");
    }
    const std::size_t n = old_graph.node_count();

    std::vector<CandidatePair> candidates;
    std::size_t positives = 0;
    for (const auto& [u, v] : new_graph.edges()) {
        candidates.push_back({u, v, 1});
        ++positives;
    }
    if (positives == 0) throw std::domain_error("no positive examples: the new graph is empty");

    const std::size_t pair_count = n * (n - 1) / 2;
    const std::size_t available = pair_count - old_graph.edge_count() - positives;
    std::size_t wanted = available;
    if (!strategy.all) {
        if (strategy.ratio <= 0) throw std::invalid_argument("negative ratio must be positive");
        wanted = std::min<std::size_t>(
            available, static_cast<std::size_t>(strategy.ratio * static_cast<double>(positives)));
    }

    if (strategy.all || wanted * 4 >= available) {
        // Enumerate all negatives (ascending pair order), then thin if needed.
        std::vector<CandidatePair> negatives;
        negatives.reserve(available);
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (old_graph.has_edge(u, v) || new_graph.has_edge(u, v)) continue;
                negatives.push_back({u, v, 0});
            }
        }
        if (wanted < negatives.size()) {
            Rng rng(seed);
            // Partial Fisher-Yates keeps exactly `wanted` uniform picks.
            for (std::size_t i = 0; i < wanted; ++i) {
                const std::size_t j = i + static_cast<std::size_t>(rng.below(negatives.size() - i));
                std::swap(negatives[i], negatives[j]);
            }
            negatives.resize(wanted);
        }
        candidates.insert(candidates.end(), negatives.begin(), negatives.end());
    } else {
        // Sparse regime: rejection-sample distinct non-edges.
        Rng rng(seed);
        std::unordered_set<std::uint64_t> taken;
        taken.reserve(wanted * 2);
        while (taken.size() < wanted) {
            NodeId u = static_cast<NodeId>(rng.below(n));
            NodeId v = static_cast<NodeId>(rng.below(n));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (old_graph.has_edge(u, v) || new_graph.has_edge(u, v)) continue;
            const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
            if (!taken.insert(key).second) continue;
            candidates.push_back({u, v, 0});
        }
    }
    return candidates;
}

std::vector<PairFeatureRow> pair_features(const Graph& old_graph,
                                          std::span<const CandidatePair> pairs,
                                          const CoefficientReport& report) {
    if (report.rows.size() != old_graph.node_count()) {
        throw std::invalid_argument("coefficient report does not match the old graph");
    }
    std::vector<PairFeatureRow> rows;
    rows.reserve(pairs.size());
    for (const auto& pair : pairs) {
        if (old_graph.has_edge(pair.u, pair.v)) {
            throw std::invalid_argument("candidate pair is already an edge in the old graph");
        }
        PairFeatureRow row;
        row.u = pair.u;
        row.v = pair.v;
        row.label = pair.label;

        const auto nu = old_graph.neighbors(pair.u);
        const auto nv = old_graph.neighbors(pair.v);
        std::size_t a = 0, b = 0;
        while (a < nu.size() && b < nv.size()) {
            if (nu[a] < nv[b]) {
                ++a;
            } else if (nu[a] > nv[b]) {
                ++b;
            } else {
                const double dz = static_cast<double>(old_graph.degree(nu[a]));
                row.cn += 1;
                if (dz > 1) row.aa += 1.0 / std::log(dz);
                row.ra += 1.0 / dz;
                ++a;
                ++b;
            }
        }

        const auto& ru = report.rows[pair.u];
        const auto& rv = report.rows[pair.v];
        row.c_u = ru.clustering.value_or(0.0);
        row.c_v = rv.clustering.value_or(0.0);
        row.e_u = ru.closure.value_or(0.0);
        row.e_v = rv.closure.value_or(0.0);
        row.i_u = ru.i_quad.value_or(0.0);
        row.i_v = rv.i_quad.value_or(0.0);
        row.o_u = ru.o_quad.value_or(0.0);
        row.o_v = rv.o_quad.value_or(0.0);
        rows.push_back(row);
    }
    return rows;
}

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size()) {
        throw std::invalid_argument("scores and labels differ in length");
    }
    std::size_t positives = 0;
    for (int label : labels) positives += label == 1 ? 1 : 0;
    const std::size_t negatives = labels.size() - positives;
    if (positives == 0 || negatives == 0) {
        throw std::domain_error("ROC-AUC needs both a positive and a negative example");
    }

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Mann-Whitney via average ranks over tie groups.
    double positive_rank_sum = 0;
    std::size_t idx = 0;
    while (idx < order.size()) {
        std::size_t end = idx;
        while (end < order.size() && scores[order[end]] == scores[order[idx]]) ++end;
        const double avg_rank = static_cast<double>(idx + 1 + end) / 2.0;  // ranks are 1-based
        for (std::size_t t = idx; t < end; ++t) {
            if (labels[order[t]] == 1) positive_rank_sum += avg_rank;
        }
        idx = end;
    }
    const double p = static_cast<double>(positives);
    const double auc = (positive_rank_sum - p * (p + 1.0) / 2.0) /
                       (p * static_cast<double>(negatives));
    return auc;
}

LogisticModel train_smoke_classifier(std::span<const PairFeatureRow> rows, int iterations,
                                     double learning_rate) {
    std::size_t positives = 0;
    for (const auto& row : rows) positives += row.label == 1 ? 1 : 0;
    if (positives == 0 || positives == rows.size()) {
        throw std::domain_error("training data must contain both classes");
    }

    constexpr std::size_t kFeatures = 11;
    LogisticModel model;
    model.feature_mean.assign(kFeatures, 0.0);
    model.feature_scale.assign(kFeatures, 1.0);
    const double n = static_cast<double>(rows.size());
    for (const auto& row : rows) {
        const auto f = feature_columns(row);
        for (std::size_t c = 0; c < kFeatures; ++c) model.feature_mean[c] += f[c];
    }
    for (double& m : model.feature_mean) m /= n;
    std::vector<double> var(kFeatures, 0.0);
    for (const auto& row : rows) {
        const auto f = feature_columns(row);
        for (std::size_t c = 0; c < kFeatures; ++c) {
            const double d = f[c] - model.feature_mean[c];
            var[c] += d * d;
        }
    }
    for (std::size_t c = 0; c < kFeatures; ++c) {
        const double sd = std::sqrt(var[c] / n);
        if (sd > 0) model.feature_scale[c] = sd;
    }

    std::vector<std::array<double, kFeatures>> standardized;
    standardized.reserve(rows.size());
    for (const auto& row : rows) {
        auto f = feature_columns(row);
        for (std::size_t c = 0; c < kFeatures; ++c) {
            f[c] = (f[c] - model.feature_mean[c]) / model.feature_scale[c];
        }
        standardized.push_back(f);
    }

    model.weights.assign(kFeatures, 0.0);
    model.bias = 0;
    for (int iter = 0; iter < iterations; ++iter) {
        std::vector<double> gradient(kFeatures, 0.0);
        double bias_gradient = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            double z = model.bias;
            for (std::size_t c = 0; c < kFeatures; ++c) z += model.weights[c] * standardized[r][c];
            const double prediction = 1.0 / (1.0 + std::exp(-z));
            const double error = prediction - (rows[r].label == 1 ? 1.0 : 0.0);
            for (std::size_t c = 0; c < kFeatures; ++c) gradient[c] += error * standardized[r][c];
            bias_gradient += error;
        }
        for (std::size_t c = 0; c < kFeatures; ++c) {
            model.weights[c] -= learning_rate * gradient[c] / n;
        }
        model.bias -= learning_rate * bias_gradient / n;
    }
    return model;
}

std::vector<double> score(const LogisticModel& model, std::span<const PairFeatureRow> rows) {
    std::vector<double> scores;
    scores.reserve(rows.size());
    for (const auto& row : rows) {
        const auto f = feature_columns(row);
        double z = model.bias;
        for (std::size_t c = 0; c < f.size(); ++c) {
            z += model.weights[c] * (f[c] - model.feature_mean[c]) / model.feature_scale[c];
        }
        scores.push_back(1.0 / (1.0 + std::exp(-z)));
    }
    return scores;
}

}  // namespace quadra
