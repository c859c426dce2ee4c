#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "quadra/cluster.hpp"
#include "quadra/linkpred.hpp"
#include "quadra/null_model.hpp"
#include "quadra/quad.hpp"
#include "quadra/rng.hpp"

using namespace quadra;

namespace {

// Published summary statistics of sixteen public networks (KONECT / SNAP /
// Network Repository): two food webs, four social networks, four
// protein-interaction networks, two citation networks, two road networks and
// two Q&A networks. Columns: mean degree, avg clustering, avg closure,
// avg i-quad, avg o-quad.
struct NetworkRow {
    const char* name;
    const char* category;
    std::array<double, 5> features;
};

const NetworkRow kSixteenNetworks[] = {
    {"fw-floridadry", "foodweb", {32.91, 0.335, 0.261, 0.428, 0.353}},
    {"fw-littlerock", "foodweb", {26.80, 0.323, 0.208, 0.550, 0.339}},
    {"soc-emaileu", "social", {32.58, 0.407, 0.153, 0.231, 0.102}},
    {"soc-clgmsg", "social", {14.57, 0.109, 0.022, 0.081, 0.029}},
    {"soc-btcalpha", "social", {7.47, 0.177, 0.020, 0.058, 0.013}},
    {"soc-twitchfr", "social", {34.41, 0.222, 0.029, 0.109, 0.034}},
    {"ppi-stelzl", "ppi", {3.74, 0.006, 0.002, 0.038, 0.021}},
    {"ppi-figeys", "ppi", {5.75, 0.040, 0.005, 0.082, 0.043}},
    {"ppi-vidal", "ppi", {4.29, 0.064, 0.025, 0.040, 0.018}},
    {"ppi-intact", "ppi", {6.46, 0.083, 0.016, 0.063, 0.021}},
    {"cit-dblp", "citation", {7.89, 0.117, 0.026, 0.060, 0.014}},
    {"cit-cora", "citation", {7.70, 0.266, 0.100, 0.107, 0.047}},
    {"rd-newyork", "road", {2.76, 0.021, 0.021, 0.068, 0.069}},
    {"rd-bayarea", "road", {2.47, 0.017, 0.016, 0.038, 0.038}},
    {"qa-mathovfl", "qa", {8.20, 0.094, 0.005, 0.031, 0.004}},
    {"qa-askubuntu", "qa", {3.81, 0.015, 0.0005, 0.004, 0.0005}},
};

ClusteringResult cluster_networks(bool with_quad_features, std::uint64_t seed) {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    for (const auto& network : kSixteenNetworks) {
        std::vector<double> row(network.features.begin(),
                                network.features.begin() + (with_quad_features ? 5 : 3));
        rows.push_back(std::move(row));
        labels.emplace_back(network.category);
    }
    standardize_columns(rows);
    return kmeans(rows, labels, 6, 1000, 300, seed);
}

}  // namespace

TEST_CASE("six-category clustering: quad features do not lower the v-measure") {
    // Soft directional check on the bundled statistics; exact scores depend
    // on preprocessing choices, so only the direction is asserted.
    const auto with_quads = cluster_networks(true, 2024);
    const auto without_quads = cluster_networks(false, 2024);
    CHECK(with_quads.v_measure >= without_quads.v_measure - 1e-9);
    CHECK(with_quads.v_measure > 0.5);
    MESSAGE("v-measure with quad features: ", with_quads.v_measure,
            ", without: ", without_quads.v_measure);
}

TEST_CASE("pca projects the sixteen networks to distinct 2-D coordinates") {
    std::vector<std::vector<double>> rows;
    for (const auto& network : kSixteenNetworks) {
        rows.emplace_back(network.features.begin(), network.features.end());
    }
    standardize_columns(rows);
    const auto coords = pca_2d(rows);
    REQUIRE(coords.size() == 16);
    for (std::size_t a = 0; a < coords.size(); ++a) {
        for (std::size_t b = a + 1; b < coords.size(); ++b) {
            const bool same = coords[a].first == coords[b].first &&
                              coords[a].second == coords[b].second;
            CHECK_FALSE(same);
        }
    }
}

namespace {

std::vector<PairFeatureRow> zero_columns(std::vector<PairFeatureRow> rows, bool drop_i,
                                         bool drop_o) {
    for (auto& row : rows) {
        if (drop_i) row.i_u = row.i_v = 0;
        if (drop_o) row.o_u = row.o_v = 0;
    }
    return rows;
}

}  // namespace

TEST_CASE("link-prediction ablation: all four feature sets run end to end") {
    // Baseline / +i-quad / +o-quad / +both, the four column sets the
    // exported feature matrix supports; zeroed standardized columns are
    // inert in the logistic model, which exercises each subset.
    const auto sample = sample_configuration_model(DegreeSequence::regular(100, 4), 77);
    std::vector<TemporalRecord> records;
    std::int64_t t = 0;
    for (const auto& [u, v] : sample.graph.edges()) records.push_back({u, v, t++});
    const TemporalEdgeList list(std::move(records), sample.graph.labels());

    SplitSpec spec;
    spec.mode = SplitMode::shuffled;
    spec.seed = 31;
    const auto split = split_graph(list, spec);
    const auto report = full_report(split.old_graph);
    const auto candidates =
        generate_candidates(split.old_graph, split.new_graph, {.all = false, .ratio = 10}, 32);
    const auto all_rows = pair_features(split.old_graph, candidates, report);

    const std::vector<std::pair<bool, bool>> drops{
        {true, true},    // baseline only
        {false, true},   // baseline + i-quad
        {true, false},   // baseline + o-quad
        {false, false},  // everything
    };
    for (const auto& [drop_i, drop_o] : drops) {
        const auto rows = zero_columns(all_rows, drop_i, drop_o);
        Rng rng(40);
        std::vector<std::size_t> order(rows.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        rng.shuffle(order);
        std::vector<PairFeatureRow> train, test;
        for (std::size_t i = 0; i < order.size(); ++i) {
            (i < order.size() * 7 / 10 ? train : test).push_back(rows[order[i]]);
        }
        const auto model = train_smoke_classifier(train);
        const auto predictions = score(model, test);
        std::vector<int> labels;
        for (const auto& row : test) labels.push_back(row.label);
        const double auc = roc_auc(predictions, labels);
        CHECK(std::isfinite(auc));
        CHECK(auc >= 0.0);
        CHECK(auc <= 1.0);
    }
}
