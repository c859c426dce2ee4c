#include "quadra/null_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "quadra/quad.hpp"
#include "quadra/rng.hpp"

namespace quadra {

DegreeSequence::DegreeSequence(std::vector<std::uint32_t> degrees) : degrees_(std::move(degrees)) {
    for (std::uint32_t d : degrees_) {
        stub_count_ += d;
        max_degree_ = std::max<std::uint64_t>(max_degree_, d);
    }
    if (stub_count_ % 2 != 0) {
        throw std::invalid_argument("degree sequence has an odd stub count");
    }
}

bool DegreeSequence::satisfies_density_assumption() const {
    return max_degree_ * max_degree_ <= stub_count_;
}

DegreeSequence DegreeSequence::regular(std::size_t n, std::uint32_t degree) {
    return DegreeSequence(std::vector<std::uint32_t>(n, degree));
}

double DegreeSequence::size_biased_mean() const {
    if (stub_count_ == 0) throw std::domain_error("size-biased mean of an edgeless sequence");
    long double sum_sq = 0;
    for (std::uint32_t d : degrees_) sum_sq += static_cast<long double>(d) * d;
    return static_cast<double>(sum_sq / static_cast<long double>(stub_count_));
}

double expected_i_quad(const DegreeSequence& seq) {
    if (seq.edge_count() == 0) throw std::domain_error("expectation needs at least one edge");
    const double excess = seq.size_biased_mean() - 1.0;
    return excess * excess / static_cast<double>(seq.stub_count());
}

double expected_o_quad(const DegreeSequence& seq, std::size_t node_index) {
    if (node_index >= seq.size()) throw std::out_of_range("node index out of range");
    return expected_o_quad_for_degree(seq, seq.degrees()[node_index]);
}

double expected_o_quad_for_degree(const DegreeSequence& seq, std::uint32_t degree) {
    if (seq.edge_count() == 0) throw std::domain_error("expectation needs at least one edge");
    const double excess = seq.size_biased_mean() - 1.0;
    return (static_cast<double>(degree) - 1.0) * excess / static_cast<double>(seq.stub_count());
}

ConfigModelSample sample_configuration_model(const DegreeSequence& seq, std::uint64_t seed) {
    const std::size_t n = seq.size();
    std::vector<NodeId> stubs;
    stubs.reserve(seq.stub_count());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t s = 0; s < seq.degrees()[i]; ++s) {
            stubs.push_back(static_cast<NodeId>(i));
        }
    }
    Rng rng(seed);
    rng.shuffle(stubs);

    ConfigModelSample sample;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
        NodeId u = stubs[t];
        NodeId v = stubs[t + 1];
        if (u == v) {
            ++sample.discarded_self_loops;
            continue;
        }
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    std::size_t before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    sample.discarded_duplicates = before - edges.size();
    sample.graph = Graph::from_edges(n, std::move(edges));
    return sample;
}

Graph sample_er(std::size_t n, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("G(n, p) needs n >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("G(n, p) needs p in [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

PropositionReport validate_proposition(const DegreeSequence& seq, std::size_t samples,
                                       std::uint64_t seed) {
    if (samples < 10) {
        throw std::invalid_argument("proposition validation needs at least 10 samples");
    }
    if (!seq.satisfies_density_assumption()) {
        throw std::invalid_argument(
            "degree sequence violates max d^2 <= 2m; the stub-matching edge probabilities "
            "behind the closed forms would exceed one, so validation is refused rather than "
            "clamped");
    }

    // degree -> per-sample class means
    std::map<std::uint32_t, std::vector<double>> i_means;
    std::map<std::uint32_t, std::vector<double>> o_means;
    std::map<std::uint32_t, std::size_t> class_sizes;
    for (std::uint32_t d : seq.degrees()) ++class_sizes[d];

    for (std::size_t s = 0; s < samples; ++s) {
        Rng stream = Rng::substream(seed, s);
        const auto sample = sample_configuration_model(seq, stream.next_u64());
        const auto report = full_report(sample.graph);
        std::map<std::uint32_t, double> i_sum, o_sum;
        for (std::size_t idx = 0; idx < seq.size(); ++idx) {
            const std::uint32_t d = seq.degrees()[idx];
            i_sum[d] += report.rows[idx].i_quad.value_or(0.0);
            o_sum[d] += report.rows[idx].o_quad.value_or(0.0);
        }
        for (const auto& [d, count] : class_sizes) {
            i_means[d].push_back(i_sum[d] / static_cast<double>(count));
            o_means[d].push_back(o_sum[d] / static_cast<double>(count));
        }
    }

    auto mean_and_se = [](const std::vector<double>& values) {
        const double n = static_cast<double>(values.size());
        double mean = 0;
        for (double v : values) mean += v;
        mean /= n;
        double var = 0;
        for (double v : values) var += (v - mean) * (v - mean);
        var /= (n - 1.0);
        return std::pair<double, double>(mean, std::sqrt(var / n));
    };

    PropositionReport report;
    report.samples = samples;
    report.seed = seed;
    for (const auto& [d, count] : class_sizes) {
        DegreeClassRow row;
        row.degree = d;
        row.node_count = count;
        std::tie(row.emp_i_mean, row.emp_i_se) = mean_and_se(i_means[d]);
        std::tie(row.emp_o_mean, row.emp_o_se) = mean_and_se(o_means[d]);
        row.theory_i = expected_i_quad(seq);
        row.theory_o = expected_o_quad_for_degree(seq, d);
        report.classes.push_back(row);
    }
    return report;
}

}  // namespace quadra
