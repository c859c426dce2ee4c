#pragma once

#include <cstdint>
#include <vector>

#include "quadra/graph.hpp"

namespace quadra {

// Prescribed degree sequence for configuration-model analytics. The stub
// count must be even. The closed forms below assume max d^2 <= sum d (edge
// probabilities d_i d_j / 2m <= 1); Monte-Carlo validation refuses sequences
// violating it rather than clamping, while the sampler merely reports higher
// discard rates and the plug-in expectations stay plain arithmetic.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<std::uint32_t> degrees);
    static DegreeSequence regular(std::size_t n, std::uint32_t degree);

    const std::vector<std::uint32_t>& degrees() const { return degrees_; }
    std::size_t size() const { return degrees_.size(); }
    std::uint64_t stub_count() const { return stub_count_; }     // sum d_i = 2m
    std::uint64_t edge_count() const { return stub_count_ / 2; }  // m
    double size_biased_mean() const;                              // k-bar
    bool satisfies_density_assumption() const;                    // max d^2 <= 2m

private:
    std::vector<std::uint32_t> degrees_;
    std::uint64_t stub_count_ = 0;
    std::uint64_t max_degree_ = 0;
};

// Stub-matching expectations: E[I(i)] = (k-bar - 1)^2 / 2m for every node,
// E[O(i)] = (d_i - 1)(k-bar - 1) / 2m. Throw std::domain_error when m = 0.
double expected_i_quad(const DegreeSequence& seq);
double expected_o_quad(const DegreeSequence& seq, std::size_t node_index);
double expected_o_quad_for_degree(const DegreeSequence& seq, std::uint32_t degree);

struct ConfigModelSample {
    Graph graph;
    std::size_t discarded_self_loops = 0;
    std::size_t discarded_duplicates = 0;
};

// Uniform stub matching; self-loops and duplicate pairs arising in the
// matching are discarded afterwards (simple-graph projection).
ConfigModelSample sample_configuration_model(const DegreeSequence& seq, std::uint64_t seed);

// Erdos-Renyi G(n, p). The expected average i-quad coefficient of G(n, p)
// is p itself.
Graph sample_er(std::size_t n, double p, std::uint64_t seed);
inline double er_expected_avg_i_quad(double p) { return p; }

struct DegreeClassRow {
    std::uint32_t degree = 0;
    std::size_t node_count = 0;       // nodes of this prescribed degree
    double emp_i_mean = 0;
    double emp_i_se = 0;
    double theory_i = 0;
    double emp_o_mean = 0;
    double emp_o_se = 0;
    double theory_o = 0;
};

struct PropositionReport {
    std::vector<DegreeClassRow> classes;  // ascending degree
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

// Monte-Carlo comparison of empirical per-degree-class coefficient means
// (one observation per sample = the class mean within that sample; SE is the
// standard error over samples) against the closed forms above. Undefined
// per-node coefficients count as zero, matching the averaging convention.
// samples < 10 is refused.
PropositionReport validate_proposition(const DegreeSequence& seq, std::size_t samples,
                                       std::uint64_t seed);

}  // namespace quadra
