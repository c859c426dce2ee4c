// quadra: triangle- and quadrangle-formation analytics over edge lists.
//
// One subcommand per experiment: summary (per-network statistics table),
// coeffs (per-node coefficients), cdf / bins (distribution views),
// nullmodel (configuration-model and G(n,p) validation), classify (k-means
// over network features), linkpred (split / candidates / features export
// with an optional built-in smoke classifier) and verify (brute-force
// oracle cross-check). All stochastic commands take an explicit --seed and
// echo it in their output, so reruns are byte-identical.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadra/analysis.hpp"
#include "quadra/cluster.hpp"
#include "quadra/csv.hpp"
#include "quadra/edge_list.hpp"
#include "quadra/linkpred.hpp"
#include "quadra/null_model.hpp"
#include "quadra/oracle.hpp"
#include "quadra/quad.hpp"
#include "quadra/rng.hpp"
#include "quadra/sampling.hpp"
#include "quadra/triangle.hpp"

using namespace quadra;

namespace {

// Stream to --out or stdout; binary mode keeps '\n' endings everywhere.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string i64(std::int64_t value) { return std::to_string(value); }

std::vector<std::string> summary_fields(const SummaryRow& row) {
    return {row.name,
            std::to_string(row.nodes),
            std::to_string(row.edges),
            format_double(row.mean_degree),
            format_double(row.avg_clustering),
            format_double(row.avg_closure),
            format_double(row.avg_i_quad),
            format_double(row.avg_o_quad),
            format_optional(row.c_over_e),
            format_optional(row.i_over_o),
            format_optional(row.i_over_c),
            format_optional(row.o_over_e)};
}

const char* kSummaryHeader =
    "network,nodes,edges,mean_degree,avg_clustering,avg_closure,avg_i_quad,avg_o_quad,"
    "c_over_e,i_over_o,i_over_c,o_over_e";

int cmd_summary(const std::vector<std::string>& paths, bool weighted, const std::string& out_path,
                unsigned threads) {
    Output out(out_path);
    out.stream() << kSummaryHeader << "\n";
    bool any_error = false;
    for (const auto& path : paths) {
        std::string name = path;
        const auto slash = name.find_last_of('/');
        if (slash != std::string::npos) name = name.substr(slash + 1);
        try {
            const Graph g = load_graph(path, {.weighted = weighted});
            const auto report = full_report(g, threads);
            const auto row = summary(g, name, &report);
            out.stream() << csv_row(summary_fields(row));
            std::cerr << "summary: " << path << " done (" << g.node_count() << " nodes)\n";
        } catch (const std::exception& e) {
            any_error = true;
            std::cerr << "summary: " << path << " failed: " << e.what() << "\n";
            out.stream() << csv_row({name, "", "", "", "", "", "", "", "", "", "", ""});
        }
    }
    return any_error ? 1 : 0;
}

int cmd_coeffs(const std::string& path, bool weighted, const std::string& out_path,
               unsigned threads) {
    const Graph g = load_graph(path, {.weighted = weighted});
    const auto report = full_report(g, threads);
    Output out(out_path);
    std::string header = "node_label,degree,T,Q,OTC,OTE,OQI,OQO,C,E,I,O";
    if (report.weighted) header += ",Iw,Ow";
    out.stream() << header << "\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        std::vector<std::string> fields{g.label(static_cast<NodeId>(i)),
                                        i64(row.degree),
                                        i64(row.triangles),
                                        i64(row.quadrangles),
                                        i64(row.otc),
                                        i64(row.ote),
                                        i64(row.oqi),
                                        i64(row.oqo),
                                        format_optional(row.clustering),
                                        format_optional(row.closure),
                                        format_optional(row.i_quad),
                                        format_optional(row.o_quad)};
        if (report.weighted) {
            fields.push_back(format_optional(row.weighted_i_quad));
            fields.push_back(format_optional(row.weighted_o_quad));
        }
        out.stream() << csv_row(fields);
    }
    return 0;
}

int cmd_cdf(const std::string& path, const std::string& coefficient, bool weighted,
            const std::string& out_path, unsigned threads) {
    if (coefficient.size() != 1 || std::string("CEIO").find(coefficient) == std::string::npos) {
        throw std::invalid_argument("--coef must be one of C, E, I, O");
    }
    const Graph g = load_graph(path, {.weighted = weighted});
    const auto report = full_report(g, threads);
    const auto values = coefficient_values(report, coefficient[0]);
    const auto steps = cdf(values);
    Output out(out_path);
    out.stream() << "value,cumulative_fraction\n";
    for (const auto& [x, f] : steps) {
        out.stream() << csv_row({format_double(x), format_double(f)});
    }
    return 0;
}

int cmd_bins(const std::string& path, bool weighted, const std::string& out_path,
             unsigned threads) {
    const Graph g = load_graph(path, {.weighted = weighted});
    const auto report = full_report(g, threads);
    const auto bins = degree_binned_means(g, &report);
    Output out(out_path);
    out.stream() << "bin_low,bin_high,count,mean_I,mean_O\n";
    for (const auto& bin : bins) {
        out.stream() << csv_row({std::to_string(bin.bin_low), std::to_string(bin.bin_high),
                                 std::to_string(bin.node_count), format_double(bin.mean_i),
                                 format_double(bin.mean_o)});
    }
    return 0;
}

int cmd_nullmodel(std::vector<std::uint64_t> regular, std::vector<double> er,
                  const std::string& degrees_path, std::size_t samples, std::uint64_t seed,
                  const std::string& out_path) {
    Output out(out_path);
    if (!er.empty()) {
        const std::size_t n = static_cast<std::size_t>(er[0]);
        const double p = er[1];
        std::vector<double> means;
        means.reserve(samples);
        for (std::size_t s = 0; s < samples; ++s) {
            Rng stream = Rng::substream(seed, s);
            const Graph g = sample_er(n, p, stream.next_u64());
            means.push_back(full_report(g).avg_i_quad);
        }
        double mean = 0;
        for (double m : means) mean += m;
        mean /= static_cast<double>(means.size());
        double var = 0;
        for (double m : means) var += (m - mean) * (m - mean);
        var /= static_cast<double>(means.size() - 1);
        const double se = std::sqrt(var / static_cast<double>(means.size()));
        out.stream() << "n,p,samples,emp_avg_i_mean,emp_avg_i_se,theory,seed\n";
        out.stream() << csv_row({std::to_string(n), format_double(p), std::to_string(samples),
                                 format_double(mean), format_double(se),
                                 format_double(er_expected_avg_i_quad(p)), std::to_string(seed)});
        return 0;
    }

    std::vector<std::uint32_t> degree_values;
    if (!regular.empty()) {
        degree_values.assign(static_cast<std::size_t>(regular[0]),
                             static_cast<std::uint32_t>(regular[1]));
    } else if (!degrees_path.empty()) {
        std::ifstream in(degrees_path);
        if (!in) throw std::runtime_error("cannot open '" + degrees_path + "'");
        std::uint32_t d;
        while (in >> d) degree_values.push_back(d);
    } else {
        throw std::invalid_argument("nullmodel needs --regular, --er or --degrees");
    }
    const DegreeSequence seq(std::move(degree_values));
    const auto report = validate_proposition(seq, samples, seed);
    out.stream() << "degree_class,count,emp_I_mean,emp_I_se,theory_I,emp_O_mean,emp_O_se,"
                    "theory_O,seed\n";
    for (const auto& row : report.classes) {
        out.stream() << csv_row({std::to_string(row.degree), std::to_string(row.node_count),
                                 format_double(row.emp_i_mean), format_double(row.emp_i_se),
                                 format_double(row.theory_i), format_double(row.emp_o_mean),
                                 format_double(row.emp_o_se), format_double(row.theory_o),
                                 std::to_string(report.seed)});
    }
    return 0;
}

int cmd_classify(const std::string& features_path, int k, int restarts, int max_iterations,
                 std::uint64_t seed, bool no_standardize, bool drop_quad,
                 const std::string& out_path) {
    const auto lines = read_csv(features_path);
    if (lines.size() < 2) throw std::runtime_error("feature file has no data rows");
    const auto& header = lines[0];
    if (header.size() < 7 || header[0] != "network" || header[1] != "category") {
        throw std::runtime_error(
            "feature file must start with: network,category,mean_degree,avg_clustering,"
            "avg_closure,avg_i_quad,avg_o_quad");
    }

    std::vector<std::string> names, categories;
    std::vector<std::vector<double>> rows;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto& fields = lines[l];
        if (fields.size() != header.size()) {
            throw std::runtime_error("feature file row " + std::to_string(l + 1) +
                                     " has the wrong field count");
        }
        names.push_back(fields[0]);
        categories.push_back(fields[1]);
        std::vector<double> row;
        const std::size_t feature_count = drop_quad ? 3 : 5;
        for (std::size_t c = 0; c < feature_count; ++c) row.push_back(std::stod(fields[2 + c]));
        rows.push_back(std::move(row));
    }

    auto features = rows;
    if (!no_standardize) standardize_columns(features);
    const auto result = kmeans(features, categories, k, restarts, max_iterations, seed);
    const auto coords = pca_2d(features);

    Output out(out_path);
    out.stream() << "network,category,cluster,pca_x,pca_y,seed\n";
    for (std::size_t r = 0; r < names.size(); ++r) {
        out.stream() << csv_row({names[r], categories[r], std::to_string(result.assignments[r]),
                                 format_double(coords[r].first), format_double(coords[r].second),
                                 std::to_string(seed)});
    }
    std::ostream& metrics = out_path.empty() ? std::cerr : std::cout;
    metrics << "homogeneity,completeness,v_measure,best_restart,iterations,seed\n";
    metrics << csv_row({format_double(result.homogeneity), format_double(result.completeness),
                        format_double(result.v_measure), std::to_string(result.best_restart),
                        std::to_string(result.iterations), std::to_string(seed)});
    return 0;
}

int cmd_linkpred(const std::string& path, bool temporal, bool shuffled, bool weighted,
                 double fraction, std::uint64_t seed, std::size_t repeats,
                 const std::string& negatives, std::size_t sample_nodes, bool smoke,
                 const std::string& out_path, unsigned threads) {
    TemporalEdgeList list = load_temporal(path, {.weighted = weighted, .temporal = temporal});

    if (sample_nodes > 0) {
        // Randomised BFS sampling on the static projection, then filter the
        // records to the sampled node set.
        const Graph projection = list.slice_graph(0, list.size());
        const auto nodes = bfs_sample_nodes(projection, sample_nodes, seed ^ 0x9e3779b97f4a7c15ULL);
        std::vector<std::uint8_t> keep(list.node_count(), 0);
        std::vector<NodeId> compact(list.node_count(), 0);
        std::vector<std::string> labels;
        for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
            keep[nodes[idx]] = 1;
            compact[nodes[idx]] = static_cast<NodeId>(idx);
            labels.push_back(list.labels()[nodes[idx]]);
        }
        std::vector<TemporalRecord> kept;
        for (const auto& rec : list.records()) {
            if (keep[rec.u] && keep[rec.v]) kept.push_back({compact[rec.u], compact[rec.v], rec.time});
        }
        list = TemporalEdgeList(std::move(kept), std::move(labels));
        std::cerr << "linkpred: sampled " << nodes.size() << " nodes, " << list.size()
                  << " records kept\n";
    }

    NegativeStrategy strategy;
    if (negatives == "all") {
        strategy.all = true;
    } else {
        strategy.all = false;
        strategy.ratio = std::stod(negatives);
    }

    Output out(out_path);
    out.stream() << "u,v,cn,aa,ra,c_u,c_v,e_u,e_v,i_u,i_v,o_u,o_v,label,seed,repeat_index\n";
    std::ostream& metrics = out_path.empty() ? std::cerr : std::cout;
    if (smoke) metrics << "repeat_index,train_rows,test_rows,roc_auc,seed\n";

    for (std::size_t repeat = 0; repeat < repeats; ++repeat) {
        SplitSpec spec;
        spec.mode = shuffled ? SplitMode::shuffled : SplitMode::temporal;
        spec.fraction = fraction;
        spec.seed = seed;
        spec.repeat_index = static_cast<std::uint32_t>(repeat);
        const auto split = split_graph(list, spec);
        const auto report = full_report(split.old_graph, threads);
        Rng candidate_rng = Rng::substream(seed + 1, repeat);
        const auto candidates = generate_candidates(split.old_graph, split.new_graph, strategy,
                                                    candidate_rng.next_u64());
        const auto rows = pair_features(split.old_graph, candidates, report);
        for (const auto& row : rows) {
            out.stream() << csv_row(
                {split.old_graph.label(row.u), split.old_graph.label(row.v), format_double(row.cn),
                 format_double(row.aa), format_double(row.ra), format_double(row.c_u),
                 format_double(row.c_v), format_double(row.e_u), format_double(row.e_v),
                 format_double(row.i_u), format_double(row.i_v), format_double(row.o_u),
                 format_double(row.o_v), std::to_string(row.label), std::to_string(seed),
                 std::to_string(repeat)});
        }

        if (smoke) {
            // Seeded 70/30 row split for the stand-in classifier.
            std::vector<std::size_t> order(rows.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            Rng shuffle_rng = Rng::substream(seed + 2, repeat);
            shuffle_rng.shuffle(order);
            const std::size_t train_count = static_cast<std::size_t>(0.7 * order.size());
            std::vector<PairFeatureRow> train, test;
            for (std::size_t i = 0; i < order.size(); ++i) {
                (i < train_count ? train : test).push_back(rows[order[i]]);
            }
            const auto model = train_smoke_classifier(train);
            const auto scores_test = score(model, test);
            std::vector<int> labels;
            for (const auto& row : test) labels.push_back(row.label);
            const double auc = roc_auc(scores_test, labels);
            metrics << csv_row({std::to_string(repeat), std::to_string(train.size()),
                                std::to_string(test.size()), format_double(auc),
                                std::to_string(seed)});
        }
        std::cerr << "linkpred: repeat " << repeat << ": " << rows.size() << " pairs\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, bool weighted, std::size_t cap) {
    const Graph g = load_graph(path, {.weighted = weighted});
    if (g.node_count() > cap) {
        std::cerr << "verify: refusing " << g.node_count() << " nodes (cap " << cap
                  << "); the oracle is O(|V|^4)\n";
        return 1;
    }
    const auto report = full_report(g);
    const auto tri = count_triangles_bruteforce(g, cap);
    const auto quad = count_quadrangles_bruteforce(g, cap);
    const auto paths = count_open_paths_bruteforce(g, cap);

    std::size_t mismatches = 0;
    auto expect = [&](bool ok, const std::string& what, NodeId node) {
        if (!ok) {
            ++mismatches;
            std::cerr << "verify: MISMATCH " << what << " at node " << g.label(node) << "\n";
        }
    };
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto& row = report.rows[i];
        expect(row.triangles == tri.per_node[i], "T", i);
        expect(row.quadrangles == quad.per_node[i], "Q", i);
        expect(row.otc == paths.otc[i], "OTC", i);
        expect(row.ote == paths.ote[i], "OTE", i);
        expect(row.oqi == paths.oqi[i], "OQI", i);
        expect(row.oqo == paths.oqo[i], "OQO", i);
        if (paths.oqi[i] > 0) {
            const double want = static_cast<double>(2 * quad.per_node[i]) /
                                static_cast<double>(paths.oqi[i]);
            expect(std::abs(row.i_quad.value_or(-1) - want) <= 1e-12, "I", i);
        }
        if (paths.oqo[i] > 0) {
            const double want = static_cast<double>(2 * quad.per_node[i]) /
                                static_cast<double>(paths.oqo[i]);
            expect(std::abs(row.o_quad.value_or(-1) - want) <= 1e-12, "O", i);
        }
    }

    std::int64_t numerator_total = 0;
    for (const auto& row : report.rows) numerator_total += 2 * row.quadrangles;
    if (numerator_total != 8 * quad.total) {
        ++mismatches;
        std::cerr << "verify: MISMATCH global numerator vs 8 * quadrangle total\n";
    }
    if (report.global_clustering && report.global_closure &&
        std::abs(*report.global_clustering - *report.global_closure) > 1e-12) {
        ++mismatches;
        std::cerr << "verify: MISMATCH global clustering vs global closure\n";
    }
    if (report.global_i_quad && report.global_o_quad &&
        std::abs(*report.global_i_quad - *report.global_o_quad) > 1e-12) {
        ++mismatches;
        std::cerr << "verify: MISMATCH global i-quad vs global o-quad\n";
    }

    if (mismatches == 0) {
        std::cout << "verified " << g.node_count() << " nodes, " << g.edge_count()
                  << " edges: fast path matches the brute-force oracle\n";
        return 0;
    }
    std::cout << "verification FAILED with " << mismatches << " mismatches\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle and quadrangle formation coefficients for graphs"};
    app.require_subcommand(1);

    std::vector<std::string> paths;
    std::string path, out_path, coefficient = "I", negatives = "all", features_path, degrees_path;
    bool weighted = false, temporal = false, shuffled = false, smoke = false;
    bool no_standardize = false, drop_quad = false;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 100, repeats = 1, sample_nodes = 0, cap = 200;
    double fraction = 0.7;
    int k = 6, restarts = 1000, max_iterations = 300;
    std::vector<std::uint64_t> regular;
    std::vector<double> er;

    auto* s_summary = app.add_subcommand("summary", "per-network statistics table");
    s_summary->add_option("paths", paths, "edge-list files")->required()->expected(-1);
    s_summary->add_flag("--weighted", weighted, "parse weights (u v w)");
    s_summary->add_option("--out", out_path, "output CSV path (default stdout)");
    s_summary->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* s_coeffs = app.add_subcommand("coeffs", "per-node coefficient report");
    s_coeffs->add_option("path", path, "edge-list file")->required();
    s_coeffs->add_flag("--weighted", weighted, "parse weights and add Iw/Ow columns");
    s_coeffs->add_option("--out", out_path, "output CSV path");
    s_coeffs->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* s_cdf = app.add_subcommand("cdf", "empirical CDF of a coefficient");
    s_cdf->add_option("path", path, "edge-list file")->required();
    s_cdf->add_option("--coef", coefficient, "coefficient: C, E, I or O (default I)");
    s_cdf->add_flag("--weighted", weighted, "parse weights");
    s_cdf->add_option("--out", out_path, "output CSV path");
    s_cdf->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* s_bins = app.add_subcommand("bins", "degree-binned coefficient means");
    s_bins->add_option("path", path, "edge-list file")->required();
    s_bins->add_flag("--weighted", weighted, "parse weights");
    s_bins->add_option("--out", out_path, "output CSV path");
    s_bins->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* s_null = app.add_subcommand("nullmodel", "configuration-model / G(n,p) validation");
    s_null->add_option("--regular", regular, "regular sequence: N D")->expected(2);
    s_null->add_option("--er", er, "Erdos-Renyi check: N P")->expected(2);
    s_null->add_option("--degrees", degrees_path, "file with one degree per token");
    s_null->add_option("--samples", samples, "Monte-Carlo samples (default 100)");
    s_null->add_option("--seed", seed, "RNG seed")->required();
    s_null->add_option("--out", out_path, "output CSV path");

    auto* s_classify = app.add_subcommand("classify", "k-means over network feature vectors");
    s_classify->add_option("--features", features_path, "CSV: network,category,5 features")
        ->required();
    s_classify->add_option("--k", k, "clusters (default 6)");
    s_classify->add_option("--restarts", restarts, "k-means restarts (default 1000)");
    s_classify->add_option("--max-iter", max_iterations, "Lloyd iterations per run (default 300)");
    s_classify->add_option("--seed", seed, "RNG seed")->required();
    s_classify->add_flag("--no-standardize", no_standardize, "skip feature standardization");
    s_classify->add_flag("--drop-quad", drop_quad, "use only the 3 non-quad features");
    s_classify->add_option("--out", out_path, "assignments CSV path");

    auto* s_link = app.add_subcommand("linkpred", "link-prediction feature extraction");
    s_link->add_option("path", path, "edge-list file")->required();
    s_link->add_flag("--temporal", temporal, "file carries timestamps; split by time");
    s_link->add_flag("--shuffled", shuffled, "split a seeded shuffle instead of time order");
    s_link->add_flag("--weighted", weighted, "file carries weights");
    s_link->add_option("--fraction", fraction, "old-graph fraction (default 0.7)");
    s_link->add_option("--seed", seed, "RNG seed")->required();
    s_link->add_option("--repeats", repeats, "number of split repetitions (default 1)");
    s_link->add_option("--negatives", negatives, "negative strategy: all or a ratio (default all)");
    s_link->add_option("--sample", sample_nodes, "BFS-sample this many nodes first (0 = off)");
    s_link->add_flag("--smoke", smoke, "train the built-in logistic classifier and print AUC");
    s_link->add_option("--out", out_path, "feature CSV path");
    s_link->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* s_verify = app.add_subcommand("verify", "cross-check fast path against the oracle");
    s_verify->add_option("path", path, "edge-list file")->required();
    s_verify->add_flag("--weighted", weighted, "parse weights");
    s_verify->add_option("--cap", cap, "maximum node count (default 200)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (s_summary->parsed()) return cmd_summary(paths, weighted, out_path, threads);
        if (s_coeffs->parsed()) return cmd_coeffs(path, weighted, out_path, threads);
        if (s_cdf->parsed()) return cmd_cdf(path, coefficient, weighted, out_path, threads);
        if (s_bins->parsed()) return cmd_bins(path, weighted, out_path, threads);
        if (s_null->parsed()) {
            return cmd_nullmodel(regular, er, degrees_path, samples, seed, out_path);
        }
        if (s_classify->parsed()) {
            return cmd_classify(features_path, k, restarts, max_iterations, seed, no_standardize,
                                drop_quad, out_path);
        }
        if (s_link->parsed()) {
            if (!temporal && !shuffled) shuffled = true;  // plain files split by shuffle
            return cmd_linkpred(path, temporal, shuffled, weighted, fraction, seed, repeats,
                                negatives, sample_nodes, smoke, out_path, threads);
        }
        if (s_verify->parsed()) return cmd_verify(path, weighted, cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
