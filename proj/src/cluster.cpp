#include "quadra/cluster.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "quadra/rng.hpp"

namespace quadra {

Standardization standardize_columns(std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("cannot standardize an empty matrix");
    const std::size_t cols = rows[0].size();
    Standardization params;
    params.mean.assign(cols, 0.0);
    params.stddev.assign(cols, 1.0);
    const double n = static_cast<double>(rows.size());
    for (std::size_t c = 0; c < cols; ++c) {
        double sum = 0;
        for (const auto& row : rows) sum += row[c];
        params.mean[c] = sum / n;
        double var = 0;
        for (const auto& row : rows) {
            const double d = row[c] - params.mean[c];
            var += d * d;
        }
        const double sd = std::sqrt(var / n);
        if (sd > 0) params.stddev[c] = sd;
    }
    for (auto& row : rows) {
        for (std::size_t c = 0; c < cols; ++c) row[c] = (row[c] - params.mean[c]) / params.stddev[c];
    }
    return params;
}

namespace {

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        const double d = a[c] - b[c];
        sum += d * d;
    }
    return sum;
}

double entropy(const std::map<std::size_t, std::size_t>& counts, double total) {
    double h = 0;
    for (const auto& [key, count] : counts) {
        (void)key;
        if (count == 0) continue;
        const double p = static_cast<double>(count) / total;
        h -= p * std::log(p);
    }
    return h;
}

struct LloydRun {
    std::vector<int> assignments;
    std::vector<std::vector<double>> centroids;
    double wcss = 0;
    std::vector<double> wcss_history;
    int iterations = 0;
};

LloydRun lloyd(const std::vector<std::vector<double>>& rows, int k, int max_iterations, Rng& rng) {
    const std::size_t n = rows.size();
    LloydRun run;

    // Random-point init: k distinct rows.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    run.centroids.reserve(k);
    for (int c = 0; c < k; ++c) run.centroids.push_back(rows[order[c]]);

    run.assignments.assign(n, -1);
    std::vector<double> point_distance(n, 0.0);

    for (int iter = 0; iter < max_iterations; ++iter) {
        // Assignment step; ties go to the lowest centroid index.
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_distance = squared_distance(rows[i], run.centroids[0]);
            for (int c = 1; c < k; ++c) {
                const double dist = squared_distance(rows[i], run.centroids[c]);
                if (dist < best_distance) {
                    best_distance = dist;
                    best = c;
                }
            }
            point_distance[i] = best_distance;
            if (run.assignments[i] != best) {
                run.assignments[i] = best;
                changed = true;
            }
        }

        // Reseed emptied clusters to the farthest point from its centroid.
        std::vector<std::size_t> sizes(k, 0);
        for (int a : run.assignments) ++sizes[a];
        for (int c = 0; c < k; ++c) {
            if (sizes[c] > 0) continue;
            std::size_t farthest = 0;
            double farthest_distance = -1;
            for (std::size_t i = 0; i < n; ++i) {
                if (sizes[run.assignments[i]] <= 1) continue;  // keep singletons alive
                if (point_distance[i] > farthest_distance) {
                    farthest_distance = point_distance[i];
                    farthest = i;
                }
            }
            // k <= n guarantees some cluster still has >= 2 members here.
            assert(farthest_distance >= 0);
            --sizes[run.assignments[farthest]];
            run.assignments[farthest] = c;
            sizes[c] = 1;
            point_distance[farthest] = 0;
            changed = true;
        }

        // Update step.
        const std::size_t cols = rows[0].size();
        for (int c = 0; c < k; ++c) {
            run.centroids[c].assign(cols, 0.0);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t col = 0; col < cols; ++col) {
                run.centroids[run.assignments[i]][col] += rows[i][col];
            }
        }
        for (int c = 0; c < k; ++c) {
            for (std::size_t col = 0; col < cols; ++col) {
                run.centroids[c][col] /= static_cast<double>(sizes[c]);
            }
        }

        double wcss = 0;
        for (std::size_t i = 0; i < n; ++i) {
            wcss += squared_distance(rows[i], run.centroids[run.assignments[i]]);
        }
        assert(run.wcss_history.empty() ||
               wcss <= run.wcss_history.back() + 1e-9 * (1.0 + run.wcss_history.back()));
        run.wcss_history.push_back(wcss);
        run.wcss = wcss;
        run.iterations = iter + 1;
        if (!changed) break;
    }
    return run;
}

}  // namespace

std::tuple<double, double, double> cluster_quality(std::span<const int> assignments,
                                                   std::span<const std::string> labels) {
    if (assignments.size() != labels.size()) {
        throw std::invalid_argument("assignment and label sequences differ in length");
    }
    if (assignments.empty()) throw std::invalid_argument("empty clustering");
    const double n = static_cast<double>(assignments.size());

    std::map<std::string, std::size_t> class_ids;
    for (const auto& label : labels) class_ids.emplace(label, class_ids.size());

    std::map<std::size_t, std::size_t> class_counts, cluster_counts;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> joint;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        const std::size_t cls = class_ids[labels[i]];
        const std::size_t clu = static_cast<std::size_t>(assignments[i]);
        ++class_counts[cls];
        ++cluster_counts[clu];
        ++joint[{clu, cls}];
    }

    const double h_class = entropy(class_counts, n);
    const double h_cluster = entropy(cluster_counts, n);
    double h_class_given_cluster = 0;
    double h_cluster_given_class = 0;
    for (const auto& [key, count] : joint) {
        const double p_joint = static_cast<double>(count) / n;
        const double p_cluster = static_cast<double>(cluster_counts[key.first]) / n;
        const double p_class = static_cast<double>(class_counts[key.second]) / n;
        h_class_given_cluster -= p_joint * std::log(p_joint / p_cluster);
        h_cluster_given_class -= p_joint * std::log(p_joint / p_class);
    }

    const double homogeneity =
        h_class == 0 ? 1.0 : std::clamp(1.0 - h_class_given_cluster / h_class, 0.0, 1.0);
    const double completeness =
        h_cluster == 0 ? 1.0 : std::clamp(1.0 - h_cluster_given_class / h_cluster, 0.0, 1.0);
    const double v = (homogeneity + completeness == 0)
                         ? 0.0
                         : 2.0 * homogeneity * completeness / (homogeneity + completeness);
    return {homogeneity, completeness, v};
}

ClusteringResult kmeans(const std::vector<std::vector<double>>& rows,
                        const std::vector<std::string>& labels, int k, int restarts,
                        int max_iterations, std::uint64_t seed) {
    if (rows.empty()) throw std::invalid_argument("kmeans on an empty matrix");
    if (labels.size() != rows.size()) {
        throw std::invalid_argument("kmeans label count does not match row count");
    }
    if (k < 1 || static_cast<std::size_t>(k) > rows.size()) {
        throw std::invalid_argument("kmeans needs 1 <= k <= number of rows");
    }
    if (restarts < 1) throw std::invalid_argument("kmeans needs at least one restart");
    if (max_iterations < 1) throw std::invalid_argument("kmeans needs at least one iteration");

    ClusteringResult best;
    best.seed = seed;
    best.restarts = restarts;
    bool have_best = false;
    for (int r = 0; r < restarts; ++r) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(r));
        LloydRun run = lloyd(rows, k, max_iterations, rng);
        const auto [h, c, v] = cluster_quality(run.assignments, labels);
        const bool better =
            !have_best || v > best.v_measure ||
            (v == best.v_measure && run.wcss < best.wcss);
        if (better) {
            have_best = true;
            best.assignments = std::move(run.assignments);
            best.centroids = std::move(run.centroids);
            best.homogeneity = h;
            best.completeness = c;
            best.v_measure = v;
            best.wcss = run.wcss;
            best.wcss_history = std::move(run.wcss_history);
            best.iterations = run.iterations;
            best.best_restart = r;
        }
    }
    return best;
}

SymmetricEigen eigen_symmetric(std::vector<std::vector<double>> matrix) {
    const std::size_t n = matrix.size();
    for (const auto& row : matrix) {
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    }
    std::vector<std::vector<double>> vectors(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) vectors[i][i] = 1.0;

    // Cyclic Jacobi rotations; plenty for the small covariance matrices here.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += matrix[p][q] * matrix[p][q];
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = matrix[p][q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (matrix[q][q] - matrix[p][p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cos_r = 1.0 / std::sqrt(t * t + 1.0);
                const double sin_r = t * cos_r;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = matrix[i][p];
                    const double aiq = matrix[i][q];
                    matrix[i][p] = cos_r * aip - sin_r * aiq;
                    matrix[i][q] = sin_r * aip + cos_r * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = matrix[p][i];
                    const double aqi = matrix[q][i];
                    matrix[p][i] = cos_r * api - sin_r * aqi;
                    matrix[q][i] = sin_r * api + cos_r * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = vectors[i][p];
                    const double viq = vectors[i][q];
                    vectors[i][p] = cos_r * vip - sin_r * viq;
                    vectors[i][q] = sin_r * vip + cos_r * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return matrix[a][a] > matrix[b][b]; });

    SymmetricEigen result;
    result.values.reserve(n);
    result.vectors.reserve(n);
    for (std::size_t e : order) {
        result.values.push_back(matrix[e][e]);
        std::vector<double> vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = vectors[i][e];
        for (double component : vec) {
            if (std::abs(component) > 1e-12) {
                if (component < 0) {
                    for (double& x : vec) x = -x;
                }
                break;
            }
        }
        result.vectors.push_back(std::move(vec));
    }
    return result;
}

std::vector<std::pair<double, double>> pca_2d(const std::vector<std::vector<double>>& rows) {
    if (rows.size() < 2) throw std::invalid_argument("pca_2d needs at least 2 rows");
    const std::size_t cols = rows[0].size();
    if (cols < 2) throw std::invalid_argument("pca_2d needs at least 2 feature columns");

    std::vector<double> mean(cols, 0.0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < cols; ++c) mean[c] += row[c];
    }
    for (double& m : mean) m /= static_cast<double>(rows.size());

    std::vector<std::vector<double>> covariance(cols, std::vector<double>(cols, 0.0));
    for (const auto& row : rows) {
        for (std::size_t a = 0; a < cols; ++a) {
            for (std::size_t b = a; b < cols; ++b) {
                covariance[a][b] += (row[a] - mean[a]) * (row[b] - mean[b]);
            }
        }
    }
    const double denom = static_cast<double>(rows.size() - 1);
    for (std::size_t a = 0; a < cols; ++a) {
        for (std::size_t b = a; b < cols; ++b) {
            covariance[a][b] /= denom;
            covariance[b][a] = covariance[a][b];
        }
    }

    const SymmetricEigen eigen = eigen_symmetric(covariance);
    const double scale = std::max(1.0, std::abs(eigen.values[0]));
    if (eigen.values[1] <= 1e-12 * scale) {
        throw std::invalid_argument("covariance has rank < 2; cannot project to two dimensions");
    }

    std::vector<std::pair<double, double>> coords;
    coords.reserve(rows.size());
    for (const auto& row : rows) {
        double x = 0, y = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            const double centered = row[c] - mean[c];
            x += centered * eigen.vectors[0][c];
            y += centered * eigen.vectors[1][c];
        }
        coords.emplace_back(x, y);
    }
    return coords;
}

}  // namespace quadra
