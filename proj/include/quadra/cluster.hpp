#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace quadra {

struct Standardization {
    std::vector<double> mean;
    std::vector<double> stddev;  // columns with zero spread keep 1 to stay finite
};

// Column-wise z-scoring in place; returns the parameters used.
Standardization standardize_columns(std::vector<std::vector<double>>& rows);

struct ClusteringResult {
    std::vector<int> assignments;
    std::vector<std::vector<double>> centroids;
    double homogeneity = 0;
    double completeness = 0;
    double v_measure = 0;
    double wcss = 0;               // within-cluster sum of squares of the winner
    std::vector<double> wcss_history;  // per-iteration objective of the winner
    std::uint64_t seed = 0;
    int restarts = 0;
    int iterations = 0;            // iterations of the winning run
    int best_restart = 0;
};

// Lloyd's algorithm with random-point initialization, restarted `restarts`
// times; the run with the highest V-measure against `labels` wins, ties
// broken by lower within-cluster sum of squares, then lower restart index.
// An emptied cluster is reseeded to the point farthest from its centroid.
ClusteringResult kmeans(const std::vector<std::vector<double>>& rows,
                        const std::vector<std::string>& labels, int k, int restarts,
                        int max_iterations, std::uint64_t seed);

// Entropy-based homogeneity, completeness and their harmonic mean. By
// convention homogeneity is 1 when the class entropy is zero, completeness
// is 1 when the cluster entropy is zero, and the V-measure is 0 when both
// scores vanish.
std::tuple<double, double, double> cluster_quality(std::span<const int> assignments,
                                                   std::span<const std::string> labels);

// All eigenpairs of a small symmetric matrix (cyclic Jacobi), eigenvalues
// descending, each eigenvector's first nonzero component positive.
struct SymmetricEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;  // vectors[e][dim]
};
SymmetricEigen eigen_symmetric(std::vector<std::vector<double>> matrix);

// Projection of the rows onto the top-2 principal axes of the sample
// covariance (columns centered first). Throws std::invalid_argument on
// fewer than 2 rows/columns or rank < 2.
std::vector<std::pair<double, double>> pca_2d(const std::vector<std::vector<double>>& rows);

}  // namespace quadra
