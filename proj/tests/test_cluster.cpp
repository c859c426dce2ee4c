#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "quadra/cluster.hpp"
#include "quadra/rng.hpp"

using namespace quadra;

namespace {

std::vector<std::vector<double>> two_clouds() {
    // Two well-separated 2-D blobs of 5 points each.
    std::vector<std::vector<double>> rows;
    Rng rng(3);
    for (int i = 0; i < 5; ++i) rows.push_back({rng.unit() * 0.1, rng.unit() * 0.1});
    for (int i = 0; i < 5; ++i) rows.push_back({10 + rng.unit() * 0.1, 10 + rng.unit() * 0.1});
    return rows;
}

}  // namespace

TEST_CASE("standardization produces zero mean and unit variance columns") {
    std::vector<std::vector<double>> rows{{1, 100}, {2, 200}, {3, 300}, {4, 400}};
    const auto params = standardize_columns(rows);
    CHECK(params.mean[0] == doctest::Approx(2.5));
    double sum = 0, sum_sq = 0;
    for (const auto& row : rows) {
        sum += row[1];
        sum_sq += row[1] * row[1];
    }
    CHECK(sum == doctest::Approx(0.0));
    CHECK(sum_sq / 4.0 == doctest::Approx(1.0));
}

TEST_CASE("constant columns survive standardization") {
    std::vector<std::vector<double>> rows{{1, 7}, {2, 7}, {3, 7}};
    standardize_columns(rows);
    for (const auto& row : rows) CHECK(row[1] == doctest::Approx(0.0));
}

TEST_CASE("cluster quality: perfect, degenerate and hand-computed cases") {
    const std::vector<std::string> labels{"a", "a", "b", "b"};

    const std::vector<int> perfect{0, 0, 1, 1};
    auto [h0, c0, v0] = cluster_quality(perfect, labels);
    CHECK(h0 == doctest::Approx(1.0));
    CHECK(c0 == doctest::Approx(1.0));
    CHECK(v0 == doctest::Approx(1.0));

    const std::vector<int> lump{0, 0, 0, 0};
    auto [h1, c1, v1] = cluster_quality(lump, labels);
    CHECK(h1 == doctest::Approx(0.0));
    CHECK(v1 == doctest::Approx(0.0));

    // Pure clusters but class b split in two: h = 1, c = 1 - (ln2/2)/(1.5 ln2)
    // = 2/3, v = 2 * (2/3) / (5/3) = 0.8 by direct entropy arithmetic.
    const std::vector<int> split{1, 1, 2, 3};
    auto [h2, c2, v2] = cluster_quality(split, labels);
    CHECK(std::abs(h2 - 1.0) <= 1e-12);
    CHECK(std::abs(c2 - 2.0 / 3.0) <= 1e-12);
    CHECK(std::abs(v2 - 0.8) <= 1e-12);

    const std::vector<int> short_assignments{0, 1};
    CHECK_THROWS_AS(cluster_quality(short_assignments, labels), std::invalid_argument);
}

TEST_CASE("v-measure is invariant under id permutations") {
    Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 5 + rng.below(20);
        std::vector<int> assignments(n);
        std::vector<std::string> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            assignments[i] = static_cast<int>(rng.below(4));
            labels[i] = std::string(1, static_cast<char>('a' + rng.below(3)));
        }
        auto [h, c, v] = cluster_quality(assignments, labels);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);

        // Permute cluster ids.
        std::vector<int> cluster_map{2, 3, 0, 1};
        std::vector<int> permuted(n);
        for (std::size_t i = 0; i < n; ++i) permuted[i] = cluster_map[assignments[i]];
        auto [h_p, c_p, v_p] = cluster_quality(permuted, labels);
        CHECK(std::abs(v - v_p) <= 1e-12);

        // Permute class ids.
        std::vector<std::string> relabeled(n);
        for (std::size_t i = 0; i < n; ++i) {
            relabeled[i] = std::string(1, static_cast<char>('x' + ('b' - labels[i][0] + 1)));
        }
        auto [h_r, c_r, v_r] = cluster_quality(assignments, relabeled);
        CHECK(std::abs(v - v_r) <= 1e-12);
    }
}

TEST_CASE("kmeans separates two clouds perfectly") {
    const auto rows = two_clouds();
    const std::vector<std::string> labels{"a", "a", "a", "a", "a", "b", "b", "b", "b", "b"};
    const auto result = kmeans(rows, labels, 2, 5, 100, 42);
    CHECK(result.homogeneity == doctest::Approx(1.0));
    CHECK(result.completeness == doctest::Approx(1.0));
    CHECK(result.v_measure == doctest::Approx(1.0));
    CHECK(result.assignments[0] == result.assignments[4]);
    CHECK(result.assignments[0] != result.assignments[5]);
}

TEST_CASE("kmeans with k equal to the row count gives singletons") {
    const auto rows = two_clouds();
    const std::vector<std::string> labels{"a", "a", "a", "a", "a", "b", "b", "b", "b", "b"};
    const auto result = kmeans(rows, labels, 10, 3, 50, 7);
    CHECK(result.homogeneity == doctest::Approx(1.0));
    CHECK(result.completeness < 1.0);
}

TEST_CASE("kmeans objective is non-increasing across iterations") {
    Rng rng(9);
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    for (int i = 0; i < 40; ++i) {
        rows.push_back({rng.unit() * 4, rng.unit() * 4, rng.unit() * 4});
        labels.push_back(i % 2 ? "x" : "y");
    }
    const auto result = kmeans(rows, labels, 4, 4, 60, 3);
    REQUIRE(result.wcss_history.size() >= 1);
    for (std::size_t t = 1; t < result.wcss_history.size(); ++t) {
        CHECK(result.wcss_history[t] <= result.wcss_history[t - 1] + 1e-9);
    }
}

TEST_CASE("kmeans argument validation") {
    const auto rows = two_clouds();
    const std::vector<std::string> labels(10, "a");
    CHECK_THROWS_AS(kmeans(rows, labels, 11, 1, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(kmeans(rows, labels, 2, 0, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(kmeans({}, {}, 1, 1, 10, 0), std::invalid_argument);
}

TEST_CASE("kmeans is deterministic for a fixed seed") {
    const auto rows = two_clouds();
    const std::vector<std::string> labels{"a", "b", "a", "b", "a", "b", "a", "b", "a", "b"};
    const auto r1 = kmeans(rows, labels, 3, 10, 50, 11);
    const auto r2 = kmeans(rows, labels, 3, 10, 50, 11);
    CHECK(r1.assignments == r2.assignments);
    CHECK(r1.v_measure == r2.v_measure);
    CHECK(r1.best_restart == r2.best_restart);
}

TEST_CASE("jacobi eigensolver reproduces eigenpairs") {
    const std::vector<std::vector<double>> m{
        {4.0, 1.0, 0.5}, {1.0, 3.0, -0.25}, {0.5, -0.25, 1.0}};
    const auto eigen = eigen_symmetric(m);
    REQUIRE(eigen.values.size() == 3);
    CHECK(eigen.values[0] >= eigen.values[1]);
    CHECK(eigen.values[1] >= eigen.values[2]);
    for (std::size_t e = 0; e < 3; ++e) {
        for (std::size_t r = 0; r < 3; ++r) {
            double mv = 0;
            for (std::size_t c = 0; c < 3; ++c) mv += m[r][c] * eigen.vectors[e][c];
            CHECK(mv == doctest::Approx(eigen.values[e] * eigen.vectors[e][r]).epsilon(1e-9));
        }
    }
}

TEST_CASE("pca recovers axis-aligned structure") {
    // Data spread along x twice as much as along y.
    std::vector<std::vector<double>> rows;
    for (int i = -5; i <= 5; ++i) rows.push_back({2.0 * i, 0.5 * i * ((i % 2) ? 1 : -1)});
    const auto coords = pca_2d(rows);
    REQUIRE(coords.size() == rows.size());
    // First component aligns with x (sign convention makes it +x).
    double x_spread = 0, y_spread = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        x_spread = std::max(x_spread, std::abs(coords[i].first));
        y_spread = std::max(y_spread, std::abs(coords[i].second));
    }
    CHECK(x_spread > y_spread);
}

TEST_CASE("pca duplicates map to identical coordinates and row order is irrelevant") {
    Rng rng(5);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 12; ++i) {
        rows.push_back({rng.unit(), 2 * rng.unit(), rng.unit() - 1, 3 * rng.unit(), rng.unit()});
    }
    rows.push_back(rows[0]);
    const auto coords = pca_2d(rows);
    CHECK(coords.front().first == doctest::Approx(coords.back().first));
    CHECK(coords.front().second == doctest::Approx(coords.back().second));

    auto reversed = rows;
    std::reverse(reversed.begin(), reversed.end());
    const auto reversed_coords = pca_2d(reversed);
    CHECK(reversed_coords.back().first == doctest::Approx(coords.front().first));
    CHECK(reversed_coords.back().second == doctest::Approx(coords.front().second));
}

TEST_CASE("pca 2-component reconstruction error equals the trailing eigenvalue sum") {
    Rng rng(17);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 30; ++i) {
        std::vector<double> row(5);
        for (auto& x : row) x = rng.unit() * (1 + (&x - row.data()));
        rows.push_back(row);
    }
    const std::size_t cols = 5;
    std::vector<double> mean(cols, 0.0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < cols; ++c) mean[c] += row[c];
    for (auto& m : mean) m /= static_cast<double>(rows.size());
    std::vector<std::vector<double>> covariance(cols, std::vector<double>(cols, 0.0));
    for (const auto& row : rows) {
        for (std::size_t a = 0; a < cols; ++a)
            for (std::size_t b = 0; b < cols; ++b)
                covariance[a][b] += (row[a] - mean[a]) * (row[b] - mean[b]);
    }
    for (auto& r : covariance)
        for (auto& x : r) x /= static_cast<double>(rows.size() - 1);

    // Oracle route: full eigendecomposition; sum of the 3 smallest values.
    const auto eigen = eigen_symmetric(covariance);
    const double expected_residual = eigen.values[2] + eigen.values[3] + eigen.values[4];

    // Data route: mean squared residual (per n-1) after projecting onto the
    // top-2 axes returned by pca_2d.
    const auto coords = pca_2d(rows);
    double total_variance = 0;
    for (std::size_t c = 0; c < cols; ++c) total_variance += covariance[c][c];
    double captured = 0;
    for (const auto& [x, y] : coords) captured += x * x + y * y;
    captured /= static_cast<double>(rows.size() - 1);
    CHECK(total_variance - captured == doctest::Approx(expected_residual).epsilon(1e-9));
}

TEST_CASE("pca rejects degenerate inputs") {
    CHECK_THROWS_AS(pca_2d({{1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(pca_2d({{1.0}, {2.0}}), std::invalid_argument);
    // Rank 1: second direction carries no variance.
    std::vector<std::vector<double>> collinear;
    for (int i = 0; i < 6; ++i) collinear.push_back({1.0 * i, 2.0 * i});
    CHECK_THROWS_AS(pca_2d(collinear), std::invalid_argument);
}
