#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "prd/errors.hpp"
#include "prd/kmeans.hpp"
#include "prd/synthetic.hpp"

using prd::ClusterModel;
using prd::FeatureSet;

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(d);
}

// Three blobs whose centres are 10 apart.
prd::BlobSpec three_blobs() {
    prd::BlobSpec spec;
    spec.classes = 3;
    spec.per_class = 300;
    spec.dim = 3;
    spec.separation = 10.0 / std::numbers::sqrt2;
    spec.sigma = 0.01;
    spec.seed = 42;
    return spec;
}

std::vector<double> centre(const prd::BlobSpec& spec, std::size_t cls) {
    std::vector<double> c(spec.dim, 0.0);
    c[cls] = spec.separation;
    return c;
}

}  // namespace

TEST_CASE("feature sets reject malformed input") {
    CHECK_THROWS_AS(FeatureSet(0, 2, {}), prd::DomainError);
    CHECK_THROWS_AS(FeatureSet(2, 2, {1.0, 2.0, 3.0}), prd::DomainError);
    CHECK_THROWS_AS(FeatureSet(1, 2, {1.0, std::numeric_limits<double>::infinity()}),
                    prd::DomainError);
    CHECK_THROWS_AS(FeatureSet(2, 1, {1.0, 2.0}, std::vector<std::int32_t>{0}),
                    prd::DomainError);
}

TEST_CASE("k = 1 with a full batch is the data mean") {
    const FeatureSet data(4, 2, {0.0, 0.0, 2.0, 1.0, 4.0, -1.0, 10.0, 4.0});
    const ClusterModel model = prd::minibatch_kmeans(data, 1, 4, 10, 3);
    CHECK(std::abs(model.centroid(0)[0] - 4.0) <= 1e-6);
    CHECK(std::abs(model.centroid(0)[1] - 1.0) <= 1e-6);
}

TEST_CASE("k = 1 with sampled batches approaches the mean") {
    prd::BlobSpec spec;
    spec.classes = 1;
    spec.per_class = 5000;
    spec.dim = 2;
    spec.sigma = 1.0;
    spec.seed = 9;
    const FeatureSet data = prd::make_blobs(spec);
    double mean[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < data.rows(); ++i) {
        mean[0] += data.row(i)[0] / 5000.0;
        mean[1] += data.row(i)[1] / 5000.0;
    }
    const ClusterModel model = prd::minibatch_kmeans(data, 1, 256, 200, 1);
    CHECK(std::abs(model.centroid(0)[0] - mean[0]) < 0.02);
    CHECK(std::abs(model.centroid(0)[1] - mean[1]) < 0.02);
}

TEST_CASE("well separated blobs are recovered") {
    const auto spec = three_blobs();
    const FeatureSet data = prd::make_blobs(spec);
    const ClusterModel model = prd::minibatch_kmeans(data, 3, 1024, 500, 7);
    std::set<std::size_t> matched;
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t c = 0; c < 3; ++c) {
            if (distance(model.centroid(j), centre(spec, c)) < 0.1) {
                matched.insert(c);
            }
        }
    }
    CHECK(matched.size() == 3);

    // At least 99% of points land on their blob's centroid.
    const auto owner = prd::assign(model, data);
    std::map<std::size_t, std::size_t> blob_of_cluster;
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t c = 0; c < 3; ++c) {
            if (distance(model.centroid(j), centre(spec, c)) < 0.1) blob_of_cluster[j] = c;
        }
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        if (blob_of_cluster[owner[i]] == static_cast<std::size_t>((*data.labels())[i])) ++correct;
    }
    CHECK(correct >= static_cast<std::size_t>(0.99 * data.rows()));
}

TEST_CASE("fitting is deterministic for a fixed seed") {
    const FeatureSet data = prd::make_blobs(three_blobs());
    const ClusterModel a = prd::minibatch_kmeans(data, 5, 64, 100, 123);
    const ClusterModel b = prd::minibatch_kmeans(data, 5, 64, 100, 123);
    CHECK(a == b);
    const ClusterModel c = prd::minibatch_kmeans(data, 5, 64, 100, 124);
    CHECK_FALSE(a == c);
}

TEST_CASE("centroids are distinct when the data has k distinct points") {
    // 6 distinct points, each repeated many times.
    std::vector<double> values;
    for (int rep = 0; rep < 50; ++rep) {
        for (int i = 0; i < 6; ++i) {
            values.push_back(i);
            values.push_back(i * i);
        }
    }
    const FeatureSet data(300, 2, values);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ClusterModel model = prd::minibatch_kmeans(data, 6, 32, 50, seed);
        for (std::size_t a = 0; a < 6; ++a) {
            for (std::size_t b = a + 1; b < 6; ++b) {
                REQUIRE(distance(model.centroid(a), model.centroid(b)) > 1e-12);
            }
        }
    }
}

TEST_CASE("fitting errors") {
    const FeatureSet two(2, 1, {0.0, 1.0});
    CHECK_THROWS_AS(prd::minibatch_kmeans(two, 3, 10, 10, 0), prd::InsufficientDataError);
    CHECK_THROWS_AS(prd::minibatch_kmeans(two, 0, 10, 10, 0), prd::DomainError);
    CHECK_THROWS_AS(prd::minibatch_kmeans(two, 1, 0, 10, 0), prd::DomainError);
}

TEST_CASE("assign") {
    // Centroids on a line: 0, 2, 4 and -2 on the x axis.
    const ClusterModel model(4, 2, {0.0, 0.0, 2.0, 0.0, 4.0, 0.0, -2.0, 0.0});
    SUBCASE("point on a centroid") {
        CHECK(prd::assign(model, FeatureSet(1, 2, {4.0, 0.0}))[0] == 2);
    }
    SUBCASE("ties go to the lowest index") {
        // (-1, 0) is 1 away from centroid 0 and centroid 3.
        CHECK(prd::assign(model, FeatureSet(1, 2, {-1.0, 0.0}))[0] == 0);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(prd::assign(model, FeatureSet(1, 3, {0.0, 0.0, 0.0})),
                        prd::DimensionError);
    }
}
