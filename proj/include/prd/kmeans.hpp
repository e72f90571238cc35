#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prd/feature_set.hpp"

namespace prd {

inline constexpr std::size_t kDefaultClusters = 20;
inline constexpr std::size_t kDefaultBatchSize = 1024;
inline constexpr std::size_t kDefaultIterations = 500;

struct KMeansParams {
    std::size_t k = kDefaultClusters;
    std::size_t batch_size = kDefaultBatchSize;
    std::size_t iterations = kDefaultIterations;
    std::uint64_t seed = 0;
};

/// k centroids in D-dimensional space, row-major.
class ClusterModel {
public:
    ClusterModel(std::size_t k, std::size_t dim, std::vector<double> centroids);

    std::size_t k() const noexcept { return k_; }
    std::size_t dim() const noexcept { return dim_; }
    std::span<const double> centroid(std::size_t j) const {
        return {centroids_.data() + j * dim_, dim_};
    }
    std::span<const double> centroids() const noexcept { return centroids_; }

    /// Index of the nearest centroid (squared Euclidean); ties go to the
    /// lowest index.
    std::size_t nearest(std::span<const double> point) const;

    friend bool operator==(const ClusterModel&, const ClusterModel&) = default;

private:
    std::size_t k_;
    std::size_t dim_;
    std::vector<double> centroids_;
};

/// Mini-batch k-means with k-means++ seeding.
///
/// Each iteration draws `batch_size` row indices uniformly with replacement,
/// assigns them to the current centroids, then moves each assigned centroid
/// toward its points with step 1 / (points seen so far by that centroid).
/// A batch size of at least N uses every row once per iteration, in order.
/// The result depends only on (data, params).
ClusterModel minibatch_kmeans(const FeatureSet& data, const KMeansParams& params);

ClusterModel minibatch_kmeans(const FeatureSet& data, std::size_t k, std::size_t batch_size,
                              std::size_t iterations, std::uint64_t seed);

/// Nearest-centroid index for every row. Throws DimensionError on a
/// dimension mismatch.
std::vector<std::size_t> assign(const ClusterModel& model, const FeatureSet& data);

}  // namespace prd
