#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prd/distribution.hpp"
#include "prd/feature_set.hpp"
#include "prd/kmeans.hpp"
#include "prd/prd.hpp"

namespace prd {

inline constexpr std::size_t kDefaultRuns = 10;

struct HistogramPair {
    DiscreteDistribution p_hist;  // real samples
    DiscreteDistribution q_hist;  // generated samples
};

/// Fraction of each set falling into each cluster. Empty clusters keep zero
/// mass, so both histograms always have model.k() states.
HistogramPair build_histograms(const FeatureSet& real, const FeatureSet& generated,
                               const ClusterModel& model);

struct ClusteringOptions {
    std::size_t k = kDefaultClusters;
    std::size_t runs = kDefaultRuns;
    std::size_t resolution = kDefaultResolution;
    std::uint64_t seed = 0;
    std::size_t batch_size = kDefaultBatchSize;
    std::size_t iterations = kDefaultIterations;
};

struct ClusteringRun {
    std::uint64_t seed;
    HistogramPair histograms;
    PrdCurve curve;
};

struct AveragedPrd {
    PrdCurve curve;  // pointwise mean over runs, same grid for every run
    std::vector<ClusteringRun> runs;

    double mean_max_precision() const;
    double mean_max_recall() const;
    double mean_tv_distance() const;
};

/// Seeds used for the clustering runs: seed + 1, ..., seed + runs.
std::vector<std::uint64_t> run_seeds(std::uint64_t seed, std::size_t runs);

/// Clusters the union of both sets `runs` times and averages the curves.
/// The union is put in canonical row order first, so the result depends on
/// the multisets of rows and not on their order.
AveragedPrd averaged_prd_runs(const FeatureSet& real, const FeatureSet& generated,
                              const ClusteringOptions& options);

PrdCurve averaged_prd(const FeatureSet& real, const FeatureSet& generated, std::size_t k,
                      std::size_t runs, std::size_t resolution, std::uint64_t seed);

}  // namespace prd
