#include "prd/histograms.hpp"

#include <string>

#include "prd/errors.hpp"

namespace prd {

namespace {

DiscreteDistribution cluster_histogram(const ClusterModel& model, const FeatureSet& data) {
    std::vector<double> counts(model.k(), 0.0);
    for (std::size_t c : assign(model, data)) {
        counts[c] += 1.0;
    }
    const double n = static_cast<double>(data.rows());
    for (double& c : counts) {
        c /= n;
    }
    return DiscreteDistribution(std::move(counts));
}

template <typename F>
double mean_over_runs(const std::vector<ClusteringRun>& runs, F&& f) {
    if (runs.empty()) {
        return 0.0;
    }
    double total = 0.0;
    for (const ClusteringRun& r : runs) {
        total += f(r.histograms);
    }
    return total / static_cast<double>(runs.size());
}

}  // namespace

HistogramPair build_histograms(const FeatureSet& real, const FeatureSet& generated,
                               const ClusterModel& model) {
    return {cluster_histogram(model, real), cluster_histogram(model, generated)};
}

double AveragedPrd::mean_max_precision() const {
    return mean_over_runs(runs, [](const HistogramPair& h) {
        return max_precision(h.p_hist, h.q_hist);
    });
}

double AveragedPrd::mean_max_recall() const {
    return mean_over_runs(runs, [](const HistogramPair& h) {
        return max_recall(h.p_hist, h.q_hist);
    });
}

double AveragedPrd::mean_tv_distance() const {
    return mean_over_runs(runs, [](const HistogramPair& h) {
        return tv_distance(h.p_hist, h.q_hist);
    });
}

std::vector<std::uint64_t> run_seeds(std::uint64_t seed, std::size_t runs) {
    std::vector<std::uint64_t> seeds(runs);
    for (std::size_t r = 0; r < runs; ++r) {
        seeds[r] = seed + static_cast<std::uint64_t>(r + 1);
    }
    return seeds;
}

AveragedPrd averaged_prd_runs(const FeatureSet& real, const FeatureSet& generated,
                              const ClusteringOptions& options) {
    if (options.runs == 0) {
        throw DomainError("runs must be at least 1");
    }
    if (options.resolution == 0) {
        throw DomainError("grid resolution must be at least 1");
    }
    const FeatureSet pooled = canonical_order(concatenate(real, generated));

    AveragedPrd result;
    const LambdaGrid grid(options.resolution);
    result.curve.lambdas.assign(grid.lambdas().begin(), grid.lambdas().end());
    result.curve.points.assign(options.resolution, PrdPoint{});

    for (std::uint64_t seed : run_seeds(options.seed, options.runs)) {
        const KMeansParams params{options.k, options.batch_size, options.iterations, seed};
        const ClusterModel model = minibatch_kmeans(pooled, params);
        HistogramPair histograms = build_histograms(real, generated, model);
        PrdCurve curve = prd_curve(histograms.p_hist, histograms.q_hist, options.resolution);
        for (std::size_t i = 0; i < curve.size(); ++i) {
            result.curve.points[i].precision += curve.points[i].precision;
            result.curve.points[i].recall += curve.points[i].recall;
        }
        result.runs.push_back({seed, std::move(histograms), std::move(curve)});
    }

    const double runs = static_cast<double>(options.runs);
    for (PrdPoint& pt : result.curve.points) {
        pt.precision /= runs;
        pt.recall /= runs;
    }
    return result;
}

PrdCurve averaged_prd(const FeatureSet& real, const FeatureSet& generated, std::size_t k,
                      std::size_t runs, std::size_t resolution, std::uint64_t seed) {
    ClusteringOptions options;
    options.k = k;
    options.runs = runs;
    options.resolution = resolution;
    options.seed = seed;
    return averaged_prd_runs(real, generated, options).curve;
}

}  // namespace prd
