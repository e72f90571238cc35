#include "prd/kmeans.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "prd/errors.hpp"
#include "prd/random.hpp"

namespace prd {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        d += diff * diff;
    }
    return d;
}

// k-means++: first centre uniform, then each next centre drawn with
// probability proportional to the squared distance to the nearest chosen one.
std::vector<double> seed_centroids(const FeatureSet& data, std::size_t k, Rng& rng) {
    const std::size_t n = data.rows();
    const std::size_t dim = data.cols();
    std::vector<double> centroids;
    centroids.reserve(k * dim);

    auto add = [&](std::size_t row) {
        auto r = data.row(row);
        centroids.insert(centroids.end(), r.begin(), r.end());
    };

    add(rng.index(n));
    std::vector<double> nearest(n);
    for (std::size_t i = 0; i < n; ++i) {
        nearest[i] = squared_distance(data.row(i), {centroids.data(), dim});
    }

    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (double d : nearest) {
            total += d;
        }
        std::size_t pick = n - 1;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double cumulative = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                cumulative += nearest[i];
                if (nearest[i] > 0.0 && cumulative > target) {
                    pick = i;
                    break;
                }
            }
            // Rounding can leave the target unreached; take the last point
            // that still has positive weight.
            if (cumulative <= target) {
                for (std::size_t i = n; i-- > 0;) {
                    if (nearest[i] > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        } else {
            // Fewer distinct points than clusters.
            pick = rng.index(n);
        }
        add(pick);
        std::span<const double> latest{centroids.data() + c * dim, dim};
        for (std::size_t i = 0; i < n; ++i) {
            nearest[i] = std::min(nearest[i], squared_distance(data.row(i), latest));
        }
    }
    return centroids;
}

}  // namespace

ClusterModel::ClusterModel(std::size_t k, std::size_t dim, std::vector<double> centroids)
    : k_(k), dim_(dim), centroids_(std::move(centroids)) {
    if (k_ == 0 || dim_ == 0) {
        throw DomainError("cluster model needs k >= 1 and dimension >= 1");
    }
    if (centroids_.size() != k_ * dim_) {
        throw DomainError("centroid storage does not match k x dim");
    }
    for (double v : centroids_) {
        if (!std::isfinite(v)) {
            throw DomainError("centroids must be finite");
        }
    }
}

std::size_t ClusterModel::nearest(std::span<const double> point) const {
    std::size_t best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k_; ++j) {
        const double d = squared_distance(point, centroid(j));
        if (d < best_distance) {
            best_distance = d;
            best = j;
        }
    }
    return best;
}

ClusterModel minibatch_kmeans(const FeatureSet& data, const KMeansParams& params) {
    const std::size_t n = data.rows();
    const std::size_t dim = data.cols();
    if (params.k == 0) {
        throw DomainError("k must be at least 1");
    }
    if (params.batch_size == 0 || params.iterations == 0) {
        throw DomainError("batch size and iteration count must be at least 1");
    }
    if (n < params.k) {
        throw InsufficientDataError("need at least k = " + std::to_string(params.k) +
                                    " points, got " + std::to_string(n));
    }

    Rng rng(params.seed);
    std::vector<double> centroids = seed_centroids(data, params.k, rng);
    std::vector<std::size_t> seen(params.k, 0);

    const bool full_batch = params.batch_size >= n;
    const std::size_t batch_size = full_batch ? n : params.batch_size;
    std::vector<std::size_t> batch(batch_size);
    std::vector<std::size_t> owner(batch_size);

    for (std::size_t it = 0; it < params.iterations; ++it) {
        for (std::size_t b = 0; b < batch_size; ++b) {
            batch[b] = full_batch ? b : rng.index(n);
        }
        // Assign the whole batch against the centroids from the start of
        // the iteration, then apply the per-point updates.
        const ClusterModel current(params.k, dim, centroids);
        for (std::size_t b = 0; b < batch_size; ++b) {
            owner[b] = current.nearest(data.row(batch[b]));
        }
        for (std::size_t b = 0; b < batch_size; ++b) {
            const std::size_t c = owner[b];
            const double eta = 1.0 / static_cast<double>(++seen[c]);
            auto x = data.row(batch[b]);
            double* centre = centroids.data() + c * dim;
            for (std::size_t d = 0; d < dim; ++d) {
                centre[d] = (1.0 - eta) * centre[d] + eta * x[d];
            }
        }
    }
    return ClusterModel(params.k, dim, std::move(centroids));
}

ClusterModel minibatch_kmeans(const FeatureSet& data, std::size_t k, std::size_t batch_size,
                              std::size_t iterations, std::uint64_t seed) {
    return minibatch_kmeans(data, KMeansParams{k, batch_size, iterations, seed});
}

std::vector<std::size_t> assign(const ClusterModel& model, const FeatureSet& data) {
    if (data.cols() != model.dim()) {
        throw DimensionError("data dimension " + std::to_string(data.cols()) +
                             " does not match centroid dimension " +
                             std::to_string(model.dim()));
    }
    std::vector<std::size_t> labels(data.rows());
    for (std::size_t i = 0; i < data.rows(); ++i) {
        labels[i] = model.nearest(data.row(i));
    }
    return labels;
}

}  // namespace prd
