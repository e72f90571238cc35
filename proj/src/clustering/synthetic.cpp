#include "prd/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prd/errors.hpp"
#include "prd/random.hpp"

namespace prd {

namespace {

void centre_of(const BlobSpec& spec, std::size_t cls, std::vector<double>& out) {
    out.assign(spec.dim, 0.0);
    const std::size_t shell = cls / spec.dim + 1;
    out[cls % spec.dim] = spec.separation * static_cast<double>(shell);
}

}  // namespace

FeatureSet make_blobs(const BlobSpec& spec) {
    if (spec.classes == 0 || spec.per_class == 0 || spec.dim == 0) {
        throw DomainError("blob spec needs classes, per_class and dim >= 1");
    }
    if (!(spec.sigma >= 0.0) || !(spec.separation > 0.0)) {
        throw DomainError("blob spec needs sigma >= 0 and separation > 0");
    }
    Rng rng(spec.seed);
    const std::size_t n = spec.classes * spec.per_class;
    std::vector<double> values;
    values.reserve(n * spec.dim);
    std::vector<std::int32_t> labels;
    labels.reserve(n);
    std::vector<double> centre;
    for (std::size_t c = 0; c < spec.classes; ++c) {
        centre_of(spec, c, centre);
        for (std::size_t i = 0; i < spec.per_class; ++i) {
            for (std::size_t d = 0; d < spec.dim; ++d) {
                values.push_back(centre[d] + spec.sigma * rng.normal());
            }
            labels.push_back(static_cast<std::int32_t>(c));
        }
    }
    return FeatureSet(n, spec.dim, std::move(values), std::move(labels));
}

double blob_center_distance(const BlobSpec& spec) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> a, b;
    for (std::size_t i = 0; i < spec.classes; ++i) {
        centre_of(spec, i, a);
        for (std::size_t j = i + 1; j < spec.classes; ++j) {
            centre_of(spec, j, b);
            double d = 0.0;
            for (std::size_t k = 0; k < spec.dim; ++k) {
                d += (a[k] - b[k]) * (a[k] - b[k]);
            }
            best = std::min(best, std::sqrt(d));
        }
    }
    return best;
}

}  // namespace prd
