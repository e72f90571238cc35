#pragma once

#include <cstddef>
#include <cstdint>

#include "prd/feature_set.hpp"

namespace prd {

/// Isotropic Gaussian classes centred at `separation` times the standard
/// basis vectors (class c at separation * e_c, wrapping every `dim` classes
/// onto a second shell at 2 * separation). Labels are 0..classes-1, rows are
/// grouped by class.
struct BlobSpec {
    std::size_t classes = 10;
    std::size_t per_class = 1000;
    std::size_t dim = 16;
    double separation = 10.0;
    double sigma = 0.25;
    std::uint64_t seed = 0;
};

FeatureSet make_blobs(const BlobSpec& spec);

/// Minimum distance between two class centres produced by make_blobs.
double blob_center_distance(const BlobSpec& spec);

}  // namespace prd
