#include "prd/feature_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "prd/errors.hpp"

namespace prd {

FeatureSet::FeatureSet(std::size_t rows, std::size_t cols, std::vector<double> values,
                       std::optional<std::vector<std::int32_t>> labels)
    : rows_(rows), cols_(cols), values_(std::move(values)), labels_(std::move(labels)) {
    if (rows_ == 0 || cols_ == 0) {
        throw DomainError("feature set needs at least one row and one column");
    }
    if (values_.size() != rows_ * cols_) {
        throw DomainError("feature set holds " + std::to_string(values_.size()) +
                          " values, expected " + std::to_string(rows_ * cols_));
    }
    if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
        throw DomainError("feature set contains non-finite values");
    }
    if (labels_ && labels_->size() != rows_) {
        throw DomainError("label count does not match row count");
    }
}

FeatureSet FeatureSet::subset(std::span<const std::size_t> indices) const {
    std::vector<double> values;
    values.reserve(indices.size() * cols_);
    std::optional<std::vector<std::int32_t>> labels;
    if (labels_) {
        labels.emplace();
        labels->reserve(indices.size());
    }
    for (std::size_t i : indices) {
        if (i >= rows_) {
            throw DomainError("subset row index out of range");
        }
        auto r = row(i);
        values.insert(values.end(), r.begin(), r.end());
        if (labels) {
            labels->push_back((*labels_)[i]);
        }
    }
    return FeatureSet(indices.size(), cols_, std::move(values), std::move(labels));
}

FeatureSet concatenate(const FeatureSet& a, const FeatureSet& b) {
    if (a.cols() != b.cols()) {
        throw DimensionError("feature dimensions differ: " + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.cols()));
    }
    std::vector<double> values(a.values().begin(), a.values().end());
    values.insert(values.end(), b.values().begin(), b.values().end());
    return FeatureSet(a.rows() + b.rows(), a.cols(), std::move(values));
}

FeatureSet canonical_order(const FeatureSet& data) {
    std::vector<std::size_t> order(data.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto rx = data.row(x);
        auto ry = data.row(y);
        return std::lexicographical_compare(rx.begin(), rx.end(), ry.begin(), ry.end());
    });
    std::vector<double> values;
    values.reserve(data.values().size());
    for (std::size_t i : order) {
        auto r = data.row(i);
        values.insert(values.end(), r.begin(), r.end());
    }
    return FeatureSet(data.rows(), data.cols(), std::move(values));
}

}  // namespace prd
