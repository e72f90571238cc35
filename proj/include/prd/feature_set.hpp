#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace prd {

/// N x D matrix of embedding vectors (row-major) with optional class labels.
class FeatureSet {
public:
    /// Throws DomainError unless rows, cols >= 1, values.size() == rows * cols,
    /// every entry is finite and labels (when given) have one entry per row.
    FeatureSet(std::size_t rows, std::size_t cols, std::vector<double> values,
               std::optional<std::vector<std::int32_t>> labels = std::nullopt);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * cols_, cols_};
    }
    std::span<const double> values() const noexcept { return values_; }

    bool has_labels() const noexcept { return labels_.has_value(); }
    const std::optional<std::vector<std::int32_t>>& labels() const noexcept { return labels_; }

    /// Rows `indices` in the given order; labels follow along.
    FeatureSet subset(std::span<const std::size_t> indices) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
    std::optional<std::vector<std::int32_t>> labels_;
};

/// Rows of `a` followed by rows of `b`, without labels.
FeatureSet concatenate(const FeatureSet& a, const FeatureSet& b);

/// Same multiset of rows, sorted lexicographically. Labels are dropped.
FeatureSet canonical_order(const FeatureSet& data);

}  // namespace prd
