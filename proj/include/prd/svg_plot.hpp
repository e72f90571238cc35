#pragma once

#include <span>
#include <string>
#include <vector>

#include "prd/prd.hpp"

namespace prd {

/// Filled region of the output of interpolate_set, recall on x and precision
/// on y, both axes [0, 1].
std::string render_prd_svg(std::span<const PrdPoint> polygon, const std::string& title);

struct ScatterPoint {
    std::string id;
    double x;
    double y;
};

/// Scatter over the unit square with the diagonal drawn.
std::string render_scatter_svg(std::span<const ScatterPoint> points, const std::string& x_label,
                               const std::string& y_label);

}  // namespace prd
