#pragma once

#include "safe/zdt.hpp"

#include <cstddef>
#include <span>

namespace safe {

struct IgdResult {
    double value;
    std::size_t tf_size;
    std::size_t pf_size;
};

/// Inverted generational distance: the mean, over true-front points, of the
/// Euclidean distance in objective space to the nearest produced point.
/// Throws std::invalid_argument if either front is empty.
IgdResult igd(std::span<const ObjectiveVector> true_front, std::span<const ObjectiveVector> produced);

struct Summary {
    double mean;
    double stddev; // sample (n - 1); 0 for a single value
};

Summary summarize(std::span<const double> values);

} // namespace safe
