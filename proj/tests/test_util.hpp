#pragma once

#include <cmath>

namespace spacelike::testing {

/// Relative error |actual - expected| / |expected|.
inline double rel_err(double actual, double expected) {
    return std::abs(actual - expected) / std::abs(expected);
}

} // namespace spacelike::testing
