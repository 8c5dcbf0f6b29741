// Double-description conversion for small exact cones.
#pragma once

#include "pushpull/rational.hpp"

#include <vector>

namespace pushpull {

/// Extreme rays of the pointed cone {y : <row, y> >= 0 for every row}.
/// The rows must have full column rank. Rays are returned as primitive integer
/// vectors in lexicographic order.
RatMat extreme_rays(const RatMat& rows);

}  // namespace pushpull
