#ifndef CRSYM_FLOAT_CHECK_HPP
#define CRSYM_FLOAT_CHECK_HPP

#include "crsym/matrix.hpp"

namespace crsym {

/// Rank by double-precision complex Gaussian elimination with partial
/// pivoting; independent of the exact elimination path. A pivot below
/// tol * max(1, largest entry magnitude) counts as zero.
size_t float_rank(const ExactMatrix& m, double tol);

}  // namespace crsym

#endif
