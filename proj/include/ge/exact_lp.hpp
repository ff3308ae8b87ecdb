#ifndef GE_EXACT_LP_HPP
#define GE_EXACT_LP_HPP

#include <optional>

#include "ge/exact_linalg.hpp"

namespace ge {

/// Exact feasibility of { y : A y = b, y >= 0 } by phase-one simplex over
/// rationals with Bland's rule. Returns a feasible point when one exists.
std::optional<RationalVector> find_feasible_point(const RationalMatrix& a, const RationalVector& b);

}  // namespace ge

#endif  // GE_EXACT_LP_HPP
