#pragma once

#include "cutpoly/rational.hpp"

namespace cutpoly {

// Exact feasibility of { q >= 0 : sum_j q_j * col_j = b } via a phase-1
// simplex with Bland's rule.  `columns` is column-major; all columns must
// have b.size() rows.
bool rational_feasible(const std::vector<RatVec>& columns, const RatVec& b);

}  // namespace cutpoly
