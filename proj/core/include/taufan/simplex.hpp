#pragma once

#include "taufan/rational.hpp"

namespace taufan {

// exact feasibility of { x >= 0 : a x = b } by phase-one simplex with
// Bland's rule
bool lp_feasible(const QMat& a, const QVec& b);

}  // namespace taufan
