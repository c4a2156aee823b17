#pragma once

#include "fairmatch/model.hpp"
#include "fairmatch/result.hpp"

namespace fairmatch {

// Exhaustive search over left-perfect assignments, with pruning that never
// cuts a feasible branch.  Returns YES with a witness or NO.  Throws
// ResourceError once more than `node_budget` assignment attempts were made.
SolveResult brute_force(const Instance& inst, long long node_budget = 10'000'000);

// 3^n dynamic program over subsets of U: a subset is admissible for a right
// vertex if it is inside its neighborhood, fair, and within the size bounds;
// the DP decides whether admissible subsets can partition U.  Decision only.
// Throws ResourceError when n > 20.
SolveResult subset_dp(const Instance& inst);

}  // namespace fairmatch
