#pragma once

#include <utility>
#include <vector>

#include "fairmatch/general_factor.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/result.hpp"

namespace fairmatch {

// Two-color solver: gadget-bank reduction to a saturating matching.
// Requires exactly two colors and no size_max; arbitrary size_min.
SolveResult solve_two_colors(const Instance& inst);

// True iff a two-color share with m1 vertices of one color and m2 of the
// other meets the size lower bound p and the fairness threshold ell, i.e.
// m1 + m2 >= p and |m1 - m2| <= ell.  Exposed for the representation-vector
// property check.
bool two_color_share_ok(int m1, int m2, int p, int ell);

// Exhaustive search for a representation vector: nonnegative integers
// a_1..a_6 with a_1 + 2 a_2 + ... matching the gadget-boundary arithmetic of
// the two-color construction.  Returns true iff some vector represents
// (m1, m2) under (p, ell).
bool representation_vector_exists(int m1, int m2, int p, int ell);

// Margin measure, right degrees <= 4, size constraints at most nonemptiness.
// Decision via degree-list gadgets over the general factor backend.
SolveResult solve_mov_deg4(const Instance& inst);

// Standalone copy of the degree-list gadget used by solve_mov_deg4 for one
// right vertex whose neighbors carry the given colors.  Vertices
// 0..deg-1 are the neighbor slots with allowed degrees {0, 1}; forcing slot
// i to degree 1 models assigning neighbor i.  The gadget is feasible under a
// forced slot subset exactly when that subset is a fair (and, if requested,
// nonempty) share.
GeneralFactorInstance build_mov_deg4_gadget(
    const std::vector<int>& neighbor_colors, int ell, bool nonempty);

// Max-min measure for right degrees <= 2, or left degrees <= 2 with right
// degrees <= 3.  Size constraints at most nonemptiness.
SolveResult solve_maxmin_lowdeg(const Instance& inst);

// Left degrees <= 1: every assignment is forced; decide by checking it.
SolveResult solve_forced_assignment(const Instance& inst);

// Complete-bipartite closed forms.  `counts` lists the left-vertex total per
// color id; the witness is over the implied instance whose left vertices are
// grouped by color in id order.
SolveResult solve_complete_mov(const std::vector<int>& counts, int k, int ell,
                               bool nonempty);
SolveResult solve_complete_maxmin(const std::vector<int>& counts, int k, int ell,
                                  bool nonempty);

// Instance wrapper for the complete-bipartite solvers; requires a complete
// bipartite graph and size constraints at most nonemptiness.
SolveResult solve_complete(const Instance& inst);

// Partition of 3 * alpha vertices, alpha per color class 0..2, into kappa
// nonempty sets whose top two color counts tie (margin zero).  Entries are
// (color class, copy index in [1, alpha]).  Requires 1 <= kappa and
// 2 * kappa <= 3 * alpha.
std::vector<std::vector<std::pair<int, int>>> kappa_partition(int alpha,
                                                              int kappa);

}  // namespace fairmatch
