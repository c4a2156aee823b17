#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fairmatch {

// Degree-list factor problem: pick a subgraph such that every vertex degree
// lands in its allowed set (a bitmask over degrees 0..31).
struct GeneralFactorInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<uint32_t> allowed;
};

// True if the allowed set has no gap of length 2 or more between consecutive
// members (the shape the degree-gadget constructions produce).
bool has_small_gaps(uint32_t allowed);

// Exact component-wise backtracking search.  Returns the chosen edge subset
// as a 0/1 vector, or std::nullopt when no factor exists.  Throws
// ResourceError past `node_budget` search nodes.
std::optional<std::vector<char>> solve_general_factor_exact(
    const GeneralFactorInstance& gf, long long node_budget = 50'000'000);

}  // namespace fairmatch
