#pragma once

#include <cstdint>
#include <string>

#include "fairmatch/fpt.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/result.hpp"

namespace fairmatch {

// Which solver the dispatcher would run, and the structural feature that
// triggered it.
struct RouteDecision {
  std::string solver;
  std::string reason;
};

// Structural dispatch in priority order: complete bipartite closed form,
// two-color gadget solver, low-degree polynomial cases, forced assignments,
// parameterized solvers, then the exact parameterized fallback and the
// oracle.  The chosen solver's preconditions hold for the instance.
RouteDecision route(const Instance& inst, const SolveConfig& cfg = {});

struct RunOptions {
  long long rounds = 0;  // randomized margin rounds; <= 0 picks the default
  std::uint64_t seed = 0;
  long long oracle_budget = 50'000'000;
  SolveConfig config;
};

// Runs a single solver by id: kc, maxmin-k, maxmin-k-nonempty, mov-k,
// two-colors, mov-deg4, maxmin-lowdeg, complete, forced, oracle, dp, or
// auto (= dispatch).  Throws std::invalid_argument for unknown ids or when
// the solver rejects the instance.
SolveResult run_algo(const Instance& inst, const std::string& algo,
                     const RunOptions& opts = {});

// Routed solve with resource fallbacks: starts at route(inst) and walks
// down the priority chain whenever a stage runs out of budget or the
// randomized driver stays unknown.  Returns kUnknown only when every stage
// ran out of resources.
SolveResult dispatch(const Instance& inst, const RunOptions& opts = {});

}  // namespace fairmatch
