#include "fairmatch/route.hpp"

#include <stdexcept>
#include <vector>

#include "fairmatch/errors.hpp"
#include "fairmatch/oracle.hpp"
#include "fairmatch/poly.hpp"

namespace fairmatch {

namespace {

bool easy_sizes(const Instance& inst) {
  return inst.size_min <= 1 && !inst.size_max;
}

// Applicable solver ids in priority order; always ends with the oracle.
std::vector<RouteDecision> candidates(const Instance& inst,
                                      const SolveConfig& cfg) {
  std::vector<RouteDecision> out;
  const int du = max_left_degree(inst);
  const int dv = max_right_degree(inst);
  if (easy_sizes(inst) && is_complete_bipartite(inst)) {
    out.push_back({"complete", "complete bipartite closed form"});
  }
  if (inst.num_colors == 2 && !inst.size_max) {
    out.push_back({"two-colors", "two colors reduce to a saturating matching"});
  }
  if (easy_sizes(inst) && inst.measure == Measure::kMov && dv <= 4) {
    out.push_back({"mov-deg4", "margin measure with right degrees at most 4"});
  }
  if (easy_sizes(inst) && inst.measure == Measure::kMaxMin &&
      (dv <= 2 || (du <= 2 && dv <= 3))) {
    out.push_back({"maxmin-lowdeg", "max-min measure in the low-degree regime"});
  }
  if (du <= 1) {
    out.push_back({"forced", "left degrees at most 1 force every assignment"});
  }
  if (inst.measure == Measure::kMaxMin && !inst.size_max) {
    if (inst.size_min == 0) {
      out.push_back({"maxmin-k", "exact solver parameterized by the right side"});
    } else if (inst.size_min == 1 && inst.k <= cfg.nonempty_k_cap) {
      out.push_back({"maxmin-k-nonempty",
                     "nonempty max-min solver parameterized by the right side"});
    }
  }
  if (easy_sizes(inst) && inst.measure == Measure::kMov &&
      inst.k <= cfg.mov_k_cap) {
    out.push_back({"mov-k", "randomized margin solver parameterized by the right side"});
  }
  out.push_back({"kc", "exact solver parameterized by right side plus colors"});
  out.push_back({"oracle", "exhaustive search"});
  return out;
}

}  // namespace

RouteDecision route(const Instance& inst, const SolveConfig& cfg) {
  return candidates(inst, cfg).front();
}

SolveResult run_algo(const Instance& inst, const std::string& algo,
                     const RunOptions& opts) {
  if (algo == "auto") return dispatch(inst, opts);
  if (algo == "kc") return solve_kc(inst, opts.config);
  if (algo == "maxmin-k") return solve_maxmin_k(inst, opts.config);
  if (algo == "maxmin-k-nonempty") {
    return solve_maxmin_k_nonempty(inst, opts.config);
  }
  if (algo == "mov-k") {
    return solve_mov_k(inst, opts.rounds, opts.seed, opts.config);
  }
  if (algo == "two-colors") return solve_two_colors(inst);
  if (algo == "mov-deg4") return solve_mov_deg4(inst);
  if (algo == "maxmin-lowdeg") return solve_maxmin_lowdeg(inst);
  if (algo == "complete") return solve_complete(inst);
  if (algo == "forced") return solve_forced_assignment(inst);
  if (algo == "oracle") return brute_force(inst, opts.oracle_budget);
  if (algo == "dp") return subset_dp(inst);
  if (algo == "targeted-mov") {
    throw std::invalid_argument("targeted-mov needs explicit targets");
  }
  throw std::invalid_argument("unknown algorithm id: " + algo);
}

SolveResult dispatch(const Instance& inst, const RunOptions& opts) {
  for (const auto& cand : candidates(inst, opts.config)) {
    try {
      SolveResult result = run_algo(inst, cand.solver, opts);
      if (result.status == SolveStatus::kUnknown) continue;
      return result;
    } catch (const ResourceError&) {
      continue;
    }
  }
  // Decision-only rescue when even the oracle budget blew on a small
  // instance.
  if (inst.n() <= 15) {
    try {
      return subset_dp(inst);
    } catch (const ResourceError&) {
    }
  }
  return SolveResult::unknown();
}

}  // namespace fairmatch
