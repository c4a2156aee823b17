#pragma once

#include <cstdint>
#include <vector>

#include "fairmatch/ilp.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/result.hpp"

namespace fairmatch {

struct SolveConfig {
  IlpLimits ilp;
  // Guess enumeration for the nonempty max-min path explodes doubly
  // exponentially in k; reject above this cap.
  int nonempty_k_cap = 3;
  // Token-partition enumeration for the randomized margin solver.
  int mov_k_cap = 3;
  // Upper bound applied to the default random-round count.
  long long rounds_cap = 20'000;
};

// Parameter (number of right vertices) + (number of colors): one count
// variable per right vertex and color, margin indicators when needed.
// Handles arbitrary size bounds.  Answer is exact.
IlpModel build_kc_model(const Instance& inst);
SolveResult solve_kc(const Instance& inst, const SolveConfig& cfg = {});

// Parameter k alone, max-min measure, no size bounds: per right vertex a
// lower and an upper bound on every per-color count.  Exact.
IlpModel build_maxmin_k_model(const Instance& inst);
SolveResult solve_maxmin_k(const Instance& inst, const SolveConfig& cfg = {});

// Max-min with the nonempty requirement (size_min = 1, no size_max).  Exact;
// the positive-threshold branch enumerates witness-neighborhood guesses.
SolveResult solve_maxmin_k_nonempty(const Instance& inst,
                                    const SolveConfig& cfg = {});

// Requested most and second-most frequent color per right vertex.
struct TargetSpec {
  std::vector<int> mu1, mu2;  // size k each; mu1[v] != mu2[v]
};

// Decides whether a fair matching exists whose per-vertex top/second colors
// are exactly the targets; exact for that restricted question.
IlpModel build_targeted_mov_model(const Instance& inst, const TargetSpec& targets,
                                  bool nonempty);
SolveResult solve_targeted_mov(const Instance& inst, const TargetSpec& targets,
                               bool nonempty, const SolveConfig& cfg = {});

// A partition of the 2k top/second slots of the right vertices.  Slot 2v is
// the top slot of right vertex v and slot 2v+1 its runner-up slot; no block
// may contain both slots of one vertex.
struct TokenPartition {
  std::vector<int> block_of;  // size 2k
  int num_blocks = 0;
};

std::vector<TokenPartition> enumerate_token_partitions(int k);

// Randomized driver for the margin measure with parameter k.  Enumerates
// token partitions; per partition draws `rounds` random color-to-block maps,
// derives a TargetSpec from each and calls the targeted solver.  YES answers
// carry a verified matching.  Exhausting the rounds yields kUnknown, never a
// claimed NO; single-color instances are decided exactly.  rounds <= 0 picks
// the default round count (capped by cfg.rounds_cap).
SolveResult solve_mov_k(const Instance& inst, long long rounds, uint64_t seed,
                        const SolveConfig& cfg = {});

}  // namespace fairmatch
