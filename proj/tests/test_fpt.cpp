#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "fairmatch/errors.hpp"
#include "fairmatch/fpt.hpp"
#include "fairmatch/gen.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/oracle.hpp"

using namespace fairmatch;

namespace {

Instance random_case(std::uint64_t seed, Measure measure, int size_min,
                     bool with_size_max = false) {
  RandomInstanceSpec spec;
  spec.n = 1 + static_cast<int>(seed % 9);
  spec.k = 1 + static_cast<int>((seed / 9) % 3);
  spec.num_colors = 1 + static_cast<int>((seed / 27) % 4);
  spec.edge_prob = 0.45;
  spec.ell = static_cast<int>((seed / 7) % 3);
  spec.measure = measure;
  spec.size_min = size_min;
  if (with_size_max && seed % 5 == 0) {
    spec.size_max = size_min + static_cast<int>(seed % 4);
  }
  spec.seed = seed;
  return random_instance(spec);
}

void check_against_oracle(const Instance& inst, const SolveResult& got) {
  SolveResult want = brute_force(inst, 50'000'000);
  REQUIRE(got.status != SolveStatus::kUnknown);
  CHECK(got.status == want.status);
  if (got.status == SolveStatus::kYes) {
    REQUIRE(got.matching.has_value());
    CHECK(verify(inst, *got.matching).ok);
  }
}

}  // namespace

TEST_SUITE("fpt") {

TEST_CASE("kc solver agrees with the oracle under arbitrary size bounds") {
  for (int s = 0; s < 150; ++s) {
    Measure measure = s % 2 ? Measure::kMov : Measure::kMaxMin;
    Instance inst = random_case(1000 + s, measure, s % 3 ? 0 : 1, true);
    check_against_oracle(inst, solve_kc(inst));
  }
}

TEST_CASE("maxmin-k solver agrees with the oracle") {
  for (int s = 0; s < 150; ++s) {
    Instance inst = random_case(2000 + s, Measure::kMaxMin, 0);
    check_against_oracle(inst, solve_maxmin_k(inst));
  }
}

TEST_CASE("maxmin-k rejects unsupported size bounds") {
  Instance inst = random_case(42, Measure::kMaxMin, 1);
  CHECK_THROWS_AS(solve_maxmin_k(inst), std::invalid_argument);
}

TEST_CASE("nonempty maxmin solver agrees with the oracle") {
  for (int s = 0; s < 150; ++s) {
    Instance inst = random_case(3000 + s, Measure::kMaxMin, 1);
    check_against_oracle(inst, solve_maxmin_k_nonempty(inst));
  }
}

TEST_CASE("nonempty maxmin solver enforces its k cap") {
  RandomInstanceSpec spec;
  spec.n = 8;
  spec.k = 5;  // above the default guess-enumeration cap
  spec.num_colors = 2;
  spec.ell = 1;  // the zero-threshold path is exact and uncapped
  spec.measure = Measure::kMaxMin;
  spec.size_min = 1;
  spec.seed = 77;
  Instance inst = random_instance(spec);
  CHECK_THROWS_AS(solve_maxmin_k_nonempty(inst), ResourceError);
}

TEST_CASE("randomized margin solver is one-sided and usually completes") {
  int oracle_yes = 0, claimed_yes = 0;
  for (int s = 0; s < 120; ++s) {
    Instance inst = random_case(4000 + s, Measure::kMov, s % 2);
    SolveResult got = solve_mov_k(inst, 0, 555 + s);
    SolveResult want = brute_force(inst, 50'000'000);
    if (want.status == SolveStatus::kYes) ++oracle_yes;
    if (got.status == SolveStatus::kYes) {
      ++claimed_yes;
      CHECK(want.status == SolveStatus::kYes);
      REQUIRE(got.matching.has_value());
      CHECK(verify(inst, *got.matching).ok);
    }
    if (got.status == SolveStatus::kNo) {
      CHECK(want.status == SolveStatus::kNo);
    }
  }
  // The driver must succeed on a solid majority of the true YES cases.
  CHECK(oracle_yes >= 30);
  CHECK(claimed_yes * 10 >= oracle_yes * 8);
}

TEST_CASE("token partitions separate the two slots of each right vertex") {
  CHECK(enumerate_token_partitions(1).size() == 1);
  std::vector<TokenPartition> parts = enumerate_token_partitions(2);
  CHECK(parts.size() == 7);
  std::set<std::vector<int>> distinct;
  for (const TokenPartition& part : parts) {
    REQUIRE(static_cast<int>(part.block_of.size()) == 4);
    for (int v = 0; v < 2; ++v) {
      CHECK(part.block_of[2 * v] != part.block_of[2 * v + 1]);
    }
    distinct.insert(part.block_of);
  }
  CHECK(distinct.size() == parts.size());
}

TEST_CASE("targeted margin solver honours explicit top and runner-up picks") {
  // Four left vertices, one right vertex; counts (2, 1, 1) make color 0 the
  // top and either other color the runner-up.
  Instance inst = make_instance(3, {0, 0, 1, 2}, 1,
                                {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 1,
                                Measure::kMov);
  TargetSpec ok{{0}, {1}};
  SolveResult hit = solve_targeted_mov(inst, ok, false);
  REQUIRE(hit.status == SolveStatus::kYes);
  CHECK(verify(inst, *hit.matching).ok);

  TargetSpec impossible{{1}, {2}};  // color 1 can never beat color 0 here
  CHECK(solve_targeted_mov(inst, impossible, false).status ==
        SolveStatus::kNo);

  TargetSpec malformed{{0}, {0}};
  CHECK_THROWS_AS(solve_targeted_mov(inst, malformed, false),
                  std::invalid_argument);
}

}  // TEST_SUITE
