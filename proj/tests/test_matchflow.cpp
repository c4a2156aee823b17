#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fairmatch/errors.hpp"
#include "fairmatch/gen.hpp"
#include "fairmatch/general_factor.hpp"
#include "fairmatch/matchflow.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/setfn.hpp"

using namespace fairmatch;

namespace {

int matched_count(const std::vector<int>& mate) {
  int count = 0;
  for (int m : mate) count += m >= 0;
  return count;
}

// Exhaustive Hall-style check: every right subset W must be able to absorb
// the left vertices confined to it.
bool exact_targets_feasible(const Instance& inst,
                            const std::vector<int>& targets) {
  for (std::uint32_t mask = 0; mask < (1u << inst.k); ++mask) {
    long long capacity = 0;
    for (int v = 0; v < inst.k; ++v) {
      if (mask >> v & 1) capacity += targets[v];
    }
    if (confined_count(inst, 0, mask) > capacity) return false;
  }
  return true;
}

BipGraph to_bip(const Instance& inst) {
  return BipGraph{inst.n(), inst.k, inst.left_adj};
}

}  // namespace

TEST_SUITE("matchflow") {

TEST_CASE("maximum bipartite matching finds a perfect matching") {
  BipGraph g{3, 3, {{0, 1}, {0}, {1, 2}}};
  std::vector<int> mate = max_bipartite_matching(g);
  CHECK(matched_count(mate) == 3);
}

TEST_CASE("maximum bipartite matching reports deficiency") {
  BipGraph g{3, 2, {{0}, {0}, {0, 1}}};
  CHECK(matched_count(max_bipartite_matching(g)) == 2);
}

TEST_CASE("construct_exact rejects target sums that disagree") {
  BipGraph g{2, 1, {{0}, {0}}};
  CHECK_THROWS_AS(construct_exact(g, {1}), std::invalid_argument);
}

TEST_CASE("construct_exact matches the Hall-style condition exactly") {
  int feasible = 0;
  for (int s = 0; s < 120; ++s) {
    RandomInstanceSpec spec;
    spec.n = 2 + s % 8;
    spec.k = 1 + s % 4;
    spec.num_colors = 1;
    spec.edge_prob = 0.35;
    spec.measure = Measure::kMaxMin;
    spec.seed = 9000 + s;
    Instance inst = random_instance(spec);

    std::vector<int> targets(inst.k, 0);
    std::uint64_t salt = 0x9e3779b97f4a7c15ull * (s + 1);
    int rest = inst.n();
    for (int v = 0; v + 1 < inst.k; ++v) {
      targets[v] = static_cast<int>((salt >> (7 * v)) % (rest + 1));
      rest -= targets[v];
    }
    targets[inst.k - 1] = rest;

    auto assignment = construct_exact(to_bip(inst), targets);
    CHECK(assignment.has_value() == exact_targets_feasible(inst, targets));
    if (assignment) {
      ++feasible;
      std::vector<int> got(inst.k, 0);
      for (int u = 0; u < inst.n(); ++u) {
        REQUIRE(assignment->at(u) >= 0);
        CHECK(std::count(inst.left_adj[u].begin(), inst.left_adj[u].end(),
                         assignment->at(u)) == 1);
        got[assignment->at(u)]++;
      }
      CHECK(got == targets);
    }
  }
  CHECK(feasible > 10);  // the sample must exercise both outcomes
}

TEST_CASE("construct_bounded honours both bounds") {
  BipGraph g{4, 2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}};
  auto assignment = construct_bounded(g, {2, 2}, {2, 2});
  REQUIRE(assignment.has_value());
  int first = static_cast<int>(std::count(assignment->begin(),
                                          assignment->end(), 0));
  CHECK(first == 2);
  CHECK(!construct_bounded(g, {3, 3}, {4, 4}));
  CHECK(!construct_bounded(g, {0, 0}, {1, 1}));
}

TEST_CASE("construct_capped fills below the caps") {
  BipGraph g{3, 2, {{0}, {0, 1}, {1}}};
  auto assignment = construct_capped(g, {1, 2});
  REQUIRE(assignment.has_value());
  CHECK(!construct_capped(g, {0, 1}));
}

TEST_CASE("general matching handles odd cycles") {
  // Triangle: only one edge fits.
  GeneralGraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(matched_count(general_max_matching(triangle)) == 2);

  // Five-cycle with a stem needs blossom contraction to match 3 pairs.
  GeneralGraph flower{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}}};
  CHECK(matched_count(general_max_matching(flower)) == 6);
}

TEST_CASE("saturating matching covers exactly the required set") {
  GeneralGraph g{4, {{0, 1}, {1, 2}, {2, 3}}};
  auto mate = saturating_matching(g, {true, false, false, true});
  REQUIRE(mate.has_value());
  CHECK((*mate)[0] >= 0);
  CHECK((*mate)[3] >= 0);

  // Both endpoints of a single edge plus a third required vertex cannot all
  // be saturated.
  GeneralGraph star{3, {{0, 1}, {0, 2}}};
  CHECK(!saturating_matching(star, {true, true, true}));
}

TEST_CASE("general factor solves degree-list constraints") {
  // Path a-b-c where b must have degree 2 and the ends degree 1.
  GeneralFactorInstance gf;
  gf.n = 3;
  gf.edges = {{0, 1}, {1, 2}};
  gf.allowed = {1u << 1, 1u << 2, 1u << 1};
  auto picked = solve_general_factor_exact(gf);
  REQUIRE(picked.has_value());
  CHECK((*picked)[0] == 1);
  CHECK((*picked)[1] == 1);

  gf.allowed[1] = 1u << 0;  // middle vertex now forbids any edge
  CHECK(!solve_general_factor_exact(gf));
}

TEST_CASE("general factor respects the node budget") {
  GeneralFactorInstance gf;
  gf.n = 12;
  for (int i = 0; i < 12; ++i) {
    for (int j = i + 1; j < 12; ++j) gf.edges.push_back({i, j});
  }
  gf.allowed.assign(12, (1u << 5) | (1u << 6));
  CHECK_THROWS_AS(solve_general_factor_exact(gf, 5), ResourceError);
}

}  // TEST_SUITE
