#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fairmatch/gen.hpp"
#include "fairmatch/io.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/oracle.hpp"

using namespace fairmatch;

namespace {

std::vector<std::array<int, 3>> all_triples(int sx, int sy, int sz) {
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < sx; ++x)
    for (int y = 0; y < sy; ++y)
      for (int z = 0; z < sz; ++z) out.push_back({x, y, z});
  return out;
}

bool occupancy_ok(const ThreeDMInstance& t) {
  try {
    validate(t);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

void check_equivalence(const ThreeDMInstance& t) {
  bool want = has_perfect_3dm(t);
  for (int variant = 0; variant < 2; ++variant) {
    Instance inst = variant ? reduce_3dm_maxmin24(t) : reduce_3dm_maxmin33(t);
    CHECK(validate(inst).errors.empty());
    CHECK(inst.ell == 0);
    CHECK(inst.measure == Measure::kMaxMin);
    CHECK(inst.num_colors == 3);
    SolveResult got = brute_force(inst, 200'000'000);
    CAPTURE(variant);
    CHECK((got.status == SolveStatus::kYes) == want);
    if (got.status == SolveStatus::kYes) {
      CHECK(verify(inst, *got.matching).ok);
    }
  }
}

}  // namespace

TEST_SUITE("gen") {

TEST_CASE("three-dimensional matching validation") {
  ThreeDMInstance t{1, 1, 1, {{0, 0, 0}}};
  REQUIRE_NOTHROW(validate(t));
  CHECK_THROWS_AS(validate(ThreeDMInstance{0, 1, 1, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(ThreeDMInstance{1, 1, 1, {{1, 0, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(ThreeDMInstance{1, 1, 1, {{0, 0, 0}, {0, 0, 0}}}),
                  std::invalid_argument);
  // Four occurrences of the same x element exceed the occupancy bound.
  ThreeDMInstance heavy{1, 2, 2,
                        {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}}};
  CHECK_THROWS_AS(validate(heavy), std::invalid_argument);
}

TEST_CASE("formula validation enforces two positive and two negative uses") {
  CnfInstance good{3,
                   {{1, 2, 3}, {1, -2, -3}, {-1, 2, -3}, {-1, -2, 3}}};
  REQUIRE_NOTHROW(validate(good));
  CHECK(is_satisfiable(good));
  // Variable 3 appears three times positively and once negatively.
  CnfInstance lopsided{3,
                       {{1, 2, 3}, {1, -2, 3}, {-1, 2, 3}, {-1, -2, -3}}};
  CHECK_THROWS_AS(validate(lopsided), std::invalid_argument);
  CnfInstance zero{1, {{0, 1, -1}}};
  CHECK_THROWS_AS(validate(zero), std::invalid_argument);
}

TEST_CASE("matching reductions preserve the decision exhaustively") {
  const int sizes[][3] = {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 2, 1}};
  for (const auto& s : sizes) {
    auto pool = all_triples(s[0], s[1], s[2]);
    int m = static_cast<int>(pool.size());
    for (int mask = 0; mask < 1 << m; ++mask) {
      ThreeDMInstance t{s[0], s[1], s[2], {}};
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1) t.triples.push_back(pool[i]);
      }
      if (!occupancy_ok(t)) continue;
      check_equivalence(t);
    }
  }
}

TEST_CASE("matching reductions preserve the decision on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    check_equivalence(random_3dm(2, 2, 2, seed));
  }
}

TEST_CASE("reduction degree bounds hold") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    ThreeDMInstance t = random_3dm(3, 3, 3, seed);
    Instance a = reduce_3dm_maxmin33(t);
    CHECK(max_left_degree(a) <= 3);
    CHECK(max_right_degree(a) <= 3);
    Instance b = reduce_3dm_maxmin24(t);
    CHECK(max_left_degree(b) <= 2);
    CHECK(max_right_degree(b) <= 4);
    CnfInstance f = random_sat4occ(3 + 3 * (seed % 3), seed);
    Instance c = reduce_sat_mov25(f);
    CHECK(c.measure == Measure::kMov);
    CHECK(c.ell == 0);
    CHECK(max_left_degree(c) <= 2);
    CHECK(max_right_degree(c) <= 5);
  }
}

TEST_CASE("satisfiability reduction preserves the decision") {
  CnfInstance fixture{3,
                      {{1, 2, 3}, {1, -2, -3}, {-1, 2, -3}, {-1, -2, 3}}};
  REQUIRE(is_satisfiable(fixture));
  Instance inst = reduce_sat_mov25(fixture);
  CHECK(validate(inst).errors.empty());
  SolveResult got = brute_force(inst, 2'000'000'000);
  REQUIRE(got.status == SolveStatus::kYes);
  CHECK(verify(inst, *got.matching).ok);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CnfInstance f = random_sat4occ(3, seed);
    bool want = is_satisfiable(f);
    Instance r = reduce_sat_mov25(f);
    SolveResult res = brute_force(r, 2'000'000'000);
    CHECK((res.status == SolveStatus::kYes) == want);
    if (res.status == SolveStatus::kYes) {
      CHECK(verify(r, *res.matching).ok);
    }
  }
}

TEST_CASE("generators are deterministic in the seed") {
  RandomInstanceSpec spec;
  spec.n = 12;
  spec.k = 4;
  spec.num_colors = 3;
  spec.edge_prob = 0.4;
  spec.ell = 1;
  spec.seed = 99;
  Instance a = random_instance(spec);
  Instance b = random_instance(spec);
  CHECK(instance_to_json(a) == instance_to_json(b));
  spec.seed = 100;
  CHECK(instance_to_json(a) != instance_to_json(random_instance(spec)));

  ThreeDMInstance t1 = random_3dm(3, 2, 4, 7);
  ThreeDMInstance t2 = random_3dm(3, 2, 4, 7);
  CHECK(t1.triples == t2.triples);

  CnfInstance f1 = random_sat4occ(6, 5);
  CnfInstance f2 = random_sat4occ(6, 5);
  CHECK(f1.clauses == f2.clauses);
  REQUIRE_NOTHROW(validate(f1));
}

TEST_CASE("random instance generator respects its specification") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomInstanceSpec spec;
    spec.n = 1 + static_cast<int>(seed % 9);
    spec.k = 1 + static_cast<int>(seed % 3);
    spec.num_colors = 1 + static_cast<int>(seed % 4);
    spec.edge_prob = 0.1 * static_cast<double>(seed % 11);
    spec.max_left_degree = seed % 2 ? std::optional<int>(2) : std::nullopt;
    spec.max_right_degree =
        seed % 3 ? std::optional<int>(4) : std::nullopt;
    if (spec.max_right_degree && spec.k * 4 < spec.n) spec.n = spec.k * 4;
    spec.seed = seed;
    Instance inst = random_instance(spec);
    CHECK(validate(inst).errors.empty());
    std::vector<int> du(inst.n(), 0), dv(inst.k, 0);
    for (const auto& [u, v] : inst.edges) {
      du[u]++;
      dv[v]++;
    }
    for (int d : du) {
      CHECK(d >= 1);
      if (spec.max_left_degree) CHECK(d <= *spec.max_left_degree);
    }
    if (spec.max_right_degree) {
      for (int d : dv) CHECK(d <= *spec.max_right_degree);
    }
    CHECK(std::is_sorted(inst.edges.begin(), inst.edges.end()));
  }
  RandomInstanceSpec bad;
  bad.n = 10;
  bad.k = 2;
  bad.max_right_degree = 3;
  CHECK_THROWS_AS(random_instance(bad), std::invalid_argument);
}

TEST_CASE("random formula generator rejects bad sizes") {
  CHECK_THROWS_AS(random_sat4occ(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_sat4occ(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_3dm(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("empty triple set reduces to a padded instance") {
  ThreeDMInstance t{1, 1, 1, {}};
  Instance inst = reduce_3dm_maxmin33(t);
  CHECK(validate(inst).errors.empty());
  CHECK(inst.k == 1);
  CHECK(brute_force(inst, 1'000'000).status == SolveStatus::kNo);
}

}  // TEST_SUITE
