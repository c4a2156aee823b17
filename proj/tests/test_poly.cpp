#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "fairmatch/gen.hpp"
#include "fairmatch/general_factor.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/oracle.hpp"
#include "fairmatch/poly.hpp"

using namespace fairmatch;

namespace {

void check_against_oracle(const Instance& inst, const SolveResult& got) {
  SolveResult want = brute_force(inst, 50'000'000);
  REQUIRE(got.status != SolveStatus::kUnknown);
  CHECK(got.status == want.status);
  if (got.status == SolveStatus::kYes) {
    REQUIRE(got.matching.has_value());
    CHECK(verify(inst, *got.matching).ok);
  }
}

Instance random_with(std::uint64_t seed, Measure measure, int colors,
                     int size_min, std::optional<int> left_cap,
                     std::optional<int> right_cap) {
  RandomInstanceSpec spec;
  spec.k = 1 + static_cast<int>(seed % 3);
  int ceiling = right_cap ? *right_cap * spec.k : 10;
  spec.n = 1 + static_cast<int>((seed / 3) % std::min(10, ceiling));
  spec.num_colors = colors;
  spec.edge_prob = 0.45;
  spec.max_left_degree = left_cap;
  spec.max_right_degree = right_cap;
  spec.ell = static_cast<int>((seed / 7) % 3);
  spec.measure = measure;
  spec.size_min = size_min;
  spec.seed = seed;
  return random_instance(spec);
}

// All count vectors of the given length summing to at most `max_total`.
void enumerate_counts(int colors, int max_total, CountVector& current,
                      std::vector<CountVector>& out) {
  if (static_cast<int>(current.size()) == colors) {
    out.push_back(current);
    return;
  }
  for (int c = 0; c <= max_total; ++c) {
    current.push_back(c);
    enumerate_counts(colors, max_total - c, current, out);
    current.pop_back();
  }
}

Instance implied_complete(const CountVector& counts, int k, int ell,
                          Measure measure, bool nonempty) {
  std::vector<int> colors;
  for (int c = 0; c < static_cast<int>(counts.size()); ++c) {
    colors.insert(colors.end(), counts[c], c);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < static_cast<int>(colors.size()); ++u) {
    for (int v = 0; v < k; ++v) edges.emplace_back(u, v);
  }
  return make_instance(static_cast<int>(counts.size()), std::move(colors), k,
                       std::move(edges), ell, measure, nonempty ? 1 : 0);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("two-color share condition") {
  CHECK(two_color_share_ok(2, 2, 3, 0));
  CHECK(!two_color_share_ok(3, 1, 3, 1));
  CHECK(two_color_share_ok(3, 1, 3, 2));
  CHECK(!two_color_share_ok(1, 1, 3, 2));
  CHECK(two_color_share_ok(0, 0, 0, 0));
  CHECK(!two_color_share_ok(-1, 1, 0, 5));
}

TEST_CASE("representation vectors exist exactly under the share condition") {
  for (int p = 0; p <= 4; ++p) {
    for (int ell = 0; ell <= 4; ++ell) {
      for (int m1 = 0; m1 <= 8; ++m1) {
        for (int m2 = 0; m1 + m2 <= 8; ++m2) {
          bool want = m1 + m2 >= p && std::abs(m1 - m2) <= ell;
          CHECK(representation_vector_exists(m1, m2, p, ell) == want);
        }
      }
    }
  }
}

TEST_CASE("two-color solver agrees with the oracle across size minima") {
  for (int s = 0; s < 200; ++s) {
    Instance inst = random_with(6000 + s, s % 2 ? Measure::kMov : Measure::kMaxMin,
                                2, s % 4, {}, {});
    check_against_oracle(inst, solve_two_colors(inst));
  }
}

TEST_CASE("two-color solver rejects other shapes") {
  Instance three = random_with(1, Measure::kMaxMin, 3, 0, {}, {});
  CHECK_THROWS_AS(solve_two_colors(three), std::invalid_argument);
  Instance capped = random_with(2, Measure::kMaxMin, 2, 0, {}, {});
  capped.size_max = 2;
  capped.finalize();
  CHECK_THROWS_AS(solve_two_colors(capped), std::invalid_argument);
}

TEST_CASE("margin gadget accepts exactly the fair neighbor subsets") {
  // Every neighbor-color multiset of degree 1..4 over three colors.
  for (int deg = 1; deg <= 4; ++deg) {
    std::set<std::vector<int>> multisets;
    for (int code = 0; code < 1 << (2 * deg); ++code) {
      std::vector<int> colors;
      for (int i = 0; i < deg; ++i) colors.push_back((code >> (2 * i)) & 3);
      if (std::count(colors.begin(), colors.end(), 3)) continue;
      std::sort(colors.begin(), colors.end());
      multisets.insert(colors);
    }
    for (const std::vector<int>& colors : multisets) {
      for (int ell = 0; ell <= 2; ++ell) {
        for (bool nonempty : {false, true}) {
          GeneralFactorInstance base =
              build_mov_deg4_gadget(colors, ell, nonempty);
          for (int subset = 0; subset < 1 << deg; ++subset) {
            GeneralFactorInstance gf = base;
            CountVector counts(3, 0);
            for (int i = 0; i < deg; ++i) {
              gf.allowed[i] = subset >> i & 1 ? 1u << 1 : 1u;
              if (subset >> i & 1) counts[colors[i]]++;
            }
            bool fair = mov_value(counts) <= ell && (!nonempty || subset);
            CAPTURE(deg);
            CAPTURE(ell);
            CAPTURE(nonempty);
            CAPTURE(subset);
            CHECK(solve_general_factor_exact(gf).has_value() == fair);
          }
        }
      }
    }
  }
}

TEST_CASE("margin low-degree solver agrees with the oracle") {
  for (int s = 0; s < 200; ++s) {
    Instance inst = random_with(7000 + s, Measure::kMov, 1 + s % 4, s % 2,
                                {}, 4);
    check_against_oracle(inst, solve_mov_deg4(inst));
  }
}

TEST_CASE("margin low-degree solver rejects high right degree") {
  RandomInstanceSpec spec;
  spec.n = 10;
  spec.k = 1;
  spec.num_colors = 2;
  spec.edge_prob = 1.0;
  spec.measure = Measure::kMov;
  spec.seed = 3;
  Instance inst = random_instance(spec);
  CHECK_THROWS_AS(solve_mov_deg4(inst), std::invalid_argument);
}

TEST_CASE("max-min low-degree solver agrees with the oracle") {
  for (int s = 0; s < 150; ++s) {
    Instance two = random_with(8000 + s, Measure::kMaxMin, 1 + s % 4, s % 2,
                               {}, 2);
    check_against_oracle(two, solve_maxmin_lowdeg(two));
  }
  for (int s = 0; s < 150; ++s) {
    Instance tight = random_with(9000 + s, Measure::kMaxMin, 1 + s % 4, s % 2,
                                 2, 3);
    check_against_oracle(tight, solve_maxmin_lowdeg(tight));
  }
}

TEST_CASE("forced assignment solver handles degree-one left sides") {
  for (int s = 0; s < 100; ++s) {
    Instance inst = random_with(10000 + s,
                                s % 2 ? Measure::kMov : Measure::kMaxMin,
                                1 + s % 3, s % 3, 1, {});
    check_against_oracle(inst, solve_forced_assignment(inst));
  }
}

TEST_CASE("complete-bipartite formulas match the oracle exhaustively") {
  std::vector<CountVector> all_counts;
  CountVector current;
  enumerate_counts(3, 5, current, all_counts);
  for (const CountVector& counts : all_counts) {
    int total = 0;
    for (int c : counts) total += c;
    for (int k = 1; k <= 3; ++k) {
      for (int ell = 0; ell <= 2; ++ell) {
        for (Measure measure : {Measure::kMov, Measure::kMaxMin}) {
          for (bool nonempty : {false, true}) {
            SolveResult got =
                measure == Measure::kMov
                    ? solve_complete_mov(counts, k, ell, nonempty)
                    : solve_complete_maxmin(counts, k, ell, nonempty);
            if (total == 0) {
              CHECK((got.status == SolveStatus::kYes) == !nonempty);
              continue;
            }
            Instance inst =
                implied_complete(counts, k, ell, measure, nonempty);
            check_against_oracle(inst, got);
            SolveResult routed = solve_complete(inst);
            CHECK(routed.status == got.status);
          }
        }
      }
    }
  }
}

TEST_CASE("kappa partition covers every copy with fair blocks") {
  for (int alpha = 1; alpha <= 6; ++alpha) {
    for (int kappa = 1; 2 * kappa <= 3 * alpha; ++kappa) {
      auto blocks = kappa_partition(alpha, kappa);
      CHECK(static_cast<int>(blocks.size()) == kappa);
      std::set<std::pair<int, int>> seen;
      for (const auto& block : blocks) {
        REQUIRE(!block.empty());
        CountVector per_class(3, 0);
        for (const auto& [cls, copy] : block) {
          REQUIRE(cls >= 0);
          REQUIRE(cls < 3);
          REQUIRE(copy >= 1);
          REQUIRE(copy <= alpha);
          per_class[cls]++;
          CHECK(seen.insert({cls, copy}).second);
        }
        CHECK(mov_value(per_class) == 0);
      }
      CHECK(seen.size() == static_cast<std::size_t>(3 * alpha));
    }
  }
  CHECK_THROWS_AS(kappa_partition(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(kappa_partition(2, 4), std::invalid_argument);
}

}  // TEST_SUITE
