#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fairmatch/gen.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/setfn.hpp"

using namespace fairmatch;

namespace {

Instance random_small(int k, std::uint64_t seed, int colors = 2) {
  RandomInstanceSpec spec;
  spec.n = 2 + static_cast<int>(seed % 7);
  spec.k = k;
  spec.num_colors = colors;
  spec.edge_prob = 0.4;
  spec.measure = Measure::kMaxMin;
  spec.seed = seed;
  return random_instance(spec);
}

SetFunctionTable modular_from(const std::vector<long long>& singletons) {
  int k = static_cast<int>(singletons.size());
  std::vector<long long> values(std::size_t{1} << k, 0);
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
    for (int v = 0; v < k; ++v) {
      if (mask >> v & 1) values[mask] += singletons[v];
    }
  }
  return make_table(k, std::move(values));
}

}  // namespace

TEST_SUITE("setfn") {

TEST_CASE("confined and reachable counts on a hand instance") {
  // u0 (color 0) sees v0; u1 (color 0) sees v0 and v1; u2 (color 1) sees v1.
  Instance inst = make_instance(2, {0, 0, 1}, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}},
                                0, Measure::kMaxMin);
  CHECK(confined_count(inst, 0, 0b01) == 1);   // only u0 is confined to {v0}
  CHECK(reachable_count(inst, 0, 0b01) == 2);  // u0 and u1 reach v0
  CHECK(confined_count(inst, 0, 0b11) == 2);
  CHECK(confined_count(inst, 1, 0b10) == 1);
  CHECK(confined_count(inst, 1, 0b01) == 0);
  CHECK(reachable_count(inst, 0, 0) == 0);
}

TEST_CASE("confined never exceeds reachable and both are monotone") {
  for (int s = 0; s < 30; ++s) {
    Instance inst = random_small(4, 100 + s);
    for (int c = 0; c < inst.num_colors; ++c) {
      SetFunctionTable nu = confined_table(inst, c);
      SetFunctionTable re = reachable_table(inst, c);
      for (std::uint32_t mask = 0; mask < (1u << inst.k); ++mask) {
        CHECK(nu.at(mask) <= re.at(mask));
        for (int v = 0; v < inst.k; ++v) {
          std::uint32_t bigger = mask | (1u << v);
          CHECK(nu.at(mask) <= nu.at(bigger));
          CHECK(re.at(mask) <= re.at(bigger));
        }
      }
    }
  }
}

TEST_CASE("confined tables are supermodular") {
  for (int s = 0; s < 40; ++s) {
    Instance inst = random_small(5, 200 + s, 3);
    for (int c = 0; c < inst.num_colors; ++c) {
      CHECK(check_supermodular(confined_table(inst, c)));
    }
  }
}

TEST_CASE("modularity checks") {
  CHECK(check_modular(modular_from({2, 0, 5})));
  SetFunctionTable not_modular =
      make_table(2, {0, 1, 1, 3});  // pair exceeds the singleton sum
  CHECK(!check_modular(not_modular));
  CHECK(check_supermodular(not_modular));
}

TEST_CASE("sup convolution on a tiny pair") {
  SetFunctionTable f = modular_from({1, 2});
  SetFunctionTable g = make_table(2, {0, 0, 0, 4});
  SetFunctionTable h = sup_convolution(g, f);
  CHECK(h.at(0b00) == 0);
  CHECK(h.at(0b01) == 1);
  CHECK(h.at(0b10) == 2);
  CHECK(h.at(0b11) == 4);  // g on the full pair beats f's 3
}

TEST_CASE("touching separator satisfies all postconditions") {
  int done = 0;
  for (int s = 0; done < 60; ++s) {
    Instance inst = random_small(4, 300 + s);
    SetFunctionTable g = confined_table(inst, s % inst.num_colors);
    std::vector<long long> base(inst.k);
    for (int v = 0; v < inst.k; ++v) base[v] = (s + v) % 3;
    SetFunctionTable f = modular_from(base);
    std::vector<long long> roof = base;
    for (auto& value : roof) value += inst.n();
    SetFunctionTable f_prime = modular_from(roof);

    auto result = find_touching_separator(f, f_prime, g);
    auto* sep = std::get_if<ModularSeparator>(&result);
    REQUIRE(sep != nullptr);
    std::uint32_t full = (1u << inst.k) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      CHECK(sep->at(mask) >= f.at(mask));
      CHECK(sep->at(mask) >= g.at(mask));
      CHECK(sep->at(mask) <= f_prime.at(mask));
    }
    CHECK(sep->at(full) == sup_convolution(g, f).at(full));
    ++done;
  }
}

TEST_CASE("separator rejects broken preconditions") {
  SetFunctionTable f = modular_from({1, 1});
  SetFunctionTable f_prime = modular_from({5, 5});
  SetFunctionTable g = make_table(2, {0, 0, 0, 3});

  auto not_modular = find_touching_separator(
      make_table(2, {0, 1, 1, 3}), f_prime, g);
  auto* fail = std::get_if<SeparatorPreconditionFailure>(&not_modular);
  REQUIRE(fail != nullptr);
  CHECK(fail->kind == SeparatorPreconditionFailure::Kind::kNotModularF);

  auto nonzero = find_touching_separator(f, f_prime,
                                         make_table(2, {1, 1, 1, 3}));
  fail = std::get_if<SeparatorPreconditionFailure>(&nonzero);
  REQUIRE(fail != nullptr);
  CHECK(fail->kind == SeparatorPreconditionFailure::Kind::kNonzeroAtEmpty);

  auto dominated = find_touching_separator(f, modular_from({1, 1}),
                                           make_table(2, {0, 0, 0, 9}));
  fail = std::get_if<SeparatorPreconditionFailure>(&dominated);
  REQUIRE(fail != nullptr);
  CHECK(fail->kind == SeparatorPreconditionFailure::Kind::kNotDominated);
}

}  // TEST_SUITE
