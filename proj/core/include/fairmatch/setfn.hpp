#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "fairmatch/model.hpp"

namespace fairmatch {

// A set function on a ground set of size `ground_size` (at most 24), stored
// as one value per subset bitmask.
struct SetFunctionTable {
  int ground_size = 0;
  std::vector<long long> values;  // size 1 << ground_size

  long long at(uint32_t mask) const { return values[mask]; }
};

SetFunctionTable make_table(int ground_size, std::vector<long long> values);

// Number of color-c left vertices whose whole neighborhood lies inside the
// right-vertex subset `mask`.  Degree-0 vertices are counted for every mask.
int confined_count(const Instance& inst, int color, uint32_t mask);

// Number of color-c left vertices with at least one neighbor inside `mask`.
int reachable_count(const Instance& inst, int color, uint32_t mask);

// Tables of the two counts over all subsets of right vertices (k <= 24).
SetFunctionTable confined_table(const Instance& inst, int color);
SetFunctionTable reachable_table(const Instance& inst, int color);

// f is modular iff f(X) = f(empty) + sum over x in X of (f({x}) - f(empty)).
bool check_modular(const SetFunctionTable& f);

// Pairwise local test, equivalent to f(X)+f(Y) <= f(X|Y)+f(X&Y) for all X, Y.
bool check_supermodular(const SetFunctionTable& f);

// h(X) = max over T subset of X of g(T) + f(X \ T).
SetFunctionTable sup_convolution(const SetFunctionTable& g, const SetFunctionTable& f);

struct SeparatorPreconditionFailure {
  enum class Kind {
    kNotModularF,
    kNotModularFPrime,
    kNotSupermodularG,
    kNonzeroAtEmpty,
    kNotDominated,  // max(f, g) > f' somewhere
  };
  Kind kind;
  uint32_t witness_mask = 0;
};

// A modular separator returned as its singleton values; h(X) is their sum.
struct ModularSeparator {
  std::vector<long long> singleton;  // size = ground_size

  long long at(uint32_t mask) const {
    long long s = 0;
    for (size_t i = 0; i < singleton.size(); ++i) {
      if (mask >> i & 1) s += singleton[i];
    }
    return s;
  }
};

// Given modular f, f' and supermodular g, all 0 at the empty set, with
// max(f, g) <= f' pointwise, finds a modular h with max(f, g) <= h <= f'
// everywhere and h(S) = max over T of f(T) + g(S \ T) on the full set.
// Ground sets above 8 elements are rejected with std::invalid_argument.
std::variant<ModularSeparator, SeparatorPreconditionFailure>
find_touching_separator(const SetFunctionTable& f, const SetFunctionTable& f_prime,
                        const SetFunctionTable& g);

}  // namespace fairmatch
