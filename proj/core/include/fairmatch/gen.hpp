#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairmatch/model.hpp"

namespace fairmatch {

// Three-dimensional matching instance over ground sets X, Y, Z.  Triples are
// (x, y, z) index tuples; every element may occur in at most three triples.
struct ThreeDMInstance {
  int size_x = 0;
  int size_y = 0;
  int size_z = 0;
  std::vector<std::array<int, 3>> triples;
};

// Throws std::invalid_argument unless the ground sets are nonempty, all
// triple entries are in range, triples are distinct, and every element
// occurs in at most three triples.
void validate(const ThreeDMInstance& t);

// Decides whether some subset of the triples covers every element of
// X, Y, Z exactly once.
bool has_perfect_3dm(const ThreeDMInstance& t);

// CNF formula with exactly three literals per clause.  Literal encoding is
// sign * (variable index + 1); every variable must occur in exactly two
// clauses positively and exactly two clauses negatively.
struct CnfInstance {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Throws std::invalid_argument unless every literal is in range and every
// variable has exactly two positive and two negative occurrences.
void validate(const CnfInstance& c);

// Decides satisfiability by enumerating assignments.
bool is_satisfiable(const CnfInstance& c);

// Random fair-matching instance.  Degree caps are enforced during edge
// sampling; every left vertex receives at least one edge.
struct RandomInstanceSpec {
  int n = 1;
  int k = 1;
  int num_colors = 1;
  double edge_prob = 0.5;
  std::optional<int> max_left_degree;
  std::optional<int> max_right_degree;
  int ell = 0;
  Measure measure = Measure::kMaxMin;
  int size_min = 0;
  std::optional<int> size_max;
  std::uint64_t seed = 0;
};

// Deterministic for a fixed spec.  Throws std::invalid_argument on empty
// dimensions, out-of-range probabilities, or degree caps that cannot give
// every left vertex an edge.
Instance random_instance(const RandomInstanceSpec& spec);

// Deterministic random 3DM instance with the stated ground set sizes and a
// seed-chosen number of triples.  Throws std::invalid_argument on empty
// ground sets.
ThreeDMInstance random_3dm(int size_x, int size_y, int size_z,
                           std::uint64_t seed);

// Deterministic random CNF with the exact 2+2 occurrence profile.  Requires
// num_vars positive and divisible by 3 (so clauses come out whole); throws
// std::invalid_argument otherwise.
CnfInstance random_sat4occ(int num_vars, std::uint64_t seed);

// Fair matching instance with three colors, max-min measure, ell = 0, left
// degrees <= 3 and right degrees <= 3 that is a YES instance exactly when
// the 3DM instance has a perfect matching.  Left vertices are the elements
// of X, then Y, then Z, colored 0/1/2 per ground set; right vertices are
// the triples in input order (plus one isolated right vertex when there are
// no triples, since instances need k >= 1).
Instance reduce_3dm_maxmin33(const ThreeDMInstance& t);

// Same decision equivalence with left degrees <= 2 and right degrees <= 4.
// Each element s gets left vertices u1 u2 u3 a1 a2 b1 b2 and right vertices
// w1 w2 w3; u_i is wired to w_i and to the i-th triple containing s, the
// a/b vertices tie the w's together so that fair shares force exactly one
// u_i out of the gadget.  Right vertices are the per-element w's followed
// by the triple vertices.
Instance reduce_3dm_maxmin24(const ThreeDMInstance& t);

// Fair matching instance with three colors, margin measure, ell = 0, left
// degrees <= 2 and right degrees <= 5 that is a YES instance exactly when
// the formula is satisfiable.  Variable gadgets decide truth values via
// which side vertex absorbs the shared vertex; occurrence vertices carry
// satisfied literals into clause gadgets.
Instance reduce_sat_mov25(const CnfInstance& c);

}  // namespace fairmatch
