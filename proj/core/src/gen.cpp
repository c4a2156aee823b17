#include "fairmatch/gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fairmatch/errors.hpp"

namespace fairmatch {

namespace {

// Modulo draws keep the byte-for-byte determinism promise independent of the
// standard library's distribution internals.
int draw(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

bool flip(std::mt19937_64& rng, double prob) {
  return (rng() >> 11) * 0x1.0p-53 < prob;
}

template <typename T>
void fisher_yates(std::vector<T>& items, std::mt19937_64& rng) {
  for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
    std::swap(items[i], items[draw(rng, i + 1)]);
  }
}

// Triple indices containing each element; elements are indexed X block
// first, then Y, then Z.
std::vector<std::vector<int>> occurrence_lists(const ThreeDMInstance& t) {
  std::vector<std::vector<int>> occ(t.size_x + t.size_y + t.size_z);
  for (int j = 0; j < static_cast<int>(t.triples.size()); ++j) {
    occ[t.triples[j][0]].push_back(j);
    occ[t.size_x + t.triples[j][1]].push_back(j);
    occ[t.size_x + t.size_y + t.triples[j][2]].push_back(j);
  }
  return occ;
}

bool cover_dfs(const ThreeDMInstance& t,
               const std::vector<std::vector<int>>& occ,
               std::vector<char>& covered, int from) {
  int total = static_cast<int>(covered.size());
  while (from < total && covered[from]) ++from;
  if (from == total) return true;
  for (int j : occ[from]) {
    int x = t.triples[j][0];
    int y = t.size_x + t.triples[j][1];
    int z = t.size_x + t.size_y + t.triples[j][2];
    if (covered[x] || covered[y] || covered[z]) continue;
    covered[x] = covered[y] = covered[z] = 1;
    if (cover_dfs(t, occ, covered, from + 1)) return true;
    covered[x] = covered[y] = covered[z] = 0;
  }
  return false;
}

}  // namespace

void validate(const ThreeDMInstance& t) {
  if (t.size_x < 1 || t.size_y < 1 || t.size_z < 1) {
    throw std::invalid_argument("3dm ground sets must be nonempty");
  }
  std::set<std::array<int, 3>> seen;
  for (const auto& tr : t.triples) {
    if (tr[0] < 0 || tr[0] >= t.size_x || tr[1] < 0 || tr[1] >= t.size_y ||
        tr[2] < 0 || tr[2] >= t.size_z) {
      throw std::invalid_argument("triple entry out of range");
    }
    if (!seen.insert(tr).second) {
      throw std::invalid_argument("duplicate triple");
    }
  }
  for (const auto& list : occurrence_lists(t)) {
    if (list.size() > 3) {
      throw std::invalid_argument("element occurs in more than three triples");
    }
  }
}

bool has_perfect_3dm(const ThreeDMInstance& t) {
  validate(t);
  auto occ = occurrence_lists(t);
  std::vector<char> covered(t.size_x + t.size_y + t.size_z, 0);
  return cover_dfs(t, occ, covered, 0);
}

void validate(const CnfInstance& c) {
  if (c.num_vars < 1) {
    throw std::invalid_argument("formula needs at least one variable");
  }
  std::vector<int> pos(c.num_vars, 0), neg(c.num_vars, 0);
  for (const auto& clause : c.clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > c.num_vars) {
        throw std::invalid_argument("literal out of range");
      }
      (lit > 0 ? pos : neg)[std::abs(lit) - 1]++;
    }
  }
  for (int x = 0; x < c.num_vars; ++x) {
    if (pos[x] != 2 || neg[x] != 2) {
      throw std::invalid_argument(
          "every variable needs exactly two positive and two negative "
          "occurrences");
    }
  }
}

bool is_satisfiable(const CnfInstance& c) {
  validate(c);
  if (c.num_vars > 25) {
    throw ResourceError("sat brute force limited to 25 variables");
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << c.num_vars);
       ++mask) {
    bool all = true;
    for (const auto& clause : c.clauses) {
      bool sat = false;
      for (int lit : clause) {
        bool value = (mask >> (std::abs(lit) - 1)) & 1;
        if (value == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

Instance random_instance(const RandomInstanceSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("need at least one left vertex");
  if (spec.k < 1) throw std::invalid_argument("need at least one right vertex");
  if (spec.num_colors < 1) {
    throw std::invalid_argument("need at least one color");
  }
  if (!(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0)) {
    throw std::invalid_argument("edge probability outside [0, 1]");
  }
  if (spec.ell < 0) throw std::invalid_argument("negative fairness threshold");
  if (spec.size_min < 0) throw std::invalid_argument("negative size bound");
  if (spec.size_max && *spec.size_max < spec.size_min) {
    throw std::invalid_argument("size_max below size_min");
  }
  int cap_u = std::min(spec.max_left_degree.value_or(spec.k), spec.k);
  int cap_v = std::min(spec.max_right_degree.value_or(spec.n), spec.n);
  if (cap_u < 1) {
    throw std::invalid_argument("left degree cap leaves isolated vertices");
  }
  if (cap_v < 1 || static_cast<long long>(cap_v) * spec.k < spec.n) {
    throw std::invalid_argument(
        "right degree cap cannot absorb every left vertex");
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<int> colors(spec.n);
  for (int& c : colors) c = draw(rng, spec.num_colors);

  std::vector<int> left_deg(spec.n, 0), right_deg(spec.k, 0);
  std::vector<std::vector<char>> present(spec.n,
                                         std::vector<char>(spec.k, 0));
  std::vector<std::pair<int, int>> edges;
  // One guaranteed edge per left vertex; the cap precheck keeps a right slot
  // open throughout this pass.
  for (int u = 0; u < spec.n; ++u) {
    std::vector<int> open;
    for (int v = 0; v < spec.k; ++v) {
      if (right_deg[v] < cap_v) open.push_back(v);
    }
    int v = open[draw(rng, static_cast<int>(open.size()))];
    present[u][v] = 1;
    ++left_deg[u];
    ++right_deg[v];
    edges.emplace_back(u, v);
  }
  for (int u = 0; u < spec.n; ++u) {
    for (int v = 0; v < spec.k; ++v) {
      if (present[u][v] || left_deg[u] >= cap_u || right_deg[v] >= cap_v) {
        continue;
      }
      if (!flip(rng, spec.edge_prob)) continue;
      present[u][v] = 1;
      ++left_deg[u];
      ++right_deg[v];
      edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return make_instance(spec.num_colors, std::move(colors), spec.k,
                       std::move(edges), spec.ell, spec.measure, spec.size_min,
                       spec.size_max);
}

ThreeDMInstance random_3dm(int size_x, int size_y, int size_z,
                           std::uint64_t seed) {
  if (size_x < 1 || size_y < 1 || size_z < 1) {
    throw std::invalid_argument("3dm ground sets must be nonempty");
  }
  std::mt19937_64 rng(seed);
  long long cells = static_cast<long long>(size_x) * size_y * size_z;
  int cap = static_cast<int>(std::min<long long>(
      {3LL * size_x, 3LL * size_y, 3LL * size_z, cells}));
  int target = 1 + draw(rng, cap);
  ThreeDMInstance t{size_x, size_y, size_z, {}};
  std::set<std::array<int, 3>> seen;
  std::vector<int> occ_x(size_x, 0), occ_y(size_y, 0), occ_z(size_z, 0);
  for (int attempt = 0;
       attempt < 64 * cap + 256 &&
       static_cast<int>(t.triples.size()) < target;
       ++attempt) {
    std::array<int, 3> tr{draw(rng, size_x), draw(rng, size_y),
                          draw(rng, size_z)};
    if (occ_x[tr[0]] == 3 || occ_y[tr[1]] == 3 || occ_z[tr[2]] == 3) continue;
    if (!seen.insert(tr).second) continue;
    ++occ_x[tr[0]];
    ++occ_y[tr[1]];
    ++occ_z[tr[2]];
    t.triples.push_back(tr);
  }
  return t;
}

CnfInstance random_sat4occ(int num_vars, std::uint64_t seed) {
  if (num_vars < 3 || num_vars % 3 != 0) {
    throw std::invalid_argument(
        "occurrence profile needs a positive multiple of three variables");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> slots;
  slots.reserve(4 * num_vars);
  for (int x = 1; x <= num_vars; ++x) {
    slots.insert(slots.end(), {x, x, -x, -x});
  }
  // Prefer deals without a repeated variable inside a clause; fall back to
  // the last shuffle so the call always terminates deterministically.
  for (int round = 0; round < 50; ++round) {
    fisher_yates(slots, rng);
    bool clean = true;
    for (std::size_t i = 0; i + 2 < slots.size() && clean; i += 3) {
      int a = std::abs(slots[i]);
      int b = std::abs(slots[i + 1]);
      int d = std::abs(slots[i + 2]);
      clean = a != b && a != d && b != d;
    }
    if (clean) break;
  }
  CnfInstance c{num_vars, {}};
  for (std::size_t i = 0; i + 2 < slots.size(); i += 3) {
    c.clauses.push_back({slots[i], slots[i + 1], slots[i + 2]});
  }
  return c;
}

Instance reduce_3dm_maxmin33(const ThreeDMInstance& t) {
  validate(t);
  int n = t.size_x + t.size_y + t.size_z;
  std::vector<int> colors(n);
  for (int e = 0; e < n; ++e) {
    colors[e] = e < t.size_x ? 0 : (e < t.size_x + t.size_y ? 1 : 2);
  }
  // Instances need k >= 1; with no triples one isolated right vertex keeps
  // the answer NO because the elements stay unmatchable.
  int k = std::max(1, static_cast<int>(t.triples.size()));
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < static_cast<int>(t.triples.size()); ++j) {
    edges.emplace_back(t.triples[j][0], j);
    edges.emplace_back(t.size_x + t.triples[j][1], j);
    edges.emplace_back(t.size_x + t.size_y + t.triples[j][2], j);
  }
  std::sort(edges.begin(), edges.end());
  return make_instance(3, std::move(colors), k, std::move(edges), 0,
                       Measure::kMaxMin);
}

Instance reduce_3dm_maxmin24(const ThreeDMInstance& t) {
  validate(t);
  int elements = t.size_x + t.size_y + t.size_z;
  auto occ = occurrence_lists(t);
  int n = 7 * elements;
  int k = 3 * elements + static_cast<int>(t.triples.size());
  std::vector<int> colors(n);
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < elements; ++e) {
    int ground = e < t.size_x ? 0 : (e < t.size_x + t.size_y ? 1 : 2);
    int l = 7 * e;  // u1 u2 u3 a1 a2 b1 b2
    int r = 3 * e;  // w1 w2 w3
    // The u's carry the ground set's color, so a triple vertex sees one
    // vertex of each color; the a/b fillers rotate through the other two.
    colors[l] = colors[l + 1] = colors[l + 2] = ground;
    colors[l + 3] = colors[l + 4] = (ground + 1) % 3;
    colors[l + 5] = colors[l + 6] = (ground + 2) % 3;
    for (int i = 0; i < 3; ++i) edges.emplace_back(l + i, r + i);
    edges.emplace_back(l + 3, r);      // a1: w1, w3
    edges.emplace_back(l + 3, r + 2);
    edges.emplace_back(l + 4, r);      // a2: w1, w2
    edges.emplace_back(l + 4, r + 1);
    edges.emplace_back(l + 5, r + 1);  // b1: w2, w3
    edges.emplace_back(l + 5, r + 2);
    edges.emplace_back(l + 6, r);      // b2: w1, w2
    edges.emplace_back(l + 6, r + 1);
    // u_i also reaches the i-th triple containing this element, so a fair
    // cover must pull exactly one u per covered element out of the gadget.
    for (int i = 0; i < static_cast<int>(occ[e].size()); ++i) {
      edges.emplace_back(l + i, 3 * elements + occ[e][i]);
    }
  }
  std::sort(edges.begin(), edges.end());
  return make_instance(3, std::move(colors), k, std::move(edges), 0,
                       Measure::kMaxMin);
}

Instance reduce_sat_mov25(const CnfInstance& c) {
  validate(c);
  int nv = c.num_vars;
  int nc = static_cast<int>(c.clauses.size());
  int n = 9 * nv + 7 * nc;
  int k = 2 * nv + 4 * nc;
  std::vector<int> colors(n);
  std::vector<std::pair<int, int>> edges;
  // Variable gadget left order: shared truth vertex, one color-0 and one
  // color-1 filler per side, then two occurrence vertices (color 2) per
  // side.  Right side: positive side vertex, negative side vertex.
  for (int x = 0; x < nv; ++x) {
    int l = 9 * x;
    int pos = 2 * x, neg = 2 * x + 1;
    colors[l] = colors[l + 1] = colors[l + 2] = 0;
    colors[l + 3] = colors[l + 4] = 1;
    colors[l + 5] = colors[l + 6] = colors[l + 7] = colors[l + 8] = 2;
    for (int i : {0, 1, 3, 5, 6}) edges.emplace_back(l + i, pos);
    for (int i : {0, 2, 4, 7, 8}) edges.emplace_back(l + i, neg);
  }
  // Clause gadget left order: anchor, two movers, their color-1 fillers,
  // their color-2 fillers.  Right side: collector, anchor overflow, one
  // parking vertex per mover.
  for (int y = 0; y < nc; ++y) {
    int l = 9 * nv + 7 * y;
    int r = 2 * nv + 4 * y;
    colors[l] = colors[l + 1] = colors[l + 2] = 0;
    colors[l + 3] = colors[l + 4] = 1;
    colors[l + 5] = colors[l + 6] = 2;
    for (int i : {0, 1, 2}) edges.emplace_back(l + i, r);
    edges.emplace_back(l, r + 1);
    edges.emplace_back(l + 1, r + 2);
    edges.emplace_back(l + 3, r + 2);
    edges.emplace_back(l + 5, r + 2);
    edges.emplace_back(l + 2, r + 3);
    edges.emplace_back(l + 4, r + 3);
    edges.emplace_back(l + 6, r + 3);
  }
  // Cross edges: the j-th positive occurrence of variable x is left vertex
  // 9x + 4 + j, the j-th negative occurrence 9x + 6 + j (j in {1, 2}).  The
  // first two literals of a clause enter the collector, the third enters
  // the anchor overflow vertex.
  std::vector<int> seen_pos(nv, 0), seen_neg(nv, 0);
  for (int y = 0; y < nc; ++y) {
    for (int i = 0; i < 3; ++i) {
      int lit = c.clauses[y][i];
      int x = std::abs(lit) - 1;
      int slot = lit > 0 ? 4 + ++seen_pos[x] : 6 + ++seen_neg[x];
      edges.emplace_back(9 * x + slot, 2 * nv + 4 * y + (i < 2 ? 0 : 1));
    }
  }
  std::sort(edges.begin(), edges.end());
  return make_instance(3, std::move(colors), k, std::move(edges), 0,
                       Measure::kMov);
}

}  // namespace fairmatch
