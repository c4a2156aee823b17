#include "fairmatch/setfn.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairmatch {

namespace {

uint32_t neighborhood_mask(const Instance& inst, int u) {
  uint32_t mask = 0;
  for (int v : inst.left_adj[u]) mask |= 1u << v;
  return mask;
}

void require_mask_width(int width) {
  if (width < 0 || width > 24) {
    throw std::invalid_argument("ground set too large for subset tables");
  }
}

}  // namespace

SetFunctionTable make_table(int ground_size, std::vector<long long> values) {
  require_mask_width(ground_size);
  if (values.size() != (size_t{1} << ground_size)) {
    throw std::invalid_argument("table size must be 2^ground_size");
  }
  return SetFunctionTable{ground_size, std::move(values)};
}

int confined_count(const Instance& inst, int color, uint32_t mask) {
  int count = 0;
  for (int u = 0; u < inst.n(); ++u) {
    if (inst.left_colors[u] != color) continue;
    if ((neighborhood_mask(inst, u) & ~mask) == 0) count++;
  }
  return count;
}

int reachable_count(const Instance& inst, int color, uint32_t mask) {
  int count = 0;
  for (int u = 0; u < inst.n(); ++u) {
    if (inst.left_colors[u] != color) continue;
    if ((neighborhood_mask(inst, u) & mask) != 0) count++;
  }
  return count;
}

SetFunctionTable confined_table(const Instance& inst, int color) {
  require_mask_width(inst.k);
  std::vector<long long> values(size_t{1} << inst.k, 0);
  for (int u = 0; u < inst.n(); ++u) {
    if (inst.left_colors[u] != color) continue;
    uint32_t nb = neighborhood_mask(inst, u);
    // u is confined to every superset of its neighborhood.
    uint32_t full = (1u << inst.k) - 1;
    uint32_t rest = full & ~nb;
    uint32_t sub = rest;
    while (true) {
      values[nb | sub]++;
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  return SetFunctionTable{inst.k, std::move(values)};
}

SetFunctionTable reachable_table(const Instance& inst, int color) {
  require_mask_width(inst.k);
  size_t size = size_t{1} << inst.k;
  std::vector<long long> values(size, 0);
  for (uint32_t mask = 0; mask < size; ++mask) {
    values[mask] = reachable_count(inst, color, mask);
  }
  return SetFunctionTable{inst.k, std::move(values)};
}

bool check_modular(const SetFunctionTable& f) {
  int m = f.ground_size;
  long long base = f.at(0);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    long long expect = base;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) expect += f.at(1u << i) - base;
    }
    if (f.at(mask) != expect) return false;
  }
  return true;
}

bool check_supermodular(const SetFunctionTable& f) {
  int m = f.ground_size;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    for (int x = 0; x < m; ++x) {
      if (mask >> x & 1) continue;
      for (int y = x + 1; y < m; ++y) {
        if (mask >> y & 1) continue;
        long long lhs = f.at(mask | 1u << x) + f.at(mask | 1u << y);
        long long rhs = f.at(mask | 1u << x | 1u << y) + f.at(mask);
        if (lhs > rhs) return false;
      }
    }
  }
  return true;
}

SetFunctionTable sup_convolution(const SetFunctionTable& g, const SetFunctionTable& f) {
  if (g.ground_size != f.ground_size) {
    throw std::invalid_argument("ground sets differ");
  }
  int m = g.ground_size;
  std::vector<long long> values(size_t{1} << m, 0);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    long long best = g.at(0) + f.at(mask);
    uint32_t sub = mask;
    while (true) {
      best = std::max(best, g.at(sub) + f.at(mask ^ sub));
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
    values[mask] = best;
  }
  return SetFunctionTable{m, std::move(values)};
}

std::variant<ModularSeparator, SeparatorPreconditionFailure>
find_touching_separator(const SetFunctionTable& f, const SetFunctionTable& f_prime,
                        const SetFunctionTable& g) {
  using Failure = SeparatorPreconditionFailure;
  int m = f.ground_size;
  if (m > 8) throw std::invalid_argument("separator search limited to 8 elements");
  if (f_prime.ground_size != m || g.ground_size != m) {
    throw std::invalid_argument("ground sets differ");
  }
  if (f.at(0) != 0 || f_prime.at(0) != 0 || g.at(0) != 0) {
    return Failure{Failure::Kind::kNonzeroAtEmpty, 0};
  }
  if (!check_modular(f)) return Failure{Failure::Kind::kNotModularF, 0};
  if (!check_modular(f_prime)) return Failure{Failure::Kind::kNotModularFPrime, 0};
  if (!check_supermodular(g)) return Failure{Failure::Kind::kNotSupermodularG, 0};
  uint32_t full = (1u << m) - 1;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (std::max(f.at(mask), g.at(mask)) > f_prime.at(mask)) {
      return Failure{Failure::Kind::kNotDominated, mask};
    }
  }

  // Lower envelope: any valid h dominates this supermodular blend of f and g,
  // and the touching equality pins h(full) to its top value.
  SetFunctionTable blend = sup_convolution(g, f);
  long long target = blend.at(full);

  std::vector<long long> lo(m), hi(m);
  for (int i = 0; i < m; ++i) {
    lo[i] = blend.at(1u << i);
    hi[i] = f_prime.at(1u << i);
  }
  std::vector<long long> suffix_lo(m + 1, 0), suffix_hi(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) {
    suffix_lo[i] = suffix_lo[i + 1] + lo[i];
    suffix_hi[i] = suffix_hi[i + 1] + hi[i];
  }

  std::vector<long long> chosen(m, 0);
  std::vector<long long> subset_sum(size_t{1} << m, 0);

  // Depth-first over singleton values; subsets of the processed prefix have
  // final sums, so their sandwich constraints can be checked right away.
  auto search = [&](auto&& self, int idx, long long sum) -> bool {
    if (idx == m) return sum == target;
    for (long long value = lo[idx]; value <= hi[idx]; ++value) {
      long long rest_lo = suffix_lo[idx + 1], rest_hi = suffix_hi[idx + 1];
      if (sum + value + rest_hi < target) continue;
      if (sum + value + rest_lo > target) break;
      chosen[idx] = value;
      uint32_t bit = 1u << idx;
      bool ok = true;
      // sub runs over subsets of {0..idx-1}; join each with idx.
      for (uint32_t sub = 0; sub < bit && ok; ++sub) {
        long long s = subset_sum[sub] + value;
        subset_sum[sub | bit] = s;
        if (s < blend.at(sub | bit) || s > f_prime.at(sub | bit)) ok = false;
      }
      if (ok && self(self, idx + 1, sum + value)) return true;
    }
    return false;
  };
  if (!search(search, 0, 0)) {
    throw std::logic_error("separator search failed despite valid preconditions");
  }
  return ModularSeparator{chosen};
}

}  // namespace fairmatch
