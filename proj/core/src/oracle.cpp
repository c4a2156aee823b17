#include "fairmatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "fairmatch/errors.hpp"

namespace fairmatch {

namespace {

class BruteForcer {
 public:
  BruteForcer(const Instance& inst, long long budget)
      : inst_(inst), nodes_left_(budget) {
    counts_.assign(inst.k, CountVector(inst.num_colors, 0));
    total_.assign(inst.k, 0);
    undecided_.assign(inst.k, 0);
    for (int v = 0; v < inst.k; ++v) {
      undecided_[v] = static_cast<int>(inst.right_adj[v].size());
    }
    assign_.assign(inst.n(), -1);
  }

  SolveResult run() {
    for (int u = 0; u < inst_.n(); ++u) {
      if (inst_.left_adj[u].empty()) return SolveResult::no();
    }
    // Right vertices no assignment can touch must satisfy the bounds empty.
    for (int v = 0; v < inst_.k; ++v) {
      if (undecided_[v] == 0 && inst_.size_min > 0) return SolveResult::no();
    }
    if (dfs(0)) return SolveResult::yes(Matching{assign_});
    return SolveResult::no();
  }

 private:
  bool decided_ok(int v) const {
    if (total_[v] < inst_.size_min) return false;
    if (inst_.size_max && total_[v] > *inst_.size_max) return false;
    return measure_value(inst_.measure, counts_[v]) <= inst_.ell;
  }

  bool dfs(int u) {
    if (u == inst_.n()) return true;
    int color = inst_.left_colors[u];
    for (int v : inst_.left_adj[u]) {
      if (--nodes_left_ < 0) throw ResourceError("brute force budget exceeded");
      assign_[u] = v;
      counts_[v][color]++;
      total_[v]++;
      for (int w : inst_.left_adj[u]) undecided_[w]--;
      bool ok = !inst_.size_max || total_[v] <= *inst_.size_max;
      if (ok) {
        for (int w : inst_.left_adj[u]) {
          // A fully decided right vertex must already satisfy every bound,
          // and any other must still be able to reach size_min.
          if (undecided_[w] == 0 ? !decided_ok(w)
                                 : total_[w] + undecided_[w] < inst_.size_min) {
            ok = false;
            break;
          }
        }
      }
      if (ok && dfs(u + 1)) return true;
      for (int w : inst_.left_adj[u]) undecided_[w]++;
      counts_[v][color]--;
      total_[v]--;
      assign_[u] = -1;
    }
    return false;
  }

  const Instance& inst_;
  long long nodes_left_;
  std::vector<CountVector> counts_;
  std::vector<int> total_;
  std::vector<int> undecided_;
  std::vector<int> assign_;
};

}  // namespace

SolveResult brute_force(const Instance& inst, long long node_budget) {
  return BruteForcer(inst, node_budget).run();
}

SolveResult subset_dp(const Instance& inst) {
  int n = inst.n();
  if (n > 20) throw ResourceError("subset dp limited to 20 left vertices");
  uint32_t full = (uint32_t{1} << n) - 1;

  // Neighborhood mask per right vertex.
  std::vector<uint32_t> nb(inst.k, 0);
  for (int v = 0; v < inst.k; ++v) {
    for (int u : inst.right_adj[v]) nb[v] |= uint32_t{1} << u;
  }

  // Fairness plus size bounds per subset; membership in N(v) is enforced by
  // only ever drawing submasks of nb[v].
  std::vector<char> adm(full + 1, 0);
  for (uint32_t subset = 0; subset <= full; ++subset) {
    int total = static_cast<int>(std::popcount(subset));
    if (total < inst.size_min) continue;
    if (inst.size_max && total > *inst.size_max) continue;
    CountVector counts(inst.num_colors, 0);
    for (uint32_t rest = subset; rest; rest &= rest - 1) {
      counts[inst.left_colors[std::countr_zero(rest)]]++;
    }
    adm[subset] = measure_value(inst.measure, counts) <= inst.ell;
  }

  // reachable[mask]: the right vertices processed so far can jointly absorb
  // exactly the left vertices in `mask`.  Iteration over v is in index order.
  std::vector<char> reachable(full + 1, 0), next(full + 1, 0);
  reachable[0] = 1;
  for (int v = 0; v < inst.k; ++v) {
    std::fill(next.begin(), next.end(), 0);
    for (uint32_t mask = 0; mask <= full; ++mask) {
      if (!reachable[mask]) continue;
      uint32_t avail = nb[v] & ~mask;
      // All submasks of avail, including the empty one.
      uint32_t sub = avail;
      while (true) {
        if (adm[sub]) next[mask | sub] = 1;
        if (sub == 0) break;
        sub = (sub - 1) & avail;
      }
    }
    reachable.swap(next);
  }
  return reachable[full] ? SolveResult::yes() : SolveResult::no();
}

}  // namespace fairmatch
