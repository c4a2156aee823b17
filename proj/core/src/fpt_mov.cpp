#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fairmatch/errors.hpp"
#include "fairmatch/fpt.hpp"
#include "fairmatch/matchflow.hpp"
#include "fairmatch/setfn.hpp"
#include "fpt_internal.hpp"

namespace fairmatch {

std::vector<TokenPartition> enumerate_token_partitions(int k) {
  // Restricted growth strings over the 2k slots; a block holding both slots
  // of one vertex would force equal top and runner-up colors, so skip it.
  std::vector<TokenPartition> out;
  int tokens = 2 * k;
  std::vector<int> rgs(tokens, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == tokens) {
      out.push_back({rgs, max_used + 1});
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      if (i % 2 == 1 && rgs[i - 1] == b) continue;
      rgs[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

namespace {

void check_targets(const Instance& inst, const TargetSpec& targets) {
  if (static_cast<int>(targets.mu1.size()) != inst.k ||
      static_cast<int>(targets.mu2.size()) != inst.k) {
    throw std::invalid_argument("target maps must cover every right vertex");
  }
  for (int v = 0; v < inst.k; ++v) {
    if (targets.mu1[v] < 0 || targets.mu1[v] >= inst.num_colors ||
        targets.mu2[v] < 0 || targets.mu2[v] >= inst.num_colors) {
      throw std::invalid_argument("target color id out of range");
    }
    if (targets.mu1[v] == targets.mu2[v]) {
      throw std::invalid_argument("top and runner-up targets must differ");
    }
  }
}

std::vector<int> target_colors(const Instance& inst, const TargetSpec& targets) {
  std::vector<int> c12;
  c12.insert(c12.end(), targets.mu1.begin(), targets.mu1.end());
  c12.insert(c12.end(), targets.mu2.begin(), targets.mu2.end());
  std::sort(c12.begin(), c12.end());
  c12.erase(std::unique(c12.begin(), c12.end()), c12.end());
  return c12;
}

}  // namespace

IlpModel build_targeted_mov_model(const Instance& inst, const TargetSpec& targets,
                                  bool nonempty) {
  check_targets(inst, targets);
  if (inst.k > 12) throw ResourceError("too many right vertices for subset constraints");
  const int k = inst.k;
  const long long n = inst.n();
  CountVector totals = color_totals(inst);
  std::vector<int> c12 = target_colors(inst, targets);
  std::vector<int> dense(inst.num_colors, -1);
  for (size_t j = 0; j < c12.size(); ++j) dense[c12[j]] = static_cast<int>(j);

  IlpModel model;
  for (int v = 0; v < k; ++v) model.add_var("y_v" + std::to_string(v), 0, n);
  for (int c : c12) {
    for (int v = 0; v < k; ++v) {
      model.add_var("z_v" + std::to_string(v) + "_c" + std::to_string(c), 0,
                    totals[c]);
    }
  }
  auto y = [&](int v) { return v; };
  auto z = [&](int v, int c) { return k + dense[c] * k + v; };

  // Hall-type rows per targeted color over every subset of right vertices.
  for (int c : c12) {
    SetFunctionTable conf = confined_table(inst, c);
    SetFunctionTable reach = reachable_table(inst, c);
    for (uint32_t w = 0; w < (uint32_t{1} << k); ++w) {
      std::vector<std::pair<int, long long>> terms;
      for (int v = 0; v < k; ++v) {
        if (w >> v & 1) terms.push_back({z(v, c), 1});
      }
      model.add_constraint(terms, Relation::kGe, conf.at(w));
      model.add_constraint(std::move(terms), Relation::kLe, reach.at(w));
    }
  }

  // Remaining colors only need the cap profile y to admit a capped flow.
  bool have_rest = static_cast<int>(c12.size()) < inst.num_colors;
  if (have_rest) {
    auto conf = detail::all_confined(inst);
    for (uint32_t w = 0; w < (uint32_t{1} << k); ++w) {
      long long need = 0;
      for (int c = 0; c < inst.num_colors; ++c) {
        if (dense[c] == -1) need = std::max(need, conf[c].at(w));
      }
      std::vector<std::pair<int, long long>> ys;
      for (int v = 0; v < k; ++v) {
        if (w >> v & 1) ys.push_back({y(v), 1});
      }
      model.add_constraint(std::move(ys), Relation::kGe, need);
    }
  }

  for (int v = 0; v < k; ++v) {
    int top = targets.mu1[v], second = targets.mu2[v];
    for (int c : c12) {
      if (c == top || c == second) continue;
      model.add_constraint({{z(v, c), 1}, {y(v), -1}}, Relation::kLe, 0);
    }
    model.add_constraint({{y(v), 1}, {z(v, second), -1}}, Relation::kEq, 0);
    model.add_constraint({{z(v, second), 1}, {z(v, top), -1}}, Relation::kLe, 0);
    model.add_constraint({{z(v, top), 1}, {z(v, second), -1}}, Relation::kLe,
                         inst.ell);
    if (nonempty) model.add_constraint({{z(v, top), 1}}, Relation::kGe, 1);
  }
  return model;
}

SolveResult solve_targeted_mov(const Instance& inst, const TargetSpec& targets,
                               bool nonempty, const SolveConfig& cfg) {
  if (inst.measure != Measure::kMov) {
    throw std::invalid_argument("targeted solver requires the margin measure");
  }
  if (inst.size_min != (nonempty ? 1 : 0) || inst.size_max) {
    throw std::invalid_argument("solver does not support these size bounds");
  }
  IlpModel model = build_targeted_mov_model(inst, targets, nonempty);
  auto sol = solve_feasibility(model, cfg.ilp);
  if (!sol) return SolveResult::no();

  const int k = inst.k;
  std::vector<int> c12 = target_colors(inst, targets);
  std::vector<int> dense(inst.num_colors, -1);
  for (size_t j = 0; j < c12.size(); ++j) dense[c12[j]] = static_cast<int>(j);

  std::vector<int> assign(inst.n(), -1);
  std::vector<int> caps(k);
  for (int v = 0; v < k; ++v) caps[v] = static_cast<int>((*sol)[v]);
  for (int c = 0; c < inst.num_colors; ++c) {
    std::vector<int> left_ids;
    BipGraph g = detail::color_subgraph(inst, c, left_ids);
    std::optional<std::vector<int>> partial;
    if (dense[c] != -1) {
      std::vector<int> want(k);
      for (int v = 0; v < k; ++v) {
        want[v] = static_cast<int>((*sol)[k + dense[c] * k + v]);
      }
      partial = construct_exact(g, want);
    } else {
      partial = construct_capped(g, caps);
    }
    if (!partial) throw std::logic_error("targeted reconstruction failed");
    detail::merge_assignment(left_ids, *partial, assign);
  }

  // The certificate fixes the top/second counts, but re-check fairness so a
  // YES can never escape unverified.
  Matching m{std::move(assign)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("targeted reconstruction failed verification");
  }
  return SolveResult::yes(std::move(m));
}

namespace {

// Count of color-c left vertices adjacent to v.
std::vector<std::vector<int>> adjacent_color_counts(const Instance& inst) {
  std::vector<std::vector<int>> cnt(inst.k,
                                    std::vector<int>(inst.num_colors, 0));
  for (int u = 0; u < inst.n(); ++u) {
    for (int v : inst.left_adj[u]) cnt[v][inst.left_colors[u]]++;
  }
  return cnt;
}

SolveResult solve_single_color_mov(const Instance& inst, bool nonempty) {
  // One color: each share's margin equals its size, so the problem is a pure
  // degree-bounded flow.
  BipGraph g;
  g.n_left = inst.n();
  g.n_right = inst.k;
  g.adj = inst.left_adj;
  std::vector<int> lo(inst.k, nonempty ? 1 : 0);
  std::vector<int> hi(inst.k, std::min(inst.ell, inst.n()));
  auto got = construct_bounded(g, lo, hi);
  if (!got) return SolveResult::no();
  Matching m{std::move(*got)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("single-color reconstruction failed verification");
  }
  return SolveResult::yes(std::move(m));
}

}  // namespace

SolveResult solve_mov_k(const Instance& inst, long long rounds, uint64_t seed,
                        const SolveConfig& cfg) {
  if (inst.measure != Measure::kMov) {
    throw std::invalid_argument("randomized driver requires the margin measure");
  }
  if (inst.size_min > 1 || inst.size_max) {
    throw std::invalid_argument("solver supports at most the nonempty size bound");
  }
  const bool nonempty = inst.size_min == 1;
  const int k = inst.k;

  for (int u = 0; u < inst.n(); ++u) {
    if (inst.left_adj[u].empty()) return SolveResult::no();
  }
  if (nonempty && inst.n() < k) return SolveResult::no();
  if (inst.num_colors == 1) return solve_single_color_mov(inst, nonempty);

  if (k > cfg.mov_k_cap) {
    throw ResourceError("token-partition enumeration capped at k <= " +
                        std::to_string(cfg.mov_k_cap));
  }
  if (rounds <= 0) {
    long long def = 1;
    for (int i = 0; i < 2 * k + 1; ++i) {
      def *= 2 * k + 1;
      if (def >= cfg.rounds_cap) {
        def = cfg.rounds_cap;
        break;
      }
    }
    rounds = def;
  }

  auto cnt = adjacent_color_counts(inst);
  auto partitions = enumerate_token_partitions(k);
  std::mt19937_64 rng(seed);
  std::map<std::pair<std::vector<int>, std::vector<int>>, SolveStatus> seen;

  for (const auto& part : partitions) {
    // With a zero threshold some colors may stay unused, so the draw gets one
    // spare bucket meaning "assigned to no block".
    uint64_t buckets = static_cast<uint64_t>(part.num_blocks) +
                       (inst.ell == 0 ? 1 : 0);
    std::vector<int> lambda(inst.num_colors);
    std::vector<int> derived(2 * k);
    for (long long r = 0; r < rounds; ++r) {
      for (int c = 0; c < inst.num_colors; ++c) {
        lambda[c] = static_cast<int>(rng() % buckets);
      }
      bool ok = true;
      for (int t = 0; t < 2 * k && ok; ++t) {
        int block = part.block_of[t], v = t / 2;
        int best = -1;
        for (int c = 0; c < inst.num_colors; ++c) {
          if (lambda[c] != block) continue;
          if (best == -1 || cnt[v][c] > cnt[v][best]) best = c;
        }
        derived[t] = best;
        ok = best != -1;
      }
      // All tokens of a block must agree on the derived color, otherwise the
      // draw contradicts the partition and the round is discarded.
      for (int t = 0; t < 2 * k && ok; ++t) {
        for (int t2 = t + 1; t2 < 2 * k && ok; ++t2) {
          if (part.block_of[t] == part.block_of[t2] &&
              derived[t] != derived[t2]) {
            ok = false;
          }
        }
      }
      if (!ok) continue;

      TargetSpec targets;
      targets.mu1.resize(k);
      targets.mu2.resize(k);
      for (int v = 0; v < k; ++v) {
        targets.mu1[v] = derived[2 * v];
        targets.mu2[v] = derived[2 * v + 1];
      }
      // Only NO outcomes are memoized; a YES returns immediately.
      auto [it, inserted] = seen.try_emplace(
          std::make_pair(targets.mu1, targets.mu2), SolveStatus::kNo);
      if (!inserted) continue;
      SolveResult res = solve_targeted_mov(inst, targets, nonempty, cfg);
      if (res.status == SolveStatus::kYes) return res;
    }
  }
  return SolveResult::unknown();
}

}  // namespace fairmatch
