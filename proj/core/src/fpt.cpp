#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fairmatch/errors.hpp"
#include "fairmatch/fpt.hpp"
#include "fairmatch/matchflow.hpp"
#include "fairmatch/setfn.hpp"
#include "fpt_internal.hpp"

namespace fairmatch {

namespace {

// Subset-indexed constraint families need 2^k rows per color.
void check_subset_budget(int k) {
  if (k > 12) throw ResourceError("too many right vertices for subset constraints");
}

std::string zname(int v, int c) {
  return "z_v" + std::to_string(v) + "_c" + std::to_string(c);
}

// Verified merge of per-color matchings; certificate-backed reconstruction
// must never fail, so any violation is an internal error.
Matching finish_reconstruction(const Instance& inst, std::vector<int> assign) {
  Matching m{std::move(assign)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("reconstructed matching failed verification");
  }
  return m;
}

std::vector<int> reconstruct_exact_by_color(
    const Instance& inst, const std::vector<std::vector<int>>& targets_per_color) {
  std::vector<int> assign(inst.n(), -1);
  for (int c = 0; c < inst.num_colors; ++c) {
    std::vector<int> left_ids;
    BipGraph g = detail::color_subgraph(inst, c, left_ids);
    auto partial = construct_exact(g, targets_per_color[c]);
    if (!partial) {
      throw std::logic_error("exact per-color reconstruction failed");
    }
    detail::merge_assignment(left_ids, *partial, assign);
  }
  return assign;
}

std::vector<int> reconstruct_bounded_by_color(const Instance& inst,
                                              const std::vector<int>& lo,
                                              const std::vector<int>& hi) {
  std::vector<int> assign(inst.n(), -1);
  for (int c = 0; c < inst.num_colors; ++c) {
    std::vector<int> left_ids;
    BipGraph g = detail::color_subgraph(inst, c, left_ids);
    auto partial = construct_bounded(g, lo, hi);
    if (!partial) {
      throw std::logic_error("bounded per-color reconstruction failed");
    }
    detail::merge_assignment(left_ids, *partial, assign);
  }
  return assign;
}

}  // namespace

IlpModel build_kc_model(const Instance& inst) {
  check_subset_budget(inst.k);
  const int k = inst.k;
  const int colors = inst.num_colors;
  const long long n = inst.n();
  CountVector totals = color_totals(inst);

  IlpModel model;
  // Count variables, laid out v-major.
  for (int v = 0; v < k; ++v) {
    for (int c = 0; c < colors; ++c) model.add_var(zname(v, c), 0, totals[c]);
  }
  auto z = [&](int v, int c) { return v * colors + c; };

  // Hall-type rows: confined count <= assigned count <= reachable count for
  // every subset of right vertices and every color.
  for (int c = 0; c < colors; ++c) {
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

  if (inst.measure == Measure::kMaxMin) {
    for (int v = 0; v < k; ++v) {
      for (int c = 0; c < colors; ++c) {
        for (int c2 = 0; c2 < colors; ++c2) {
          if (c == c2) continue;
          model.add_constraint({{z(v, c2), 1}, {z(v, c), -1}}, Relation::kLe,
                               inst.ell);
        }
      }
    }
  } else if (colors == 1) {
    // Single color: the margin equals the lone count.
    for (int v = 0; v < k; ++v) {
      model.add_constraint({{z(v, 0), 1}}, Relation::kLe, inst.ell);
    }
  } else {
    // Indicator pair per right vertex and color: top and runner-up flags.
    std::vector<int> a(k * colors), b(k * colors);
    for (int v = 0; v < k; ++v) {
      for (int c = 0; c < colors; ++c) {
        a[v * colors + c] =
            model.add_var("a_v" + std::to_string(v) + "_c" + std::to_string(c), 0, 1);
      }
    }
    for (int v = 0; v < k; ++v) {
      for (int c = 0; c < colors; ++c) {
        b[v * colors + c] =
            model.add_var("b_v" + std::to_string(v) + "_c" + std::to_string(c), 0, 1);
      }
    }
    auto av = [&](int v, int c) { return a[v * colors + c]; };
    auto bv = [&](int v, int c) { return b[v * colors + c]; };
    for (int v = 0; v < k; ++v) {
      for (int c = 0; c < colors; ++c) {
        model.add_constraint({{av(v, c), 1}, {bv(v, c), 1}}, Relation::kLe, 1);
        for (int c2 = 0; c2 < colors; ++c2) {
          if (c == c2) continue;
          // Flagged top beats flagged runner-up.
          model.add_constraint({{z(v, c), 1},
                                {z(v, c2), -1},
                                {av(v, c), -n},
                                {bv(v, c2), -n}},
                               Relation::kGe, -2 * n);
          // The runner-up beats every unflagged color.
          model.add_constraint({{z(v, c), 1},
                                {z(v, c2), -1},
                                {bv(v, c), -n},
                                {av(v, c2), n}},
                               Relation::kGe, -n);
          // Margin bound between the flagged pair.
          model.add_constraint({{z(v, c), 1},
                                {z(v, c2), -1},
                                {av(v, c), n},
                                {bv(v, c2), n}},
                               Relation::kLe, inst.ell + 2 * n);
        }
      }
      std::vector<std::pair<int, long long>> suma, sumb;
      for (int c = 0; c < colors; ++c) {
        suma.push_back({av(v, c), 1});
        sumb.push_back({bv(v, c), 1});
      }
      model.add_constraint(std::move(suma), Relation::kEq, 1);
      model.add_constraint(std::move(sumb), Relation::kEq, 1);
    }
  }

  for (int v = 0; v < k; ++v) {
    std::vector<std::pair<int, long long>> total;
    for (int c = 0; c < colors; ++c) total.push_back({z(v, c), 1});
    if (inst.size_min > 0) {
      model.add_constraint(total, Relation::kGe, inst.size_min);
    }
    if (inst.size_max) {
      model.add_constraint(std::move(total), Relation::kLe, *inst.size_max);
    }
  }
  return model;
}

SolveResult solve_kc(const Instance& inst, const SolveConfig& cfg) {
  IlpModel model = build_kc_model(inst);
  auto sol = solve_feasibility(model, cfg.ilp);
  if (!sol) return SolveResult::no();

  std::vector<std::vector<int>> targets(inst.num_colors,
                                        std::vector<int>(inst.k, 0));
  for (int v = 0; v < inst.k; ++v) {
    for (int c = 0; c < inst.num_colors; ++c) {
      targets[c][v] = static_cast<int>((*sol)[v * inst.num_colors + c]);
    }
  }
  return SolveResult::yes(
      finish_reconstruction(inst, reconstruct_exact_by_color(inst, targets)));
}

IlpModel build_maxmin_k_model(const Instance& inst) {
  check_subset_budget(inst.k);
  const int k = inst.k;
  const long long n = inst.n();

  IlpModel model;
  for (int v = 0; v < k; ++v) model.add_var("x_v" + std::to_string(v), 0, n);
  for (int v = 0; v < k; ++v) model.add_var("y_v" + std::to_string(v), 0, n);
  auto x = [&](int v) { return v; };
  auto y = [&](int v) { return k + v; };

  for (int v = 0; v < k; ++v) {
    model.add_constraint({{x(v), 1}, {y(v), -1}}, Relation::kLe, 0);
    model.add_constraint({{y(v), 1}, {x(v), -1}}, Relation::kLe, inst.ell);
  }

  auto conf = detail::all_confined(inst);
  auto reach = detail::all_reachable(inst);
  for (uint32_t w = 0; w < (uint32_t{1} << k); ++w) {
    long long worst_conf = 0, worst_reach = 0;
    for (int c = 0; c < inst.num_colors; ++c) {
      worst_conf = std::max(worst_conf, conf[c].at(w));
      worst_reach = c == 0 ? reach[c].at(w) : std::min(worst_reach, reach[c].at(w));
    }
    std::vector<std::pair<int, long long>> ys, xs;
    for (int v = 0; v < k; ++v) {
      if (w >> v & 1) {
        ys.push_back({y(v), 1});
        xs.push_back({x(v), 1});
      }
    }
    model.add_constraint(std::move(ys), Relation::kGe, worst_conf);
    model.add_constraint(std::move(xs), Relation::kLe, worst_reach);
  }
  return model;
}

namespace {

void require_maxmin_no_sizes(const Instance& inst, int wanted_size_min) {
  if (inst.measure != Measure::kMaxMin) {
    throw std::invalid_argument("solver requires the max-min measure");
  }
  if (inst.size_min != wanted_size_min || inst.size_max) {
    throw std::invalid_argument("solver does not support these size bounds");
  }
}

SolveResult reconstruct_from_xy(const Instance& inst,
                                const std::vector<long long>& sol) {
  std::vector<int> lo(inst.k), hi(inst.k);
  for (int v = 0; v < inst.k; ++v) {
    lo[v] = static_cast<int>(sol[v]);
    hi[v] = static_cast<int>(sol[inst.k + v]);
  }
  return SolveResult::yes(
      finish_reconstruction(inst, reconstruct_bounded_by_color(inst, lo, hi)));
}

}  // namespace

SolveResult solve_maxmin_k(const Instance& inst, const SolveConfig& cfg) {
  require_maxmin_no_sizes(inst, 0);
  IlpModel model = build_maxmin_k_model(inst);
  auto sol = solve_feasibility(model, cfg.ilp);
  if (!sol) return SolveResult::no();
  return reconstruct_from_xy(inst, *sol);
}

namespace {

// Enumerate set partitions of {0..k-1} as block-id strings in restricted
// growth order.
std::vector<std::vector<int>> set_partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(k, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == k) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

struct NonemptySearch {
  const Instance& inst;
  const SolveConfig& cfg;
  int k, colors;
  std::vector<SetFunctionTable> conf, reach;
  std::vector<long long> max_conf, min_reach;
  std::vector<int> sig_of_color;                // color -> dense signature id
  std::vector<std::vector<int>> sig_values;     // signature id -> per-subset X,Y
  std::vector<std::vector<uint32_t>> cand_masks;  // per v: realized nbhds
  std::vector<uint32_t> umask;                  // per left vertex
  std::vector<std::vector<int>> left_of_color;

  explicit NonemptySearch(const Instance& inst_, const SolveConfig& cfg_)
      : inst(inst_), cfg(cfg_), k(inst_.k), colors(inst_.num_colors) {
    conf = detail::all_confined(inst);
    reach = detail::all_reachable(inst);
    uint32_t subsets = uint32_t{1} << k;
    max_conf.assign(subsets, 0);
    min_reach.assign(subsets, 0);
    for (uint32_t w = 0; w < subsets; ++w) {
      for (int c = 0; c < colors; ++c) {
        max_conf[w] = std::max(max_conf[w], conf[c].at(w));
        min_reach[w] = c == 0 ? reach[c].at(w)
                              : std::min(min_reach[w], reach[c].at(w));
      }
    }
    // Per-color signature: clamped distance of its reachable count from the
    // minimum and of its confined count from the maximum, per subset.
    std::vector<std::vector<int>> raw(colors);
    for (int c = 0; c < colors; ++c) {
      raw[c].reserve(2 * subsets);
      for (uint32_t w = 0; w < subsets; ++w) {
        raw[c].push_back(static_cast<int>(
            std::min<long long>(reach[c].at(w) - min_reach[w], k)));
        raw[c].push_back(static_cast<int>(
            std::min<long long>(max_conf[w] - conf[c].at(w), k)));
      }
    }
    sig_of_color.assign(colors, -1);
    for (int c = 0; c < colors; ++c) {
      for (size_t s = 0; s < sig_values.size(); ++s) {
        if (sig_values[s] == raw[c]) {
          sig_of_color[c] = static_cast<int>(s);
          break;
        }
      }
      if (sig_of_color[c] == -1) {
        sig_of_color[c] = static_cast<int>(sig_values.size());
        sig_values.push_back(raw[c]);
      }
    }
    umask = detail::left_masks(inst);
    left_of_color.assign(colors, {});
    for (int u = 0; u < inst.n(); ++u) {
      left_of_color[inst.left_colors[u]].push_back(u);
    }
    cand_masks.assign(k, {});
    for (int u = 0; u < inst.n(); ++u) {
      for (int v : inst.left_adj[u]) cand_masks[v].push_back(umask[u]);
    }
    for (auto& masks : cand_masks) {
      std::sort(masks.begin(), masks.end());
      masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    }
  }

  // Distinct color-c left vertices realizing the wanted neighborhood per
  // block member; empty result means no witness assignment exists.
  std::optional<std::vector<int>> witness_assignment(
      const std::vector<int>& block, int c, const std::vector<uint32_t>& mu) const {
    BipGraph g;
    g.n_left = static_cast<int>(block.size());
    g.n_right = static_cast<int>(left_of_color[c].size());
    g.adj.assign(g.n_left, {});
    for (int i = 0; i < g.n_left; ++i) {
      for (int j = 0; j < g.n_right; ++j) {
        if (umask[left_of_color[c][j]] == mu[block[i]]) g.adj[i].push_back(j);
      }
    }
    auto mate = max_bipartite_matching(g);
    std::vector<int> picked(block.size());
    for (size_t i = 0; i < block.size(); ++i) {
      if (mate[i] == -1) return std::nullopt;
      picked[i] = left_of_color[c][mate[i]];
    }
    return picked;
  }

  SolveResult try_guess(const std::vector<uint32_t>& mu,
                        const std::vector<std::vector<int>>& blocks,
                        const std::vector<std::vector<int>>& block_colors,
                        const std::vector<int>& block_sig) {
    int nblocks = static_cast<int>(blocks.size());
    // One distinct color per block among the signature-consistent candidates.
    BipGraph h;
    h.n_left = nblocks;
    h.n_right = colors;
    h.adj.assign(nblocks, {});
    for (int s = 0; s < nblocks; ++s) {
      for (int c : block_colors[s]) {
        if (sig_of_color[c] == block_sig[s]) h.adj[s].push_back(c);
      }
    }
    auto chosen = max_bipartite_matching(h);
    for (int s = 0; s < nblocks; ++s) {
      if (chosen[s] == -1) return SolveResult::no();
    }

    IlpModel model;
    const long long n = inst.n();
    for (int v = 0; v < k; ++v) model.add_var("x_v" + std::to_string(v), 0, n);
    for (int v = 0; v < k; ++v) model.add_var("y_v" + std::to_string(v), 0, n);
    for (int v = 0; v < k; ++v) {
      model.add_constraint({{v, 1}, {k + v, -1}}, Relation::kLe, 0);
      model.add_constraint({{k + v, 1}, {v, -1}}, Relation::kLe, inst.ell);
    }
    uint32_t subsets = uint32_t{1} << k;
    for (uint32_t w = 0; w < subsets; ++w) {
      std::vector<std::pair<int, long long>> xs, ys;
      for (int v = 0; v < k; ++v) {
        if (w >> v & 1) {
          xs.push_back({v, 1});
          ys.push_back({k + v, 1});
        }
      }
      model.add_constraint(ys, Relation::kGe, max_conf[w]);
      model.add_constraint(xs, Relation::kLe, min_reach[w]);
      for (int s = 0; s < nblocks; ++s) {
        long long x_slack = sig_values[block_sig[s]][2 * w];
        long long y_slack = sig_values[block_sig[s]][2 * w + 1];
        long long alpha = 0, beta = 0;
        for (int v : blocks[s]) {
          bool inside = (w >> v & 1) != 0;
          if (inside && (mu[v] & ~w) != 0) alpha++;
          if (!inside && (mu[v] & w) != 0) beta++;
        }
        model.add_constraint(ys, Relation::kGe, max_conf[w] - y_slack + alpha);
        model.add_constraint(xs, Relation::kLe, min_reach[w] + x_slack - beta);
      }
    }

    auto sol = solve_feasibility(model, cfg.ilp);
    if (!sol) return SolveResult::no();

    // Reconstruct: forced witness edge per block member in the chosen color's
    // subgraph, plain bounded flow for every other color.
    std::vector<int> lo(k), hi(k);
    for (int v = 0; v < k; ++v) {
      lo[v] = static_cast<int>((*sol)[v]);
      hi[v] = static_cast<int>((*sol)[k + v]);
    }
    std::vector<int> forced_to(inst.n(), -1);
    std::vector<int> color_block(colors, -1);
    for (int s = 0; s < nblocks; ++s) color_block[chosen[s]] = s;
    for (int s = 0; s < nblocks; ++s) {
      auto picked = witness_assignment(blocks[s], chosen[s], mu);
      if (!picked) throw std::logic_error("witness assignment vanished");
      for (size_t i = 0; i < blocks[s].size(); ++i) {
        forced_to[(*picked)[i]] = blocks[s][i];
      }
    }
    std::vector<int> assign(inst.n(), -1);
    for (int c = 0; c < colors; ++c) {
      std::vector<int> left_ids;
      BipGraph g = detail::color_subgraph(inst, c, left_ids);
      if (color_block[c] != -1) {
        for (int i = 0; i < g.n_left; ++i) {
          if (forced_to[left_ids[i]] != -1) g.adj[i] = {forced_to[left_ids[i]]};
        }
      }
      auto partial = construct_bounded(g, lo, hi);
      if (!partial) throw std::logic_error("guess-certified reconstruction failed");
      detail::merge_assignment(left_ids, *partial, assign);
    }
    return SolveResult::yes(finish_reconstruction(inst, std::move(assign)));
  }

  SolveResult run() {
    for (int v = 0; v < k; ++v) {
      if (cand_masks[v].empty()) return SolveResult::no();
    }
    auto partitions = set_partitions(k);
    std::vector<uint32_t> mu(k, 0);
    std::vector<int> pick(k, 0);
    while (true) {
      for (int v = 0; v < k; ++v) mu[v] = cand_masks[v][pick[v]];
      for (const auto& rgs : partitions) {
        int nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
        std::vector<std::vector<int>> blocks(nblocks);
        for (int v = 0; v < k; ++v) blocks[rgs[v]].push_back(v);
        // Colors able to supply witnesses per block, before signature split.
        std::vector<std::vector<int>> block_colors(nblocks);
        bool dead = false;
        for (int s = 0; s < nblocks && !dead; ++s) {
          for (int c = 0; c < colors; ++c) {
            if (witness_assignment(blocks[s], c, mu)) block_colors[s].push_back(c);
          }
          dead = block_colors[s].empty();
        }
        if (dead) continue;
        std::vector<std::vector<int>> sig_cands(nblocks);
        for (int s = 0; s < nblocks; ++s) {
          for (int c : block_colors[s]) sig_cands[s].push_back(sig_of_color[c]);
          std::sort(sig_cands[s].begin(), sig_cands[s].end());
          sig_cands[s].erase(
              std::unique(sig_cands[s].begin(), sig_cands[s].end()),
              sig_cands[s].end());
        }
        std::vector<int> sig_pick(nblocks, 0);
        while (true) {
          std::vector<int> block_sig(nblocks);
          for (int s = 0; s < nblocks; ++s) block_sig[s] = sig_cands[s][sig_pick[s]];
          SolveResult res = try_guess(mu, blocks, block_colors, block_sig);
          if (res.status == SolveStatus::kYes) return res;
          int i = nblocks - 1;
          while (i >= 0 &&
                 ++sig_pick[i] == static_cast<int>(sig_cands[i].size())) {
            sig_pick[i--] = 0;
          }
          if (i < 0) break;
        }
      }
      int i = k - 1;
      while (i >= 0 && ++pick[i] == static_cast<int>(cand_masks[i].size())) {
        pick[i--] = 0;
      }
      if (i < 0) break;
    }
    return SolveResult::no();
  }
};

}  // namespace

SolveResult solve_maxmin_k_nonempty(const Instance& inst, const SolveConfig& cfg) {
  require_maxmin_no_sizes(inst, 1);
  if (inst.n() < inst.k) return SolveResult::no();

  if (inst.ell == 0) {
    IlpModel model = build_maxmin_k_model(inst);
    for (int v = 0; v < inst.k; ++v) {
      model.add_constraint({{inst.k + v, 1}}, Relation::kGe, 1);
    }
    auto sol = solve_feasibility(model, cfg.ilp);
    if (!sol) return SolveResult::no();
    return reconstruct_from_xy(inst, *sol);
  }

  check_subset_budget(inst.k);
  if (inst.k > cfg.nonempty_k_cap) {
    throw ResourceError("nonempty guess enumeration capped at k <= " +
                        std::to_string(cfg.nonempty_k_cap));
  }
  NonemptySearch search(inst, cfg);
  return search.run();
}

}  // namespace fairmatch
