#include <algorithm>
#include <initializer_list>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "fairmatch/general_factor.hpp"
#include "fairmatch/matchflow.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/poly.hpp"

namespace fairmatch {
namespace {

uint32_t mask_range(int lo, int hi) {
  uint32_t m = 0;
  for (int d = std::max(lo, 0); d <= hi; ++d) m |= 1u << d;
  return m;
}

uint32_t mask_of(std::initializer_list<int> degs) {
  uint32_t m = 0;
  for (int d : degs) m |= 1u << d;
  return m;
}

// Incremental general-factor construction.  Left vertices come first;
// auxiliary vertices are appended per right vertex.  Edges carry the right
// vertex they assign to, or -1 for internal gadget edges.
struct FactorBuilder {
  GeneralFactorInstance gf;
  std::vector<int> edge_owner;

  FactorBuilder(int n_left, uint32_t left_allowed) {
    gf.n = n_left;
    gf.allowed.assign(n_left, left_allowed);
  }
  int aux(uint32_t allowed) {
    gf.allowed.push_back(allowed);
    return gf.n++;
  }
  void internal(int a, int b) {
    gf.edges.push_back({a, b});
    edge_owner.push_back(-1);
  }
  void assign_edge(int u, int a, int v) {
    gf.edges.push_back({u, a});
    edge_owner.push_back(v);
  }
};

// Neighbor ids grouped by color; larger groups first, color id breaking ties.
std::vector<std::vector<int>> color_groups(const std::vector<int>& colors,
                                           const std::vector<int>& nbrs) {
  std::map<int, std::vector<int>> by_color;
  for (int u : nbrs) by_color[colors[u]].push_back(u);
  std::vector<std::vector<int>> groups;
  for (auto& [c, ids] : by_color) groups.push_back(std::move(ids));
  std::stable_sort(
      groups.begin(), groups.end(),
      [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return groups;
}

// Margin gadget for one right vertex.  Feasible degree assignments admit
// exactly the neighbor subsets whose margin is at most ell (nonempty ones
// when requested).
void append_margin_gadget(FactorBuilder& fb, int v,
                          const std::vector<std::vector<int>>& groups, int ell,
                          bool nonempty) {
  int deg = 0;
  for (const auto& g : groups) deg += static_cast<int>(g.size());
  if (deg == 0) {
    if (nonempty) fb.aux(0);
    return;
  }
  const int lo = nonempty ? 1 : 0;
  const int c1 = static_cast<int>(groups[0].size());
  auto all = [&](int a) {
    for (const auto& g : groups)
      for (int u : g) fb.assign_edge(u, a, v);
  };
  auto grp = [&](int gi, int a) {
    for (int u : groups[gi]) fb.assign_edge(u, a, v);
  };
  if (groups.size() == 1) {
    // Single color: the share size is the margin.
    all(fb.aux(mask_range(lo, std::min(ell, deg))));
    return;
  }
  if (c1 <= ell) {
    // No subset can exceed the threshold.
    all(fb.aux(mask_range(lo, deg)));
    return;
  }
  const int c2 = static_cast<int>(groups[1].size());
  if (ell == 2) {
    // Pattern (3,1): block only the full one-sided class.
    int a1 = fb.aux(nonempty ? mask_of({0, 2, 3}) : mask_range(0, 3));
    int a2 = fb.aux(nonempty ? mask_of({1, 2}) : mask_of({1}));
    grp(0, a1);
    grp(1, a2);
    fb.internal(a1, a2);
    return;
  }
  if (ell == 1) {
    if (!nonempty) {
      if (groups.size() == 2 && c2 == 1) {
        // (2,1) and (3,1): the minority side window caps the majority.
        int a1 = fb.aux(mask_range(0, 2));
        int a2 = fb.aux(mask_of({1}));
        grp(0, a1);
        grp(1, a2);
        fb.internal(a1, a2);
      } else if (groups.size() == 2) {
        // (2,2)
        int a1 = fb.aux(mask_of({1, 2}));
        int a2 = fb.aux(mask_of({1, 2}));
        grp(0, a1);
        grp(1, a2);
        fb.internal(a1, a2);
      } else {
        // (2,1,1)
        int a1 = fb.aux(mask_range(0, 2));
        int a2 = fb.aux(mask_of({1, 2}));
        grp(0, a1);
        grp(1, a2);
        grp(2, a2);
        fb.internal(a1, a2);
      }
      return;
    }
    if (groups.size() == 2) {
      // Nonempty (2,1), (3,1), (2,2): a slack vertex absorbs one spare unit.
      int a1 = fb.aux(mask_of({2}));
      int a2 = fb.aux(mask_of({2}));
      int a3 = fb.aux(mask_of({0, 1}));
      grp(0, a1);
      grp(1, a2);
      fb.internal(a1, a2);
      fb.internal(a1, a3);
      fb.internal(a2, a3);
    } else {
      // Nonempty (2,1,1)
      int a1 = fb.aux(mask_of({3}));
      int a2 = fb.aux(mask_of({3}));
      int a3 = fb.aux(mask_of({3}));
      int a4 = fb.aux(mask_range(0, 2));
      grp(0, a1);
      grp(1, a2);
      grp(2, a3);
      fb.internal(a1, a2);
      fb.internal(a1, a3);
      fb.internal(a1, a4);
      fb.internal(a2, a3);
      fb.internal(a2, a4);
      fb.internal(a3, a4);
    }
    return;
  }
  // ell == 0.
  if (c1 == 1) {
    // All classes are singletons: any share of two or more distinct colors
    // keeps a zero margin here only when sizes 2..deg are taken whole.
    uint32_t m = mask_range(2, deg);
    if (!nonempty) m |= 1u;
    all(fb.aux(m));
    return;
  }
  if (groups.size() == 2 && c1 == 2 && c2 == 2) {
    // (2,2): a four-cycle ties both class counters together.
    int a1 = fb.aux(mask_of({2}));
    int a2 = fb.aux(mask_of({2}));
    int b1 = fb.aux(mask_of({1}));
    int b2 = fb.aux(mask_of({1}));
    grp(0, a1);
    grp(1, a2);
    if (!nonempty) fb.internal(a1, a2);
    fb.internal(a1, b1);
    fb.internal(b1, b2);
    fb.internal(b2, a2);
    return;
  }
  if (groups.size() == 2) {
    // (2,1) and (3,1): both sides take exactly one unit or, when empty
    // shares are allowed, trade through the bridge edge.
    int a1 = fb.aux(mask_of({1}));
    int a2 = fb.aux(mask_of({1}));
    grp(0, a1);
    grp(1, a2);
    if (!nonempty) fb.internal(a1, a2);
    return;
  }
  // (2,1,1): per-class unit counters plus a parity hub.
  int a1 = fb.aux(mask_of({1}));
  int a2 = fb.aux(mask_of({1}));
  int a3 = fb.aux(mask_of({1}));
  int a4 = fb.aux(nonempty ? mask_of({0, 1}) : mask_of({0, 1, 3}));
  grp(0, a1);
  grp(1, a2);
  grp(2, a3);
  fb.internal(a1, a4);
  fb.internal(a2, a4);
  fb.internal(a3, a4);
}

// Turns a chosen factor into a matching via the assign edges.
SolveResult factor_to_matching(const Instance& inst, const FactorBuilder& fb,
                               const std::vector<char>& picked) {
  std::vector<int> assign(inst.n(), -1);
  for (size_t e = 0; e < fb.gf.edges.size(); ++e) {
    if (!picked[e] || fb.edge_owner[e] < 0) continue;
    int u = std::min(fb.gf.edges[e].first, fb.gf.edges[e].second);
    if (assign[u] != -1) {
      throw std::logic_error("factor assigns a left vertex twice");
    }
    assign[u] = fb.edge_owner[e];
  }
  for (int u = 0; u < inst.n(); ++u) {
    if (assign[u] < 0) throw std::logic_error("factor left a vertex unassigned");
  }
  Matching m{std::move(assign)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("factor witness failed verification");
  }
  return SolveResult::yes(std::move(m));
}

SolveResult bounded_or_no(const Instance& inst, const std::vector<int>& lo,
                          const std::vector<int>& hi) {
  BipGraph g{inst.n(), inst.k, inst.left_adj};
  auto mate = construct_bounded(g, lo, hi);
  if (!mate) return SolveResult::no();
  Matching m{std::move(*mate)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("bounded witness failed verification");
  }
  return SolveResult::yes(std::move(m));
}

}  // namespace

GeneralFactorInstance build_mov_deg4_gadget(
    const std::vector<int>& neighbor_colors, int ell, bool nonempty) {
  const int deg = static_cast<int>(neighbor_colors.size());
  if (deg > 4 || ell < 0) {
    throw std::invalid_argument("gadget takes at most four neighbors");
  }
  std::vector<int> slots(deg);
  for (int i = 0; i < deg; ++i) slots[i] = i;
  FactorBuilder fb(deg, mask_of({0, 1}));
  append_margin_gadget(fb, 0, color_groups(neighbor_colors, slots), ell,
                       nonempty);
  return fb.gf;
}

SolveResult solve_mov_deg4(const Instance& inst) {
  if (inst.measure != Measure::kMov) {
    throw std::invalid_argument("margin degree solver needs the margin measure");
  }
  if (inst.size_min > 1 || inst.size_max) {
    throw std::invalid_argument(
        "margin degree solver supports at most the nonempty bound");
  }
  if (max_right_degree(inst) > 4) {
    throw std::invalid_argument("margin degree solver needs right degrees <= 4");
  }
  const bool nonempty = inst.size_min == 1;
  const int n = inst.n();
  for (int u = 0; u < n; ++u) {
    if (inst.left_adj[u].empty()) return SolveResult::no();
  }
  if (nonempty) {
    for (int v = 0; v < inst.k; ++v) {
      if (inst.right_adj[v].empty()) return SolveResult::no();
    }
  }
  FactorBuilder fb(n, mask_of({1}));
  for (int v = 0; v < inst.k; ++v) {
    append_margin_gadget(fb, v, color_groups(inst.left_colors, inst.right_adj[v]),
                         inst.ell, nonempty);
  }
  auto picked = solve_general_factor_exact(fb.gf);
  if (!picked) return SolveResult::no();
  return factor_to_matching(inst, fb, *picked);
}

SolveResult solve_forced_assignment(const Instance& inst) {
  if (max_left_degree(inst) > 1) {
    throw std::invalid_argument("forced solver needs left degrees at most 1");
  }
  std::vector<int> assign(inst.n());
  for (int u = 0; u < inst.n(); ++u) {
    if (inst.left_adj[u].empty()) return SolveResult::no();
    assign[u] = inst.left_adj[u][0];
  }
  Matching m{std::move(assign)};
  if (!verify(inst, m).ok) return SolveResult::no();
  return SolveResult::yes(std::move(m));
}

namespace {

// Max-min, threshold zero, three colors, left degrees <= 2 and right
// degrees <= 3, empty shares allowed.  Nonempty shares must take a full
// one-of-each-color neighborhood, so commitments cascade; the residue is a
// parity condition on the conflict graph between right vertices.
SolveResult maxmin_zero_33(const Instance& inst) {
  const int n = inst.n();
  std::vector<char> ua(n, 1);
  std::vector<char> va(inst.k, 1);
  std::vector<int> assign(n, -1);
  auto alive_deg = [&](int u) {
    int d = 0;
    for (int v : inst.left_adj[u])
      if (va[v]) ++d;
    return d;
  };
  auto alive_nbrs = [&](int v) {
    std::vector<int> r;
    for (int u : inst.right_adj[v])
      if (ua[u]) r.push_back(u);
    return r;
  };
  for (;;) {
    for (int u = 0; u < n; ++u) {
      if (ua[u] && alive_deg(u) == 0) return SolveResult::no();
    }
    bool changed = false;
    for (int v = 0; v < inst.k && !changed; ++v) {
      if (!va[v]) continue;
      auto nb = alive_nbrs(v);
      if (!nb.empty() && maxmin_value(counts_of(inst, nb)) != 0) {
        va[v] = 0;  // no nonempty fair share fits; the share stays empty
        changed = true;
      }
    }
    if (changed) continue;
    for (int u = 0; u < n && !changed; ++u) {
      if (!ua[u] || alive_deg(u) != 1) continue;
      int v = -1;
      for (int w : inst.left_adj[u])
        if (va[w]) v = w;
      for (int w : alive_nbrs(v)) {
        assign[w] = v;
        ua[w] = 0;
      }
      va[v] = 0;
      changed = true;
    }
    if (!changed) break;
  }

  // Residue: every alive left vertex has exactly two alive neighbors, and
  // exactly one of them must take its whole neighborhood.
  std::vector<std::vector<int>> g0(inst.k);
  std::vector<std::pair<int, int>> ends(n, {-1, -1});
  for (int u = 0; u < n; ++u) {
    if (!ua[u]) continue;
    std::vector<int> vs;
    for (int v : inst.left_adj[u])
      if (va[v]) vs.push_back(v);
    if (vs.size() != 2) throw std::logic_error("residue degree invariant broken");
    g0[vs[0]].push_back(vs[1]);
    g0[vs[1]].push_back(vs[0]);
    ends[u] = {vs[0], vs[1]};
  }
  std::vector<int> side(inst.k, -1);
  for (int s = 0; s < inst.k; ++s) {
    if (!va[s] || side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : g0[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          bfs.push(w);
        } else if (side[w] == side[v]) {
          return SolveResult::no();  // odd conflict cycle
        }
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    if (!ua[u]) continue;
    auto [a, b] = ends[u];
    assign[u] = side[a] == 0 ? a : b;
  }
  Matching m{std::move(assign)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("residue witness failed verification");
  }
  return SolveResult::yes(std::move(m));
}

// Slot matchings for the empty-shares-allowed cases with left degrees <= 2
// and right degrees <= 3.
SolveResult maxmin_slot_matching(const Instance& inst, int ell) {
  BipGraph g;
  g.n_left = inst.n();
  g.adj.resize(inst.n());
  std::vector<int> slot_owner;
  auto slot = [&](int v) {
    slot_owner.push_back(v);
    return static_cast<int>(slot_owner.size()) - 1;
  };
  auto link = [&](int u, int s) { g.adj[u].push_back(s); };
  for (int v = 0; v < inst.k; ++v) {
    auto groups = color_groups(inst.left_colors, inst.right_adj[v]);
    if (groups.empty()) continue;
    const int c1 = static_cast<int>(groups[0].size());
    if (ell == 1) {
      if (c1 == 1) {
        for (const auto& grp : groups)
          for (int u : grp) link(u, slot(v));
      } else if (groups.size() == 1) {
        int s = slot(v);
        for (int u : groups[0]) link(u, s);
      } else {
        int s1 = slot(v), s2 = slot(v);
        for (int u : groups[0]) link(u, s1);
        for (int u : groups[1]) link(u, s2);
      }
    } else {
      // ell == 2: only a full same-colored triple is unfair.
      if (groups.size() == 1 && c1 == 3) {
        int s1 = slot(v), s2 = slot(v);
        for (int u : groups[0]) {
          link(u, s1);
          link(u, s2);
        }
      } else {
        for (const auto& grp : groups)
          for (int u : grp) link(u, slot(v));
      }
    }
  }
  g.n_right = static_cast<int>(slot_owner.size());
  std::vector<int> mate = max_bipartite_matching(g);
  std::vector<int> assign(inst.n());
  for (int u = 0; u < inst.n(); ++u) {
    if (mate[u] < 0) return SolveResult::no();
    assign[u] = slot_owner[mate[u]];
  }
  Matching m{std::move(assign)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("slot witness failed verification");
  }
  return SolveResult::yes(std::move(m));
}

// Nonempty cases over the general-factor backend.
SolveResult maxmin_factor_nonempty(const Instance& inst, int ell) {
  FactorBuilder fb(inst.n(), mask_of({1}));
  for (int v = 0; v < inst.k; ++v) {
    auto groups = color_groups(inst.left_colors, inst.right_adj[v]);
    int deg = static_cast<int>(inst.right_adj[v].size());
    const int c1 = groups.empty() ? 0 : static_cast<int>(groups[0].size());
    auto all = [&](int a) {
      for (const auto& grp : groups)
        for (int u : grp) fb.assign_edge(u, a, v);
    };
    if (ell == 1) {
      if (c1 == 1) {
        all(fb.aux(mask_range(1, deg)));
      } else if (groups.size() == 1) {
        all(fb.aux(mask_of({1})));
      } else {
        // (2,1): unit counters per class, one optional spare on the hub.
        int a1 = fb.aux(mask_of({1}));
        int a2 = fb.aux(mask_of({1}));
        int t = fb.aux(mask_of({0, 1}));
        for (int u : groups[0]) fb.assign_edge(u, a1, v);
        for (int u : groups[1]) fb.assign_edge(u, a2, v);
        fb.internal(a1, t);
        fb.internal(a2, t);
      }
    } else {
      // ell == 2: block only the full same-colored triple.
      if (groups.size() == 1 && c1 == 3) {
        all(fb.aux(mask_of({1, 2})));
      } else {
        all(fb.aux(mask_range(1, deg)));
      }
    }
  }
  auto picked = solve_general_factor_exact(fb.gf);
  if (!picked) return SolveResult::no();
  return factor_to_matching(inst, fb, *picked);
}

}  // namespace

SolveResult solve_maxmin_lowdeg(const Instance& inst) {
  if (inst.measure != Measure::kMaxMin) {
    throw std::invalid_argument("low-degree solver needs the max-min measure");
  }
  if (inst.size_min > 1 || inst.size_max) {
    throw std::invalid_argument(
        "low-degree solver supports at most the nonempty bound");
  }
  const int dv = max_right_degree(inst);
  const int du = max_left_degree(inst);
  if (dv > 3 || (dv == 3 && du > 2)) {
    throw std::invalid_argument(
        "low-degree solver needs right degrees <= 2, or <= 3 with left degrees <= 2");
  }
  const bool nonempty = inst.size_min == 1;
  const int n = inst.n();
  for (int u = 0; u < n; ++u) {
    if (inst.left_adj[u].empty()) return SolveResult::no();
  }
  if (nonempty) {
    for (int v = 0; v < inst.k; ++v) {
      if (inst.right_adj[v].empty()) return SolveResult::no();
    }
  }
  std::vector<int> lo(inst.k, nonempty ? 1 : 0);
  std::vector<int> hi(inst.k);
  for (int v = 0; v < inst.k; ++v) {
    hi[v] = static_cast<int>(inst.right_adj[v].size());
  }

  if (inst.num_colors == 1) return bounded_or_no(inst, lo, hi);
  if (inst.num_colors == 2) return solve_two_colors(inst);

  if (dv <= 2) {
    if (inst.ell == 0) return SolveResult::no();  // some share is nonempty
    if (inst.ell == 1) {
      for (int v = 0; v < inst.k; ++v) {
        auto groups = color_groups(inst.left_colors, inst.right_adj[v]);
        if (!groups.empty() && groups[0].size() == 2) hi[v] = 1;
      }
    }
    return bounded_or_no(inst, lo, hi);
  }
  if (inst.ell >= 3) return bounded_or_no(inst, lo, hi);
  if (inst.ell == 0) {
    if (inst.num_colors >= 4) return SolveResult::no();
    if (!nonempty) return maxmin_zero_33(inst);
    for (int u = 0; u < n; ++u) {
      if (inst.left_adj[u].size() != 1) return SolveResult::no();
    }
    std::vector<int> assign(n);
    for (int v = 0; v < inst.k; ++v) {
      if (maxmin_value(counts_of(inst, inst.right_adj[v])) != 0) {
        return SolveResult::no();
      }
      for (int u : inst.right_adj[v]) assign[u] = v;
    }
    Matching m{std::move(assign)};
    if (!verify(inst, m).ok) {
      throw std::logic_error("forced zero-threshold witness failed verification");
    }
    return SolveResult::yes(std::move(m));
  }
  if (nonempty) return maxmin_factor_nonempty(inst, inst.ell);
  return maxmin_slot_matching(inst, inst.ell);
}

}  // namespace fairmatch
