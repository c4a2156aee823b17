#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "fairmatch/matchflow.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/poly.hpp"

namespace fairmatch {

bool two_color_share_ok(int m1, int m2, int p, int ell) {
  if (m1 < 0 || m2 < 0) return false;
  return m1 + m2 >= p && std::abs(m1 - m2) <= ell;
}

namespace {

// Copies per gadget type for one right vertex's bank.  The bank absorbs
// exactly the pairs (m1, m2) with m1 + m2 >= p and |m1 - m2| <= ell, up to
// the supply n.
struct BankCounts {
  int h1, h2, h3, h4, h5, h6;
};

BankCounts bank_counts(int n, int p, int ell) {
  if (ell == 0) return {n, 0, 0, 0, (p + 1) / 2, 0};
  if (p < ell) return {n, 1, 0, ell - p - 1, 0, p};
  if ((p - ell) % 2 == 0) return {n, 0, 1, 0, (p - ell) / 2, ell - 1};
  return {n, 0, 0, 1, (p - ell + 1) / 2, ell - 1};
}

// Per-copy absorption options, as closed shapes over (a, b):
//   type 1: chain of four saturated vertices       a == b, a <= copies
//   type 2: saturated triangle ends                a <= copies, b <= copies
//   type 3: path, saturated ends                   max(a, b) <= copies <= a + b
//   type 4: path, saturated middle                 a + b <= copies
//   type 5: isolated saturated pair                a == b == copies
//   type 6: single saturated dual-marked vertex    a + b == copies
bool type_total_ok(int type, int copies, int a, int b) {
  switch (type) {
    case 1: return a == b && a <= copies;
    case 2: return a <= copies && b <= copies;
    case 3: return a <= copies && b <= copies && a + b >= copies;
    case 4: return a + b <= copies;
    case 5: return a == copies && b == copies;
    case 6: return a + b == copies;
  }
  return false;
}

}  // namespace

bool representation_vector_exists(int m1, int m2, int p, int ell) {
  if (m1 < 0 || m2 < 0 || p < 0 || ell < 0) return false;
  const int n = m1 + m2;
  const BankCounts s = bank_counts(n, p, std::min(ell, n));
  const int copies[7] = {0, s.h1, s.h2, s.h3, s.h4, s.h5, s.h6};
  std::vector<std::vector<char>> dp(m1 + 1, std::vector<char>(m2 + 1, 0));
  dp[0][0] = 1;
  for (int type = 1; type <= 6; ++type) {
    std::vector<std::vector<char>> next(m1 + 1, std::vector<char>(m2 + 1, 0));
    for (int a = 0; a <= m1; ++a) {
      for (int b = 0; b <= m2; ++b) {
        if (!type_total_ok(type, copies[type], a, b)) continue;
        for (int x = a; x <= m1; ++x) {
          for (int y = b; y <= m2; ++y) {
            if (dp[x - a][y - b]) next[x][y] = 1;
          }
        }
      }
    }
    dp = std::move(next);
  }
  return dp[m1][m2];
}

namespace {

// Bank assembly over a general graph.  Left vertices occupy ids [0, n); the
// matching must saturate every left vertex and every gadget vertex marked
// as required.
struct BankGraph {
  GeneralGraph g;
  std::vector<bool> required;
  std::vector<int> owner;                   // right vertex per gadget vertex
  std::vector<std::vector<int>> absorb_a;   // per bank: vertices open to color 0
  std::vector<std::vector<int>> absorb_b;   // per bank: vertices open to color 1

  int add(int v, bool to_a, bool to_b, bool saturate) {
    int id = g.n++;
    required.push_back(saturate);
    owner.push_back(v);
    if (to_a) absorb_a[v].push_back(id);
    if (to_b) absorb_b[v].push_back(id);
    return id;
  }
  void edge(int a, int b) { g.edges.push_back({a, b}); }

  void emit_bank(int v, const BankCounts& s) {
    for (int i = 0; i < s.h1; ++i) {
      int a = add(v, true, false, true), b = add(v, false, false, true);
      int c = add(v, false, false, true), d = add(v, false, true, true);
      edge(a, b);
      edge(b, c);
      edge(c, d);
    }
    for (int i = 0; i < s.h2; ++i) {
      int a = add(v, true, false, true), m = add(v, false, false, false);
      int b = add(v, false, true, true);
      edge(a, m);
      edge(m, b);
      edge(a, b);
    }
    for (int i = 0; i < s.h3; ++i) {
      int a = add(v, true, false, true), m = add(v, false, false, false);
      int b = add(v, false, true, true);
      edge(a, m);
      edge(m, b);
    }
    for (int i = 0; i < s.h4; ++i) {
      int a = add(v, true, false, false), m = add(v, false, false, true);
      int b = add(v, false, true, false);
      edge(a, m);
      edge(m, b);
    }
    for (int i = 0; i < s.h5; ++i) {
      add(v, true, false, true);
      add(v, false, true, true);
    }
    for (int i = 0; i < s.h6; ++i) {
      add(v, true, true, true);
    }
  }
};

}  // namespace

SolveResult solve_two_colors(const Instance& inst) {
  if (inst.num_colors != 2) {
    throw std::invalid_argument("two-color solver needs exactly two colors");
  }
  if (inst.size_max) {
    throw std::invalid_argument("two-color solver does not support size_max");
  }
  const int n = inst.n();
  const int p = inst.size_min;
  const int ell = std::min(inst.ell, n);
  if (static_cast<long long>(p) * inst.k > n) return SolveResult::no();

  BankGraph bg;
  bg.g.n = n;
  bg.required.assign(n, true);
  bg.owner.assign(n, -1);
  bg.absorb_a.resize(inst.k);
  bg.absorb_b.resize(inst.k);
  const BankCounts s = bank_counts(n, p, ell);
  for (int v = 0; v < inst.k; ++v) bg.emit_bank(v, s);
  for (int u = 0; u < n; ++u) {
    for (int v : inst.left_adj[u]) {
      const auto& open = inst.left_colors[u] == 0 ? bg.absorb_a[v] : bg.absorb_b[v];
      for (int g : open) bg.edge(u, g);
    }
  }

  auto mate = saturating_matching(bg.g, bg.required);
  if (!mate) return SolveResult::no();
  std::vector<int> assign(n, -1);
  for (int u = 0; u < n; ++u) {
    int g = (*mate)[u];
    if (g < 0 || bg.owner[g] < 0) {
      throw std::logic_error("saturating matching left a vertex unassigned");
    }
    assign[u] = bg.owner[g];
  }
  Matching m{std::move(assign)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("two-color witness failed verification");
  }
  return SolveResult::yes(std::move(m));
}

}  // namespace fairmatch
