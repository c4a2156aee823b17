#include "fairmatch/general_factor.hpp"

#include <stdexcept>

#include "fairmatch/errors.hpp"

namespace fairmatch {

bool has_small_gaps(uint32_t allowed) {
  int prev = -1;
  for (int d = 0; d < 32; ++d) {
    if (!(allowed >> d & 1)) continue;
    if (prev != -1 && d - prev > 2) return false;
    prev = d;
  }
  return true;
}

namespace {

struct Searcher {
  const GeneralFactorInstance& gf;
  std::vector<int> component_of;
  std::vector<std::vector<int>> comp_edges;  // edge ids per component
  std::vector<int> chosen_deg, remaining_deg;
  std::vector<char> selection;
  long long nodes_left;

  explicit Searcher(const GeneralFactorInstance& gf_, long long budget)
      : gf(gf_), nodes_left(budget) {
    chosen_deg.assign(gf.n, 0);
    remaining_deg.assign(gf.n, 0);
    selection.assign(gf.edges.size(), 0);
    for (const auto& [a, b] : gf.edges) {
      if (a == b || a < 0 || b < 0 || a >= gf.n || b >= gf.n) {
        throw std::invalid_argument("bad factor edge");
      }
      remaining_deg[a]++;
      remaining_deg[b]++;
    }
    label_components();
  }

  void label_components() {
    component_of.assign(gf.n, -1);
    int comps = 0;
    std::vector<std::vector<int>> vertex_edges(gf.n);
    for (size_t e = 0; e < gf.edges.size(); ++e) {
      vertex_edges[gf.edges[e].first].push_back(static_cast<int>(e));
      vertex_edges[gf.edges[e].second].push_back(static_cast<int>(e));
    }
    std::vector<int> stack;
    for (int v = 0; v < gf.n; ++v) {
      if (component_of[v] != -1) continue;
      component_of[v] = comps;
      stack.push_back(v);
      while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int e : vertex_edges[w]) {
          int other = gf.edges[e].first == w ? gf.edges[e].second : gf.edges[e].first;
          if (component_of[other] == -1) {
            component_of[other] = comps;
            stack.push_back(other);
          }
        }
      }
      comps++;
    }
    comp_edges.assign(comps, {});
    for (size_t e = 0; e < gf.edges.size(); ++e) {
      comp_edges[component_of[gf.edges[e].first]].push_back(static_cast<int>(e));
    }
  }

  bool vertex_feasible(int w) const {
    int budget = remaining_deg[w];
    uint32_t window = gf.allowed[w] >> chosen_deg[w];
    if (budget < 31) window &= (uint32_t{1} << (budget + 1)) - 1;
    return window != 0;
  }

  bool search(const std::vector<int>& edges, size_t idx) {
    if (--nodes_left < 0) throw ResourceError("general factor budget exceeded");
    if (idx == edges.size()) return true;
    int e = edges[idx];
    auto [a, b] = gf.edges[e];
    remaining_deg[a]--;
    remaining_deg[b]--;

    chosen_deg[a]++;
    chosen_deg[b]++;
    if (vertex_feasible(a) && vertex_feasible(b) && search(edges, idx + 1)) {
      selection[e] = 1;
      remaining_deg[a]++;
      remaining_deg[b]++;
      return true;
    }
    chosen_deg[a]--;
    chosen_deg[b]--;

    bool ok = vertex_feasible(a) && vertex_feasible(b) && search(edges, idx + 1);
    if (ok) selection[e] = 0;
    remaining_deg[a]++;
    remaining_deg[b]++;
    return ok;
  }

  std::optional<std::vector<char>> run() {
    for (int v = 0; v < gf.n; ++v) {
      if (!vertex_feasible(v)) return std::nullopt;
    }
    for (const auto& edges : comp_edges) {
      if (!search(edges, 0)) return std::nullopt;
    }
    return selection;
  }
};

}  // namespace

std::optional<std::vector<char>> solve_general_factor_exact(
    const GeneralFactorInstance& gf, long long node_budget) {
  if (static_cast<int>(gf.allowed.size()) != gf.n) {
    throw std::invalid_argument("allowed lists must cover every vertex");
  }
  Searcher searcher(gf, node_budget);
  return searcher.run();
}

}  // namespace fairmatch
