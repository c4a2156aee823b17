#include "fairmatch/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fairmatch {

std::string to_string(Measure m) {
  return m == Measure::kMov ? "mov" : "maxmin";
}

void Instance::finalize() {
  ValidationReport report = validate(*this);
  if (!report.errors.empty()) {
    throw std::invalid_argument("invalid instance: " + report.errors.front());
  }
  left_adj.assign(n(), {});
  right_adj.assign(k, {});
  for (const auto& [u, v] : edges) {
    left_adj[u].push_back(v);
    right_adj[v].push_back(u);
  }
  for (auto& a : left_adj) std::sort(a.begin(), a.end());
  for (auto& a : right_adj) std::sort(a.begin(), a.end());
}

Instance make_instance(int num_colors, std::vector<int> left_colors, int k,
                       std::vector<std::pair<int, int>> edges, int ell,
                       Measure measure, int size_min,
                       std::optional<int> size_max) {
  Instance inst;
  inst.num_colors = num_colors;
  inst.left_colors = std::move(left_colors);
  inst.k = k;
  inst.edges = std::move(edges);
  inst.ell = ell;
  inst.measure = measure;
  inst.size_min = size_min;
  inst.size_max = size_max;
  inst.finalize();
  return inst;
}

int mov_value(const CountVector& counts) {
  int best = 0, second = 0;
  for (int c : counts) {
    if (c >= best) {
      second = best;
      best = c;
    } else if (c > second) {
      second = c;
    }
  }
  if (counts.size() == 1) second = 0;
  return best - second;
}

int maxmin_value(const CountVector& counts) {
  if (counts.empty()) return 0;
  auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  return *hi - *lo;
}

int measure_value(Measure measure, const CountVector& counts) {
  return measure == Measure::kMov ? mov_value(counts) : maxmin_value(counts);
}

CountVector counts_of(const Instance& inst, const std::vector<int>& left_vertices) {
  CountVector counts(inst.num_colors, 0);
  for (int u : left_vertices) counts[inst.left_colors[u]]++;
  return counts;
}

Verdict verify(const Instance& inst, const Matching& m) {
  if (static_cast<int>(m.assign.size()) != inst.n()) {
    throw std::invalid_argument("matching length does not match instance");
  }
  Verdict verdict;
  std::vector<std::vector<int>> groups(inst.k);
  for (int u = 0; u < inst.n(); ++u) {
    int v = m.assign[u];
    bool edge_ok = v >= 0 && v < inst.k &&
                   std::binary_search(inst.left_adj[u].begin(),
                                      inst.left_adj[u].end(), v);
    if (!edge_ok) {
      verdict.violations.push_back({Violation::Kind::kBadEdge, -1, u,
                                    "assigned target is not a neighbor"});
      continue;
    }
    groups[v].push_back(u);
  }
  for (int v = 0; v < inst.k; ++v) {
    CountVector counts = counts_of(inst, groups[v]);
    int value = measure_value(inst.measure, counts);
    if (value > inst.ell) {
      verdict.violations.push_back({Violation::Kind::kFairness, v, -1,
                                    to_string(inst.measure) + " value " +
                                        std::to_string(value) + " exceeds " +
                                        std::to_string(inst.ell)});
    }
    int size = static_cast<int>(groups[v].size());
    if (size < inst.size_min) {
      verdict.violations.push_back({Violation::Kind::kSizeMin, v, -1,
                                    "size " + std::to_string(size) +
                                        " below minimum"});
    }
    if (inst.size_max && size > *inst.size_max) {
      verdict.violations.push_back({Violation::Kind::kSizeMax, v, -1,
                                    "size " + std::to_string(size) +
                                        " above maximum"});
    }
  }
  verdict.ok = verdict.violations.empty();
  return verdict;
}

ValidationReport validate(const Instance& inst) {
  ValidationReport report;
  if (inst.num_colors < 1) report.errors.push_back("num_colors must be >= 1");
  if (inst.k < 1) report.errors.push_back("k must be >= 1");
  if (inst.left_colors.empty()) report.errors.push_back("no left vertices");
  if (inst.ell < 0) report.errors.push_back("ell must be >= 0");
  if (inst.size_min < 0) report.errors.push_back("size_min must be >= 0");
  if (inst.size_max && *inst.size_max < inst.size_min) {
    report.errors.push_back("size_max below size_min");
  }
  for (int c : inst.left_colors) {
    if (c < 0 || c >= inst.num_colors) {
      report.errors.push_back("left color out of range");
      break;
    }
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : inst.edges) {
    if (u < 0 || u >= inst.n() || v < 0 || v >= inst.k) {
      report.errors.push_back("edge endpoint out of range");
      break;
    }
    if (!seen.insert({u, v}).second) {
      report.errors.push_back("duplicate edge");
      break;
    }
  }
  if (report.errors.empty()) {
    std::vector<int> deg(inst.left_colors.size(), 0);
    for (const auto& [u, v] : inst.edges) deg[u]++;
    for (size_t u = 0; u < deg.size(); ++u) {
      if (deg[u] == 0) {
        report.warnings.push_back("left vertex " + std::to_string(u) +
                                  " is isolated (instance is infeasible)");
      }
    }
  }
  return report;
}

int max_left_degree(const Instance& inst) {
  int best = 0;
  for (const auto& a : inst.left_adj) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

int max_right_degree(const Instance& inst) {
  int best = 0;
  for (const auto& a : inst.right_adj) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

bool is_complete_bipartite(const Instance& inst) {
  return static_cast<long long>(inst.edges.size()) ==
         static_cast<long long>(inst.n()) * inst.k;
}

CountVector color_totals(const Instance& inst) {
  CountVector counts(inst.num_colors, 0);
  for (int c : inst.left_colors) counts[c]++;
  return counts;
}

}  // namespace fairmatch
