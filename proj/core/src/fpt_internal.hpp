#pragma once

#include <cstdint>
#include <vector>

#include "fairmatch/matchflow.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/setfn.hpp"

namespace fairmatch::detail {

// Subgraph on the left vertices of one color; left_ids maps the compact left
// index back to the instance index.
inline BipGraph color_subgraph(const Instance& inst, int color,
                               std::vector<int>& left_ids) {
  left_ids.clear();
  BipGraph g;
  g.n_right = inst.k;
  for (int u = 0; u < inst.n(); ++u) {
    if (inst.left_colors[u] != color) continue;
    left_ids.push_back(u);
    g.adj.push_back(inst.left_adj[u]);
  }
  g.n_left = static_cast<int>(g.adj.size());
  return g;
}

inline void merge_assignment(const std::vector<int>& left_ids,
                             const std::vector<int>& partial,
                             std::vector<int>& assign) {
  for (size_t i = 0; i < left_ids.size(); ++i) assign[left_ids[i]] = partial[i];
}

inline std::vector<SetFunctionTable> all_confined(const Instance& inst) {
  std::vector<SetFunctionTable> tables;
  tables.reserve(inst.num_colors);
  for (int c = 0; c < inst.num_colors; ++c) tables.push_back(confined_table(inst, c));
  return tables;
}

inline std::vector<SetFunctionTable> all_reachable(const Instance& inst) {
  std::vector<SetFunctionTable> tables;
  tables.reserve(inst.num_colors);
  for (int c = 0; c < inst.num_colors; ++c) tables.push_back(reachable_table(inst, c));
  return tables;
}

// Neighborhood bitmask per left vertex.
inline std::vector<uint32_t> left_masks(const Instance& inst) {
  std::vector<uint32_t> masks(inst.n(), 0);
  for (int u = 0; u < inst.n(); ++u) {
    for (int v : inst.left_adj[u]) masks[u] |= uint32_t{1} << v;
  }
  return masks;
}

}  // namespace fairmatch::detail
