#pragma once

#include <optional>
#include <vector>

namespace fairmatch {

struct BipGraph {
  int n_left = 0;
  int n_right = 0;
  std::vector<std::vector<int>> adj;  // per left vertex: right neighbors
};

// Maximum bipartite matching; returns the matched right vertex per left
// vertex (-1 if unmatched).  Deterministic: lowest-index augmenting first.
std::vector<int> max_bipartite_matching(const BipGraph& g);

// Left-perfect matching with exactly targets[v] left vertices per right
// vertex, or std::nullopt.  Throws std::invalid_argument when the targets do
// not sum to the number of left vertices.
std::optional<std::vector<int>> construct_exact(const BipGraph& g,
                                                const std::vector<int>& targets);

// Left-perfect matching with lo[v] <= |M(v)| <= hi[v], or std::nullopt.
std::optional<std::vector<int>> construct_bounded(const BipGraph& g,
                                                  const std::vector<int>& lo,
                                                  const std::vector<int>& hi);

// Left-perfect matching with |M(v)| <= cap[v], or std::nullopt.
std::optional<std::vector<int>> construct_capped(const BipGraph& g,
                                                 const std::vector<int>& cap);

struct GeneralGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Maximum matching in a general graph (blossom contraction).  Returns the
// mate per vertex (-1 if unmatched).
std::vector<int> general_max_matching(const GeneralGraph& g);

// A matching covering every vertex with required[w] set, or std::nullopt.
// Vertices outside the required set may stay unmatched.
std::optional<std::vector<int>> saturating_matching(const GeneralGraph& g,
                                                    const std::vector<bool>& required);

}  // namespace fairmatch
