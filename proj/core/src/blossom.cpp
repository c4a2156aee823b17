#include <algorithm>
#include <numeric>
#include <queue>

#include "fairmatch/matchflow.hpp"

namespace fairmatch {

namespace {

// Edmonds' blossom contraction, maximum cardinality version.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(int n, const std::vector<std::pair<int, int>>& edges)
      : n_(n), adj_(n), mate_(n, -1), parent_(n), base_(n), in_queue_(n), in_blossom_(n) {
    for (const auto& [a, b] : edges) {
      if (a == b) continue;
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  std::vector<int> solve() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1) {
        int leaf = find_path(v);
        if (leaf != -1) augment(leaf);
      }
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    int cur = a;
    while (true) {
      cur = base_[cur];
      seen[cur] = true;
      if (mate_[cur] == -1) break;
      cur = parent_[mate_[cur]];
    }
    cur = b;
    while (true) {
      cur = base_[cur];
      if (seen[cur]) return cur;
      cur = parent_[mate_[cur]];
    }
  }

  void mark_path(int v, int root, int child) {
    while (base_[v] != root) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Alternating BFS from an exposed root; returns the far end of an
  // augmenting path, or -1 if none exists.
  int find_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    std::iota(base_.begin(), base_.end(), 0);
    std::queue<int> queue;
    queue.push(root);
    in_queue_[root] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          int joint = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, joint, to);
          mark_path(to, joint, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = joint;
              if (!in_queue_[i]) {
                in_queue_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          if (!in_queue_[mate_[to]]) {
            in_queue_[mate_[to]] = true;
            queue.push(mate_[to]);
          }
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent_[v];
      int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<bool> in_queue_, in_blossom_;
};

}  // namespace

std::vector<int> general_max_matching(const GeneralGraph& g) {
  return BlossomMatcher(g.n, g.edges).solve();
}

std::optional<std::vector<int>> saturating_matching(const GeneralGraph& g,
                                                    const std::vector<bool>& required) {
  // Twin construction: two copies of the graph plus a cross edge per optional
  // vertex.  A perfect matching of the twin graph restricted to the first
  // copy is exactly a matching covering every required vertex.
  GeneralGraph twin;
  twin.n = 2 * g.n;
  for (const auto& [a, b] : g.edges) {
    twin.edges.emplace_back(a, b);
    twin.edges.emplace_back(a + g.n, b + g.n);
  }
  for (int w = 0; w < g.n; ++w) {
    if (!required[w]) twin.edges.emplace_back(w, w + g.n);
  }
  std::vector<int> mate = general_max_matching(twin);
  for (int w = 0; w < twin.n; ++w) {
    if (mate[w] == -1) return std::nullopt;
  }
  std::vector<int> result(g.n, -1);
  for (int w = 0; w < g.n; ++w) {
    if (mate[w] < g.n) result[w] = mate[w];
  }
  return result;
}

}  // namespace fairmatch
