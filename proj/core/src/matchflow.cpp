#include "fairmatch/matchflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace fairmatch {

namespace {

bool try_augment(const BipGraph& g, int u, std::vector<int>& mate_right,
                 std::vector<bool>& visited) {
  for (int v : g.adj[u]) {
    if (visited[v]) continue;
    visited[v] = true;
    if (mate_right[v] == -1 || try_augment(g, mate_right[v], mate_right, visited)) {
      mate_right[v] = u;
      return true;
    }
  }
  return false;
}

// Dinic max flow on a small dense-enough network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1), level_(n), iter_(n) {}

  int add_edge(int from, int to, long long cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    return id;
  }

  long long flow_on(int id) const { return cap_[id ^ 1]; }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) total += f;
    }
    return total;
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id = head_[v]; id != -1; id = next_[id]) {
        if (cap_[id] > 0 && level_[to_[id]] < 0) {
          level_[to_[id]] = level_[v] + 1;
          q.push(to_[id]);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (int& id = iter_[v]; id != -1; id = next_[id]) {
      int to = to_[id];
      if (cap_[id] > 0 && level_[to] == level_[v] + 1) {
        long long got = dfs(to, t, std::min(limit, cap_[id]));
        if (got > 0) {
          cap_[id] -= got;
          cap_[id ^ 1] += got;
          return got;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_, level_, iter_, to_, next_;
  std::vector<long long> cap_;
};

}  // namespace

std::vector<int> max_bipartite_matching(const BipGraph& g) {
  std::vector<int> mate_right(g.n_right, -1);
  for (int u = 0; u < g.n_left; ++u) {
    std::vector<bool> visited(g.n_right, false);
    try_augment(g, u, mate_right, visited);
  }
  std::vector<int> mate_left(g.n_left, -1);
  for (int v = 0; v < g.n_right; ++v) {
    if (mate_right[v] != -1) mate_left[mate_right[v]] = v;
  }
  return mate_left;
}

std::optional<std::vector<int>> construct_exact(const BipGraph& g,
                                                const std::vector<int>& targets) {
  if (static_cast<int>(targets.size()) != g.n_right) {
    throw std::invalid_argument("targets size must match right side");
  }
  long long total = 0;
  for (int t : targets) {
    if (t < 0) throw std::invalid_argument("negative target");
    total += t;
  }
  if (total != g.n_left) {
    throw std::invalid_argument("targets must sum to the left side size");
  }
  // Expand each right vertex into targets[v] slots and match left-perfectly.
  std::vector<int> slot_owner;
  std::vector<int> first_slot(g.n_right, 0);
  for (int v = 0; v < g.n_right; ++v) {
    first_slot[v] = static_cast<int>(slot_owner.size());
    for (int i = 0; i < targets[v]; ++i) slot_owner.push_back(v);
  }
  BipGraph expanded;
  expanded.n_left = g.n_left;
  expanded.n_right = static_cast<int>(slot_owner.size());
  expanded.adj.resize(g.n_left);
  for (int u = 0; u < g.n_left; ++u) {
    for (int v : g.adj[u]) {
      for (int i = 0; i < targets[v]; ++i) {
        expanded.adj[u].push_back(first_slot[v] + i);
      }
    }
  }
  std::vector<int> mate = max_bipartite_matching(expanded);
  std::vector<int> assign(g.n_left, -1);
  for (int u = 0; u < g.n_left; ++u) {
    if (mate[u] == -1) return std::nullopt;
    assign[u] = slot_owner[mate[u]];
  }
  return assign;
}

std::optional<std::vector<int>> construct_bounded(const BipGraph& g,
                                                  const std::vector<int>& lo,
                                                  const std::vector<int>& hi) {
  if (static_cast<int>(lo.size()) != g.n_right ||
      static_cast<int>(hi.size()) != g.n_right) {
    throw std::invalid_argument("bounds size must match right side");
  }
  for (int v = 0; v < g.n_right; ++v) {
    if (lo[v] < 0 || lo[v] > hi[v]) return std::nullopt;
  }
  // Circulation with lower bounds: S->u [1,1], u->v [0,1], v->T [lo,hi],
  // T->S unbounded; standard excess transformation.
  int s = g.n_left + g.n_right, t = s + 1, ss = t + 1, tt = ss + 1;
  FlowNetwork net(tt + 1);
  std::vector<long long> excess(tt + 1, 0);
  for (int u = 0; u < g.n_left; ++u) {
    // S->u with bounds [1,1] contributes excess only.
    excess[u] += 1;
    excess[s] -= 1;
  }
  std::vector<std::vector<int>> ids_per_left(g.n_left);
  for (int u = 0; u < g.n_left; ++u) {
    for (int v : g.adj[u]) {
      int id = net.add_edge(u, g.n_left + v, 1);
      ids_per_left[u].push_back(id);
    }
  }
  for (int v = 0; v < g.n_right; ++v) {
    net.add_edge(g.n_left + v, t, hi[v] - lo[v]);
    excess[t] += lo[v];
    excess[g.n_left + v] -= lo[v];
  }
  net.add_edge(t, s, static_cast<long long>(g.n_left));
  long long need = 0;
  for (int v = 0; v <= tt; ++v) {
    if (excess[v] > 0) {
      net.add_edge(ss, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      net.add_edge(v, tt, -excess[v]);
    }
  }
  if (net.max_flow(ss, tt) != need) return std::nullopt;
  std::vector<int> assign(g.n_left, -1);
  for (int u = 0; u < g.n_left; ++u) {
    for (size_t i = 0; i < ids_per_left[u].size(); ++i) {
      if (net.flow_on(ids_per_left[u][i]) > 0) {
        assign[u] = g.adj[u][i];
        break;
      }
    }
    if (assign[u] == -1) return std::nullopt;
  }
  return assign;
}

std::optional<std::vector<int>> construct_capped(const BipGraph& g,
                                                 const std::vector<int>& cap) {
  return construct_bounded(g, std::vector<int>(g.n_right, 0), cap);
}

}  // namespace fairmatch
