#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fairmatch/model.hpp"
#include "fairmatch/poly.hpp"

namespace fairmatch {

std::vector<std::vector<std::pair<int, int>>> kappa_partition(int alpha,
                                                              int kappa) {
  if (alpha < 1 || kappa < 1 || 2 * kappa > 3 * alpha) {
    throw std::invalid_argument("partition parameters out of range");
  }
  std::vector<std::vector<std::pair<int, int>>> parts;
  if (kappa <= alpha) {
    // kappa - 1 full triples; the remainder stays balanced as one set.
    for (int j = 1; j < kappa; ++j) {
      parts.push_back({{0, j}, {1, j}, {2, j}});
    }
    std::vector<std::pair<int, int>> rest;
    for (int j = kappa; j <= alpha; ++j) {
      rest.push_back({0, j});
      rest.push_back({1, j});
      rest.push_back({2, j});
    }
    parts.push_back(std::move(rest));
    return parts;
  }
  if (alpha == 2) {
    // kappa == 3: three mixed pairs.
    return {{{0, 1}, {1, 2}}, {{1, 1}, {2, 2}}, {{2, 1}, {0, 2}}};
  }
  if (alpha % 2 == 1) {
    parts = kappa_partition(alpha - 1, kappa - 1);
    parts.push_back({{0, alpha}, {1, alpha}, {2, alpha}});
    return parts;
  }
  parts = kappa_partition(alpha - 2, kappa - 3);
  parts.push_back({{0, alpha - 1}, {1, alpha}});
  parts.push_back({{1, alpha - 1}, {2, alpha}});
  parts.push_back({{2, alpha - 1}, {0, alpha}});
  return parts;
}

namespace {

// Colors ordered by count descending, id ascending; `rank[i]` is the color id
// of the (i+1)-st most frequent color.
std::vector<int> color_ranking(const std::vector<int>& counts) {
  std::vector<int> rank(counts.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
    return counts[a] > counts[b];
  });
  return rank;
}

Instance implied_instance(const std::vector<int>& counts, int k, int ell,
                          Measure measure, bool nonempty) {
  std::vector<int> cols;
  for (size_t c = 0; c < counts.size(); ++c) {
    cols.insert(cols.end(), counts[c], static_cast<int>(c));
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t u = 0; u < cols.size(); ++u) {
    for (int v = 0; v < k; ++v) edges.push_back({static_cast<int>(u), v});
  }
  return make_instance(static_cast<int>(counts.size()), std::move(cols), k,
                       std::move(edges), ell, measure, nonempty ? 1 : 0);
}

// Shares as per-(color, right-vertex) totals; turned into an assignment by
// walking each color's vertices in id order.
class ShareBuilder {
 public:
  ShareBuilder(const std::vector<int>& counts, int k)
      : counts_(counts), shares_(counts.size(), std::vector<int>(k, 0)) {}

  void add(int color, int v, int amount) { shares_[color][v] += amount; }
  void move(int color, int from, int to, int amount) {
    shares_[color][from] -= amount;
    shares_[color][to] += amount;
  }
  int at(int color, int v) const { return shares_[color][v]; }
  int share_size(int v) const {
    int total = 0;
    for (const auto& row : shares_) total += row[v];
    return total;
  }
  int assigned_total(int color) const {
    int total = 0;
    for (int x : shares_[color]) total += x;
    return total;
  }

  Matching to_matching() const {
    std::vector<int> assign;
    for (size_t c = 0; c < counts_.size(); ++c) {
      for (int v = 0; v < static_cast<int>(shares_[c].size()); ++v) {
        assign.insert(assign.end(), shares_[c][v], v);
      }
    }
    return Matching{std::move(assign)};
  }

 private:
  std::vector<int> counts_;
  std::vector<std::vector<int>> shares_;
};

SolveResult finish_complete(const Instance& implied, const ShareBuilder& shares) {
  Matching m = shares.to_matching();
  if (!verify(implied, m).ok) {
    throw std::logic_error("closed-form witness failed verification");
  }
  return SolveResult::yes(std::move(m));
}

}  // namespace

SolveResult solve_complete_mov(const std::vector<int>& counts, int k, int ell,
                               bool nonempty) {
  if (k <= 0 || ell < 0) throw std::invalid_argument("bad parameters");
  const int colors = static_cast<int>(counts.size());
  if (colors == 0) throw std::invalid_argument("no colors");
  const long long n = std::accumulate(counts.begin(), counts.end(), 0LL);
  std::vector<int> rank = color_ranking(counts);
  auto cnt = [&](int i) {
    return i < colors ? counts[rank[i]] : 0;
  };  // i-th largest, 0-based

  long long rhs = static_cast<long long>(ell) * k;
  for (int i = 1; i <= k; ++i) rhs += cnt(i);
  if (cnt(0) > rhs) return SolveResult::no();
  if (nonempty) {
    if (ell > 0 && n < k) return SolveResult::no();
    if (ell == 0 && n < 2 * k) return SolveResult::no();
  }
  if (n == 0) return SolveResult::yes(Matching{});

  Instance implied = implied_instance(counts, k, ell, Measure::kMov, nonempty);
  ShareBuilder shares(counts, k);

  // Pair the top color against successive runner-up colors, one right vertex
  // at a time, then park the leftovers on the first vertex.
  std::vector<int> left(colors);
  for (int c = 0; c < colors; ++c) left[c] = counts[c];
  int top = rank[0];
  int i = 1;
  while (i <= k && left[top] >= (i < colors ? left[rank[i]] : 0) + ell) {
    int partner = i < colors ? rank[i] : -1;
    int amount = partner >= 0 ? left[partner] : 0;
    shares.add(top, i - 1, amount + ell);
    left[top] -= amount + ell;
    if (partner >= 0) {
      shares.add(partner, i - 1, amount);
      left[partner] = 0;
    }
    ++i;
  }
  if (left[top] > 0) {
    if (i > k) throw std::logic_error("head color exceeds decided capacity");
    int partner = i < colors ? rank[i] : -1;
    int amount = partner >= 0 ? std::min(left[partner], left[top]) : 0;
    if (partner >= 0) {
      shares.add(partner, i - 1, amount);
      left[partner] -= amount;
    }
    shares.add(top, i - 1, left[top]);
    left[top] = 0;
  }
  for (int c = 0; c < colors; ++c) {
    shares.add(c, 0, left[c]);
    left[c] = 0;
  }

  if (!nonempty) return finish_complete(implied, shares);

  // Fill the empty right vertices.  Above a zero threshold one vertex of the
  // locally most frequent color can always be peeled off.
  auto empties = [&] {
    std::vector<int> out;
    for (int v = 0; v < k; ++v) {
      if (shares.share_size(v) == 0) out.push_back(v);
    }
    return out;
  };
  if (ell > 0) {
    for (int v : empties()) {
      int donor = -1, donor_color = -1;
      for (int w = 0; w < k; ++w) {
        if (shares.share_size(w) < 2) continue;
        int best = -1;
        for (int c = 0; c < colors; ++c) {
          if (best == -1 || shares.at(c, w) > shares.at(best, w)) best = c;
        }
        donor = w;
        donor_color = best;
        break;
      }
      if (donor == -1) throw std::logic_error("no donor share available");
      shares.move(donor_color, donor, v, 1);
    }
    return finish_complete(implied, shares);
  }

  // Zero threshold: every share is perfectly balanced.  Rebalance pairs out
  // of the two-color shares and the head share, then split what remains of
  // the head share into balanced sets.
  int c1 = rank[0], c2 = colors > 1 ? rank[1] : -1;
  while (true) {
    std::vector<int> empty_vs = empties();
    if (empty_vs.empty()) return finish_complete(implied, shares);
    int target = empty_vs.front();
    // A two-color share beyond one pair can donate a pair.
    int donor = -1;
    for (int w = 1; w < k; ++w) {
      if (shares.share_size(w) > 2) {
        donor = w;
        break;
      }
    }
    if (donor != -1) {
      int first = -1, second = -1;
      for (int c = 0; c < colors; ++c) {
        if (shares.at(c, donor) > 0) (first == -1 ? first : second) = c;
      }
      if (second == -1) throw std::logic_error("tail share is not a pair");
      shares.move(first, donor, target, 1);
      shares.move(second, donor, target, 1);
      continue;
    }
    // Count the colors present on the head share.
    std::vector<int> present;
    for (int c = 0; c < colors; ++c) {
      if (shares.at(c, 0) > 0) present.push_back(c);
    }
    if (present.size() >= 4) {
      int first = -1, second = -1;
      for (int c : present) {
        if (c == c1 || c == c2) continue;
        (first == -1 ? first : second) = c;
        if (second != -1) break;
      }
      shares.move(first, 0, target, 1);
      shares.move(second, 0, target, 1);
      continue;
    }
    if (present.size() == 3) {
      int other = -1;
      for (int c : present) {
        if (c != c1 && c != c2) other = c;
      }
      if (shares.at(c1, 0) == shares.at(c2, 0) &&
          shares.at(c1, 0) > shares.at(other, 0)) {
        shares.move(c1, 0, target, 1);
        shares.move(c2, 0, target, 1);
        continue;
      }
      // All three counts tie; hand out balanced sets from the partition.
      if (shares.at(c1, 0) != shares.at(c2, 0) ||
          shares.at(c1, 0) != shares.at(other, 0)) {
        throw std::logic_error("head share lost its balance invariant");
      }
      int alpha = shares.at(c1, 0);
      int kappa = static_cast<int>(empty_vs.size()) + 1;
      auto parts = kappa_partition(alpha, kappa);
      std::vector<int> owners = {0};
      owners.insert(owners.end(), empty_vs.begin(), empty_vs.end());
      std::vector<int> class_color = {c1, c2, other};
      for (int c : class_color) shares.add(c, 0, -shares.at(c, 0));
      for (size_t j = 0; j < parts.size(); ++j) {
        for (auto [cls, copy] : parts[j]) {
          shares.add(class_color[cls], owners[j], 1);
        }
      }
      continue;
    }
    // Exactly two colors remain on the head share; donate one pair.
    if (present.size() != 2) {
      throw std::logic_error("head share lost its pair structure");
    }
    shares.move(present[0], 0, target, 1);
    shares.move(present[1], 0, target, 1);
  }
}

SolveResult solve_complete_maxmin(const std::vector<int>& counts, int k, int ell,
                                  bool nonempty) {
  if (k <= 0 || ell < 0) throw std::invalid_argument("bad parameters");
  const int colors = static_cast<int>(counts.size());
  if (colors == 0) throw std::invalid_argument("no colors");
  const long long n = std::accumulate(counts.begin(), counts.end(), 0LL);
  int most = *std::max_element(counts.begin(), counts.end());
  int least = *std::min_element(counts.begin(), counts.end());

  if (most > static_cast<long long>(ell) * k + least) return SolveResult::no();
  if (nonempty) {
    if (ell > 0 && n < k) return SolveResult::no();
    if (ell == 0 && most < k) return SolveResult::no();
  }
  if (n == 0) return SolveResult::yes(Matching{});

  Instance implied = implied_instance(counts, k, ell, Measure::kMaxMin, nonempty);
  ShareBuilder shares(counts, k);

  if (!nonempty || most >= k) {
    // Distribute each color round-robin from the first right vertex.
    for (int c = 0; c < colors; ++c) {
      for (int v = 0; v < k; ++v) {
        shares.add(c, v, counts[c] / k + (v < counts[c] % k ? 1 : 0));
      }
    }
  } else {
    // Every color is scarcer than k and the threshold is positive: cycle
    // through the right vertices globally so shares get at most one of each
    // color and no vertex stays empty.
    int v = 0;
    for (int c = 0; c < colors; ++c) {
      for (int i = 0; i < counts[c]; ++i) {
        shares.add(c, v, 1);
        v = (v + 1) % k;
      }
    }
  }
  return finish_complete(implied, shares);
}

SolveResult solve_complete(const Instance& inst) {
  if (!is_complete_bipartite(inst)) {
    throw std::invalid_argument("instance is not complete bipartite");
  }
  if (inst.size_min > 1 || inst.size_max) {
    throw std::invalid_argument("solver supports at most the nonempty size bound");
  }
  bool nonempty = inst.size_min == 1;
  CountVector counts = color_totals(inst);
  SolveResult res = inst.measure == Measure::kMov
                        ? solve_complete_mov(counts, inst.k, inst.ell, nonempty)
                        : solve_complete_maxmin(counts, inst.k, inst.ell, nonempty);
  if (res.status != SolveStatus::kYes) return res;

  // The witness orders left vertices color-major; map back to instance ids.
  std::vector<std::vector<int>> by_color(inst.num_colors);
  for (int u = 0; u < inst.n(); ++u) by_color[inst.left_colors[u]].push_back(u);
  std::vector<int> assign(inst.n(), -1);
  int pos = 0;
  for (int c = 0; c < inst.num_colors; ++c) {
    for (int u : by_color[c]) assign[u] = res.matching->assign[pos++];
  }
  Matching m{std::move(assign)};
  if (!verify(inst, m).ok) {
    throw std::logic_error("complete-bipartite witness failed verification");
  }
  return SolveResult::yes(std::move(m));
}

}  // namespace fairmatch
