#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fairmatch {

enum class Measure { kMov, kMaxMin };

std::string to_string(Measure m);

// A fair-assignment instance: a bipartite graph with colored left vertices.
// Every left vertex must be assigned to exactly one adjacent right vertex;
// the multiset assigned to each right vertex has to stay within the fairness
// threshold `ell` under `measure`, and within the optional size bounds.
struct Instance {
  int num_colors = 0;
  std::vector<int> left_colors;               // color id per left vertex
  int k = 0;                                  // number of right vertices
  std::vector<std::pair<int, int>> edges;     // (left, right)
  int ell = 0;
  Measure measure = Measure::kMov;
  int size_min = 0;
  std::optional<int> size_max;                // empty = unbounded

  // Derived adjacency, built by finalize().
  std::vector<std::vector<int>> left_adj;     // per left vertex: sorted right ids
  std::vector<std::vector<int>> right_adj;    // per right vertex: sorted left ids

  int n() const { return static_cast<int>(left_colors.size()); }

  // Validates the raw fields and builds adjacency.  Throws
  // std::invalid_argument on structural errors.
  void finalize();
};

Instance make_instance(int num_colors, std::vector<int> left_colors, int k,
                       std::vector<std::pair<int, int>> edges, int ell,
                       Measure measure, int size_min = 0,
                       std::optional<int> size_max = std::nullopt);

struct Matching {
  std::vector<int> assign;  // per left vertex: right vertex id
};

// Color histogram of length num_colors; absent colors count 0.
using CountVector = std::vector<int>;

// Largest count minus second-largest count.  With a single entry the second
// maximum is taken to be 0, so the value equals that entry.
int mov_value(const CountVector& counts);

// Largest count minus smallest count over all entries.
int maxmin_value(const CountVector& counts);

int measure_value(Measure measure, const CountVector& counts);

// Histogram of the colors of the given left vertices.
CountVector counts_of(const Instance& inst, const std::vector<int>& left_vertices);

struct Violation {
  enum class Kind { kBadEdge, kFairness, kSizeMin, kSizeMax };
  Kind kind;
  int right_vertex;  // -1 for kBadEdge entries keyed by the left vertex
  int left_vertex;   // -1 when not applicable
  std::string detail;
};

struct Verdict {
  bool ok = false;
  std::vector<Violation> violations;
};

// Checks edges, fairness of every assigned multiset, and size bounds.
// Throws std::invalid_argument if the assignment length does not match.
Verdict verify(const Instance& inst, const Matching& m);

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;  // e.g. isolated left vertices
};

ValidationReport validate(const Instance& inst);

int max_left_degree(const Instance& inst);
int max_right_degree(const Instance& inst);

// True if every (u, v) pair is an edge.
bool is_complete_bipartite(const Instance& inst);

// Per-color totals over all of U.
CountVector color_totals(const Instance& inst);

}  // namespace fairmatch
