#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairmatch/errors.hpp"

namespace fairmatch {

enum class Relation { kLe, kGe, kEq };

struct LinearConstraint {
  std::vector<std::pair<int, long long>> terms;  // (variable, coefficient)
  Relation relation;
  long long rhs;
};

// A feasibility model over bounded integer variables.
class IlpModel {
 public:
  int add_var(std::string name, long long lo, long long hi);
  void add_constraint(std::vector<std::pair<int, long long>> terms,
                      Relation relation, long long rhs);

  int var_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<long long>& lower() const { return lo_; }
  const std::vector<long long>& upper() const { return hi_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  // Textual LP-style listing for human inspection.
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<long long> lo_, hi_;
  std::vector<LinearConstraint> constraints_;
};

struct IlpLimits {
  int max_vars = 512;
  long long max_nodes = 20'000'000;
};

// Complete search: interval propagation to a fixpoint, then branch by domain
// bisection on the tightest unfixed variable.  Deterministic.  Returns one
// feasible assignment or std::nullopt when the model is infeasible; throws
// ResourceError when a budget is exceeded.
std::optional<std::vector<long long>> solve_feasibility(
    const IlpModel& model, const IlpLimits& limits = {});

}  // namespace fairmatch
