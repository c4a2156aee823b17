#include "fairmatch/ilp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fairmatch {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

// Normalized form: sum of terms <= rhs.
struct LeConstraint {
  std::vector<std::pair<int, long long>> terms;
  long long rhs;
};

}  // namespace

int IlpModel::add_var(std::string name, long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("variable with empty domain: " + name);
  names_.push_back(std::move(name));
  lo_.push_back(lo);
  hi_.push_back(hi);
  return static_cast<int>(names_.size()) - 1;
}

void IlpModel::add_constraint(std::vector<std::pair<int, long long>> terms,
                              Relation relation, long long rhs) {
  for (const auto& [var, coeff] : terms) {
    (void)coeff;
    if (var < 0 || var >= var_count()) {
      throw std::invalid_argument("constraint references unknown variable");
    }
  }
  constraints_.push_back({std::move(terms), relation, rhs});
}

std::string IlpModel::to_text() const {
  std::ostringstream out;
  out << "subject to\n";
  for (const auto& c : constraints_) {
    bool first = true;
    for (const auto& [var, coeff] : c.terms) {
      if (coeff >= 0 && !first) out << "+ ";
      if (coeff == -1) {
        out << "- ";
      } else if (coeff != 1) {
        out << coeff << " ";
      }
      out << names_[var] << " ";
      first = false;
    }
    if (first) out << "0 ";
    switch (c.relation) {
      case Relation::kLe: out << "<= "; break;
      case Relation::kGe: out << ">= "; break;
      case Relation::kEq: out << "= "; break;
    }
    out << c.rhs << "\n";
  }
  out << "bounds\n";
  for (int i = 0; i < var_count(); ++i) {
    out << lo_[i] << " <= " << names_[i] << " <= " << hi_[i] << "\n";
  }
  return out.str();
}

std::optional<std::vector<long long>> solve_feasibility(const IlpModel& model,
                                                        const IlpLimits& limits) {
  if (model.var_count() > limits.max_vars) {
    throw ResourceError("ilp model exceeds variable budget");
  }

  std::vector<LeConstraint> rows;
  for (const auto& c : model.constraints()) {
    LeConstraint le{c.terms, c.rhs};
    if (c.relation == Relation::kLe || c.relation == Relation::kEq) {
      rows.push_back(le);
    }
    if (c.relation == Relation::kGe || c.relation == Relation::kEq) {
      LeConstraint flipped{c.terms, -c.rhs};
      for (auto& [var, coeff] : flipped.terms) {
        (void)var;
        coeff = -coeff;
      }
      rows.push_back(std::move(flipped));
    }
  }

  int n = model.var_count();
  long long nodes = 0;

  // Returns false if some row proves the boxed domain empty.
  auto propagate = [&](std::vector<long long>& lo, std::vector<long long>& hi) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& row : rows) {
        long long min_act = 0;
        for (const auto& [var, coeff] : row.terms) {
          min_act += coeff > 0 ? coeff * lo[var] : coeff * hi[var];
        }
        if (min_act > row.rhs) return false;
        long long slack = row.rhs - min_act;
        for (const auto& [var, coeff] : row.terms) {
          if (coeff > 0) {
            long long bound = lo[var] + floor_div(slack, coeff);
            if (bound < hi[var]) {
              hi[var] = bound;
              changed = true;
            }
          } else if (coeff < 0) {
            long long bound = hi[var] + ceil_div(slack, coeff);
            if (bound > lo[var]) {
              lo[var] = bound;
              changed = true;
            }
          }
          if (lo[var] > hi[var]) return false;
        }
      }
    }
    return true;
  };

  auto satisfied = [&](const std::vector<long long>& x) {
    for (const auto& row : rows) {
      long long act = 0;
      for (const auto& [var, coeff] : row.terms) act += coeff * x[var];
      if (act > row.rhs) return false;
    }
    return true;
  };

  std::vector<long long> lo = model.lower(), hi = model.upper();

  auto search = [&](auto&& self, std::vector<long long> lo,
                    std::vector<long long> hi) -> std::optional<std::vector<long long>> {
    if (++nodes > limits.max_nodes) throw ResourceError("ilp node budget exceeded");
    if (!propagate(lo, hi)) return std::nullopt;
    int pick = -1;
    long long width = 0;
    for (int i = 0; i < n; ++i) {
      long long w = hi[i] - lo[i];
      if (w > 0 && (pick == -1 || w < width)) {
        pick = i;
        width = w;
      }
    }
    if (pick == -1) {
      if (satisfied(lo)) return lo;
      return std::nullopt;
    }
    long long mid = lo[pick] + (hi[pick] - lo[pick]) / 2;
    {
      auto branch_lo = lo;
      auto branch_hi = hi;
      branch_hi[pick] = mid;
      if (auto got = self(self, std::move(branch_lo), std::move(branch_hi))) return got;
    }
    lo[pick] = mid + 1;
    return self(self, std::move(lo), std::move(hi));
  };

  return search(search, std::move(lo), std::move(hi));
}

}  // namespace fairmatch
