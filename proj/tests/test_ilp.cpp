#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fairmatch/errors.hpp"
#include "fairmatch/ilp.hpp"

using namespace fairmatch;

TEST_SUITE("ilp") {

TEST_CASE("feasible system yields a satisfying assignment") {
  IlpModel model;
  int x = model.add_var("x", 0, 2);
  int y = model.add_var("y", 0, 2);
  model.add_constraint({{x, 1}, {y, 1}}, Relation::kEq, 3);
  model.add_constraint({{x, 1}, {y, -1}}, Relation::kLe, 1);
  auto solution = solve_feasibility(model);
  REQUIRE(solution.has_value());
  CHECK((*solution)[x] + (*solution)[y] == 3);
  CHECK((*solution)[x] - (*solution)[y] <= 1);
  CHECK((*solution)[x] >= 0);
  CHECK((*solution)[x] <= 2);
}

TEST_CASE("infeasible bounds are detected") {
  IlpModel model;
  int x = model.add_var("x", 0, 2);
  int y = model.add_var("y", 0, 2);
  model.add_constraint({{x, 1}, {y, 1}}, Relation::kGe, 5);
  CHECK(!solve_feasibility(model));
}

TEST_CASE("equality chains propagate through negatives") {
  IlpModel model;
  int x = model.add_var("x", -5, 5);
  int y = model.add_var("y", -5, 5);
  model.add_constraint({{x, 2}, {y, 3}}, Relation::kEq, 1);
  model.add_constraint({{x, 1}}, Relation::kGe, 2);
  auto solution = solve_feasibility(model);
  REQUIRE(solution.has_value());
  CHECK(2 * (*solution)[x] + 3 * (*solution)[y] == 1);
  CHECK((*solution)[x] >= 2);
}

TEST_CASE("variable budget is enforced") {
  IlpModel model;
  IlpLimits limits;
  limits.max_vars = 4;
  for (int i = 0; i < 5; ++i) {
    model.add_var("v" + std::to_string(i), 0, 1);
  }
  CHECK_THROWS_AS(solve_feasibility(model, limits), ResourceError);
}

TEST_CASE("node budget is enforced") {
  IlpModel model;
  IlpLimits limits;
  limits.max_nodes = 2;
  // Parity-constrained knapsack needs branching beyond two nodes.
  std::vector<std::pair<int, long long>> sum;
  for (int i = 0; i < 12; ++i) {
    sum.emplace_back(model.add_var("v" + std::to_string(i), 0, 3), 2 * i + 1);
  }
  model.add_constraint(sum, Relation::kEq, 31);
  CHECK_THROWS_AS(solve_feasibility(model, limits), ResourceError);
}

TEST_CASE("text dump lists variables") {
  IlpModel model;
  model.add_var("count", 0, 7);
  std::string text = model.to_text();
  CHECK(text.find("count") != std::string::npos);
}

}  // TEST_SUITE
