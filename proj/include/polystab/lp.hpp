#pragma once

#include <cstddef>
#include <vector>

#include "polystab/matrix.hpp"

// Exact rational linear programming: dense two-phase simplex with Bland's
// rule. Deterministic; sized for the small systems produced by face
// geometry (tens of variables and rows).
namespace polystab::lp {

enum class Relation { LessEqual, Equal };

struct Constraint {
  Vector coeffs;
  Relation rel = Relation::LessEqual;
  Rational rhs;
};

struct Problem {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  Vector objective;                // maximized; empty means "feasibility only"
  std::vector<bool> nonnegative;   // per variable; empty means every variable is free
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;  // objective at the optimum
  Vector x;        // a basic optimal (or feasible) point
};

Solution maximize(const Problem& problem);

}  // namespace polystab::lp
