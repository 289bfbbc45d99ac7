#pragma once

#include "fank/integer.hpp"

#include <optional>
#include <vector>

namespace fank {

/// Rows a with a·x >= b and rows c with c·x = d over free rational variables.
struct LinearSystem {
  std::size_t nvars = 0;
  std::vector<RatVector> ge_rows;
  std::vector<Rational> ge_rhs;
  std::vector<RatVector> eq_rows;
  std::vector<Rational> eq_rhs;

  void add_ge(RatVector row, Rational rhs);
  void add_eq(RatVector row, Rational rhs);
};

/// Some exact solution, or nullopt when the system is infeasible (phase-one simplex, Bland's rule).
std::optional<RatVector> feasible_point(const LinearSystem& system);

struct ExtremeRays {
  std::vector<IntVector> rays;               // primitive
  std::vector<std::vector<std::size_t>> tight;  // per ray, indices of rows with a·z = 0
};

/// Extreme rays of the pointed cone { z in R^k : a·z >= 0 for all rows a }.
/// The rows must have rank k.
ExtremeRays extreme_rays(std::size_t k, const std::vector<IntVector>& rows);

/// Extreme rays of { x in R^n : a·x >= 0, e·x = 0 } when that cone is pointed.
std::vector<IntVector> cone_rays_from_constraints(std::size_t n, const std::vector<IntVector>& inequalities,
                                                  const std::vector<IntVector>& equalities);

}  // namespace fank
