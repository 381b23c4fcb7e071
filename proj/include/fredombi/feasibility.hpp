#ifndef FREDOMBI_FEASIBILITY_HPP
#define FREDOMBI_FEASIBILITY_HPP

#include <span>
#include <vector>

#include "fredombi/model.hpp"

namespace fredombi {

inline constexpr double kDefaultFeasTol = 1e-6;

/// The per-row vector x-bar_i: residual_v(b_i, a_ij) on J_i when b_i > 0,
/// 0 where b_i = 0 forces a_ij's column to zero, 1 otherwise.
std::vector<double> row_max_vector(const FreInstance& inst, std::size_t i);

/// The maximum solution X-bar: componentwise min of the row vectors.
SolutionVector max_solution(const FreInstance& inst);

struct FeasibilityReport {
  bool feasible = false;
  SolutionVector x_max;
  std::vector<double> row_residuals;  // |max_j phi(a_ij, Xbar_j) - b_i|
};

/// Feasibility by the maximum-solution criterion: the system is solvable
/// iff X-bar itself satisfies every row within tol.
FeasibilityReport check_feasibility(const FreInstance& inst,
                                    double tol = kDefaultFeasTol);

struct MembershipReport {
  bool feasible = false;
  std::vector<double> row_residuals;
};

/// Direct constraint evaluation at an arbitrary point.
MembershipReport check_membership(const FreInstance& inst,
                                  std::span<const double> x,
                                  double tol = kDefaultFeasTol);

}  // namespace fredombi

#endif
