#include "fredombi/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fredombi {

std::vector<double> row_max_vector(const FreInstance& inst, std::size_t i) {
  if (i >= inst.m()) throw std::out_of_range("row_max_vector: bad row index");
  std::vector<double> x(inst.n(), 1.0);
  for (std::size_t j = 0; j < inst.n(); ++j) {
    if (inst.zero_rhs(i)) {
      // b_i = 0: any column with a_ij > 0 must be held at zero.
      if (inst.A[i][j] > kZeroThreshold) x[j] = 0.0;
    } else if (inst.A[i][j] >= inst.b[i]) {
      // Top of the residual's rounding band: one ulp of b_i can move the
      // residual by far more than an ulp of x when the composition is flat,
      // and taking the computed midpoint can pull the maximum solution below
      // another row's requirement. Candidates use the bottom of the band for
      // the mirror-image reason.
      x[j] = residual_v_bounded(inst.b[i], inst.A[i][j], inst.lambda).upper;
    }
  }
  return x;
}

SolutionVector max_solution(const FreInstance& inst) {
  std::vector<double> x(inst.n(), 1.0);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const auto row = row_max_vector(inst, i);
    for (std::size_t j = 0; j < inst.n(); ++j) x[j] = std::min(x[j], row[j]);
  }
  return SolutionVector{std::move(x), Role::Maximum};
}

namespace {

std::vector<double> row_residuals_at(const FreInstance& inst,
                                     std::span<const double> x) {
  std::vector<double> res(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    res[i] = std::fabs(dombi_row_composition(inst.A[i], x, inst.lambda) -
                       inst.b[i]);
  }
  return res;
}

bool all_within(const std::vector<double>& res, double tol) {
  return std::all_of(res.begin(), res.end(),
                     [tol](double r) { return r <= tol; });
}

}  // namespace

FeasibilityReport check_feasibility(const FreInstance& inst, double tol) {
  FeasibilityReport rep;
  rep.x_max = max_solution(inst);
  rep.row_residuals = row_residuals_at(inst, rep.x_max.x);
  rep.feasible = all_within(rep.row_residuals, tol);
  return rep;
}

MembershipReport check_membership(const FreInstance& inst,
                                  std::span<const double> x, double tol) {
  if (x.size() != inst.n()) {
    throw std::invalid_argument("check_membership: point has wrong dimension");
  }
  MembershipReport rep;
  rep.row_residuals = row_residuals_at(inst, x);
  rep.feasible = all_within(rep.row_residuals, tol);
  return rep;
}

}  // namespace fredombi
