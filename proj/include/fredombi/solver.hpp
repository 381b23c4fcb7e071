#ifndef FREDOMBI_SOLVER_HPP
#define FREDOMBI_SOLVER_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fredombi/candidates.hpp"

namespace fredombi {

/// Sign split of the objective: c = c_plus + c_minus, c_plus >= 0 >= c_minus,
/// disjoint supports.
struct CostSplit {
  std::vector<double> plus;
  std::vector<double> minus;
};

CostSplit split_costs(std::span<const double> c);

/// Lower bound of a partial assignment: c_plus . partial_x. Valid because
/// the partial vector only grows componentwise as rows are assigned.
double node_lower_bound(std::span<const double> c_plus,
                        std::span<const double> partial_x);

enum class BranchOrder {
  PaperOrder,        // rows in natural order, skipping b_i = 0
  SmallestSetFirst,  // ascending |J-bar_i| (fail-first heuristic)
};

enum class NodeStatus { Expanded, Candidate, Pruned };

struct TraceEvent {
  std::size_t node = 0;       // creation index, root = 0
  std::ptrdiff_t parent = -1;
  std::size_t depth = 0;      // rows assigned so far
  std::size_t column = 0;     // 1-based chosen column, 0 for the root
  double bound = 0.0;         // exact z1 at full depth
  NodeStatus status = NodeStatus::Expanded;
};

struct BnbStats {
  std::size_t nodes_created = 0;
  std::size_t nodes_expanded = 0;
  std::size_t nodes_pruned = 0;
};

struct BnbResult {
  Assignment e_star;
  SolutionVector x_min;  // X(e*), role Candidate
  double z1 = 0.0;
  BnbStats stats;
};

/// A structural expectation broken at runtime (e.g. a winning candidate that
/// fails the final membership guard).
struct TheoryViolation : std::runtime_error {
  explicit TheoryViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// Best-first search over row assignments, frontier keyed by
/// (lower_bound, creation index). Children are generated in ascending column
/// order; nodes whose bound reaches the incumbent are pruned; equal-z1
/// candidates resolve to the lexicographically smallest assignment. The
/// winner must pass a final membership check.
BnbResult branch_and_bound(const FreInstance& inst, const ReducedSystem& rs,
                           const CostSplit& cs,
                           BranchOrder order = BranchOrder::PaperOrder,
                           std::vector<TraceEvent>* trace = nullptr,
                           double tol = kDefaultFeasTol);

/// Componentwise recombination: the maximum solution where c_j <= 0, the
/// minimal candidate where c_j > 0. Returns the point and c . x.
std::pair<SolutionVector, double> combine_optimum(const SolutionVector& x_max,
                                                  const SolutionVector& x_min,
                                                  std::span<const double> c);

struct SolveReport {
  bool feasible = false;
  SolutionVector x_max;
  std::vector<double> row_residuals;
  Assignment e_star;
  SolutionVector x_min_star;
  double z1_star = 0.0;
  SolutionVector x_opt;
  double z_opt = 0.0;
  BnbStats stats;
  BigInt size_original;
  BigInt size_reduced;
};

struct SolveOptions {
  double tol = kDefaultFeasTol;
  BranchOrder order = BranchOrder::PaperOrder;
  std::vector<TraceEvent>* trace = nullptr;
};

/// The full pipeline: maximum solution, feasibility, matrix simplification,
/// branch-and-bound on the nonnegative cost part, recombination.
SolveReport solve(const FreInstance& inst, const SolveOptions& opts = {});

}  // namespace fredombi

#endif
