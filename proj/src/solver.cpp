#include "fredombi/solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace fredombi {

CostSplit split_costs(std::span<const double> c) {
  CostSplit cs;
  cs.plus.resize(c.size());
  cs.minus.resize(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    cs.plus[j] = std::max(c[j], 0.0);
    cs.minus[j] = std::min(c[j], 0.0);
  }
  return cs;
}

double node_lower_bound(std::span<const double> c_plus,
                        std::span<const double> partial_x) {
  if (c_plus.size() != partial_x.size()) {
    throw std::invalid_argument("node_lower_bound: length mismatch");
  }
  double z = 0.0;
  for (std::size_t j = 0; j < c_plus.size(); ++j) {
    z += c_plus[j] * partial_x[j];
  }
  return z;
}

namespace {

struct Node {
  std::ptrdiff_t parent = -1;
  std::size_t depth = 0;
  std::size_t column = 0;  // 0-based column chosen at this node
  double bound = 0.0;
  std::vector<double> partial_x;
};

struct FrontierEntry {
  double bound;
  std::size_t index;
  bool operator>(const FrontierEntry& o) const {
    if (bound != o.bound) return bound > o.bound;
    return index > o.index;  // equal bounds: FIFO by creation
  }
};

}  // namespace

BnbResult branch_and_bound(const FreInstance& inst, const ReducedSystem& rs,
                           const CostSplit& cs, BranchOrder order,
                           std::vector<TraceEvent>* trace, double tol) {
  std::vector<std::size_t> branch_rows;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (inst.zero_rhs(i)) continue;
    if (rs.j_bar.sets[i].empty()) {
      std::ostringstream msg;
      msg << "row " << i + 1
          << " has an empty reduced index set on a feasible instance";
      throw TheoryViolation(msg.str());
    }
    branch_rows.push_back(i);
  }
  if (order == BranchOrder::SmallestSetFirst) {
    std::stable_sort(branch_rows.begin(), branch_rows.end(),
                     [&](std::size_t a, std::size_t b) {
                       return rs.j_bar.sets[a].size() < rs.j_bar.sets[b].size();
                     });
  }
  const std::size_t full_depth = branch_rows.size();

  std::vector<Node> arena;
  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>,
                      std::greater<FrontierEntry>>
      frontier;
  BnbResult res;
  res.z1 = std::numeric_limits<double>::infinity();
  bool have_incumbent = false;

  arena.push_back(Node{-1, 0, 0, 0.0, std::vector<double>(inst.n(), 0.0)});
  frontier.push({0.0, 0});
  res.stats.nodes_created = 1;

  auto emit = [&](std::size_t idx, NodeStatus status) {
    if (!trace) return;
    const Node& nd = arena[idx];
    trace->push_back(TraceEvent{idx, nd.parent, nd.depth,
                                nd.depth == 0 ? 0 : nd.column + 1, nd.bound,
                                status});
  };

  while (!frontier.empty()) {
    const std::size_t idx = frontier.top().index;
    frontier.pop();
    const double bound = arena[idx].bound;

    if (arena[idx].depth == full_depth) {
      // Complete assignment; the bound is its exact z1.
      emit(idx, NodeStatus::Candidate);
      Assignment e;
      e.cols.assign(inst.m(), kUnconstrained);
      for (std::ptrdiff_t walk = static_cast<std::ptrdiff_t>(idx);
           arena[walk].depth > 0; walk = arena[walk].parent) {
        e.cols[branch_rows[arena[walk].depth - 1]] = arena[walk].column;
      }
      if (bound < res.z1 ||
          (have_incumbent && bound == res.z1 && lex_less(e, res.e_star))) {
        // The reduced sets keep near-tied entries rather than risking a
        // wrong deletion, so the occasional assembled candidate can violate
        // the equations (one row forcing a coordinate another row caps
        // below it). Skip those; the true optimum is still enumerated.
        if (!check_membership(inst, arena[idx].partial_x, tol).feasible) {
          continue;
        }
        res.z1 = bound;
        res.e_star = std::move(e);
        res.x_min = SolutionVector{arena[idx].partial_x, Role::Candidate};
        have_incumbent = true;
      }
      continue;
    }

    if (have_incumbent && bound >= res.z1) {
      emit(idx, NodeStatus::Pruned);
      ++res.stats.nodes_pruned;
      continue;
    }

    emit(idx, NodeStatus::Expanded);
    ++res.stats.nodes_expanded;
    const std::size_t row = branch_rows[arena[idx].depth];
    for (std::size_t j : rs.j_bar.sets[row]) {
      Node child;
      child.parent = static_cast<std::ptrdiff_t>(idx);
      child.depth = arena[idx].depth + 1;
      child.column = j;
      child.partial_x = arena[idx].partial_x;
      child.partial_x[j] =
          std::max(child.partial_x[j],
                   residual_v_floor(inst.b[row], inst.A[row][j], inst.lambda));
      child.bound = node_lower_bound(cs.plus, child.partial_x);
      arena.push_back(std::move(child));
      frontier.push({arena.back().bound, arena.size() - 1});
      ++res.stats.nodes_created;
    }
  }

  if (!have_incumbent) {
    throw TheoryViolation(
        "branch and bound finished without a feasible candidate");
  }
  if (!check_membership(inst, res.x_min.x, tol).feasible) {
    throw TheoryViolation(
        "winning candidate failed the final membership check");
  }
  return res;
}

std::pair<SolutionVector, double> combine_optimum(const SolutionVector& x_max,
                                                  const SolutionVector& x_min,
                                                  std::span<const double> c) {
  if (x_max.x.size() != c.size() || x_min.x.size() != c.size()) {
    throw std::invalid_argument("combine_optimum: length mismatch");
  }
  SolutionVector x_opt;
  x_opt.role = Role::Optimum;
  x_opt.x.resize(c.size());
  double z = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    x_opt.x[j] = c[j] <= 0.0 ? x_max.x[j] : x_min.x[j];
    z += c[j] * x_opt.x[j];
  }
  return {std::move(x_opt), z};
}

SolveReport solve(const FreInstance& inst, const SolveOptions& opts) {
  SolveReport rep;
  auto feas = check_feasibility(inst, opts.tol);
  rep.x_max = std::move(feas.x_max);
  rep.row_residuals = std::move(feas.row_residuals);
  rep.feasible = feas.feasible;
  if (!rep.feasible) return rep;

  const auto rs = simplify_matrix(inst);
  rep.size_original = rs.size_original;
  rep.size_reduced = rs.size_reduced;

  const auto cs = split_costs(inst.c);
  auto bnb = branch_and_bound(inst, rs, cs, opts.order, opts.trace, opts.tol);
  rep.e_star = std::move(bnb.e_star);
  rep.x_min_star = std::move(bnb.x_min);
  rep.z1_star = bnb.z1;
  rep.stats = bnb.stats;

  auto [x_opt, z_opt] = combine_optimum(rep.x_max, rep.x_min_star, inst.c);
  rep.x_opt = std::move(x_opt);
  rep.z_opt = z_opt;
  return rep;
}

}  // namespace fredombi
