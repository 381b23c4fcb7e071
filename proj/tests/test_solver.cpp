#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "fredombi/solver.hpp"

using namespace fredombi;

namespace {

void check_close(const std::vector<double>& got,
                 const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t j = 0; j < got.size(); ++j) {
    CHECK(std::fabs(got[j] - want[j]) <= tol);
  }
}

bool has_bound(const std::vector<TraceEvent>& trace, double bound,
               double tol) {
  for (const auto& ev : trace) {
    if (std::fabs(ev.bound - bound) <= tol) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("cost split") {
  const std::vector<double> c{6.2944, 8.1158, -7.4602, 8.2675, 2.6471,
                              -8.0491};
  const auto cs = split_costs(c);
  CHECK(cs.plus == std::vector<double>{6.2944, 8.1158, 0, 8.2675, 2.6471, 0});
  CHECK(cs.minus == std::vector<double>{0, 0, -7.4602, 0, 0, -8.0491});
  for (std::size_t j = 0; j < c.size(); ++j) {
    CHECK(cs.plus[j] + cs.minus[j] == c[j]);
    CHECK(cs.plus[j] * cs.minus[j] == 0.0);
  }

  const auto neg = split_costs(std::vector<double>{-1.0, -2.0});
  CHECK(neg.plus == std::vector<double>{0.0, 0.0});
  const auto zero = split_costs(std::vector<double>{0.0});
  CHECK(zero.plus == std::vector<double>{0.0});
  CHECK(zero.minus == std::vector<double>{0.0});
}

TEST_CASE("partial lower bounds match the worked search tree") {
  const auto inst = testing::example2();
  const auto cs = split_costs(inst.c);

  // e(1) = 1
  std::vector<double> x1(6, 0.0);
  x1[0] = residual_v(inst.b[0], inst.A[0][0], inst.lambda);
  CHECK(std::fabs(node_lower_bound(cs.plus, x1) - 4.5735) <= 5e-4);

  // e(1) = 3, e(2) = 5, e(3) = 2. Exact value from a 50-digit recomputation
  // of c2 * V(b3, a32) + c5; the commonly quoted 7.7697 comes from rounding
  // V to 0.6312 before multiplying.
  std::vector<double> x5(6, 0.0);
  x5[2] = residual_v(inst.b[0], inst.A[0][2], inst.lambda);
  x5[4] = residual_v(inst.b[1], inst.A[1][4], inst.lambda);
  x5[1] = residual_v(inst.b[2], inst.A[2][1], inst.lambda);
  CHECK(std::fabs(node_lower_bound(cs.plus, x5) - 7.7703199) <= 1e-4);

  // e(1) = 3, e(2) = 5, e(3) = 5: the shared column contributes once.
  std::vector<double> x6(6, 0.0);
  x6[2] = residual_v(inst.b[0], inst.A[0][2], inst.lambda);
  x6[4] = std::max(residual_v(inst.b[1], inst.A[1][4], inst.lambda),
                   residual_v(inst.b[2], inst.A[2][4], inst.lambda));
  CHECK(std::fabs(node_lower_bound(cs.plus, x6) - 2.6471) <= 5e-4);
}

TEST_CASE("branch and bound on example 2") {
  const auto inst = testing::example2();
  const auto rs = simplify_matrix(inst);
  const auto cs = split_costs(inst.c);
  std::vector<TraceEvent> trace;
  const auto res = branch_and_bound(inst, rs, cs, BranchOrder::PaperOrder,
                                    &trace, 5e-4);
  CHECK(res.e_star.cols == std::vector<std::size_t>{2, 4, 4, 4});
  CHECK(std::fabs(res.z1 - 2.6471) <= 5e-4);
  check_close(res.x_min.x, {0, 0, 0.7335, 0, 1, 0}, 5e-4);

  CHECK(has_bound(trace, 4.5735, 5e-4));
  CHECK(has_bound(trace, 7.7703199, 1e-4));
  CHECK(has_bound(trace, 2.6471, 5e-4));
  bool saw_full_depth_10_9146 = false;
  for (const auto& ev : trace) {
    if (ev.depth == 4 && std::fabs(ev.bound - 10.9146) <= 5e-4) {
      saw_full_depth_10_9146 = true;
    }
  }
  CHECK(saw_full_depth_10_9146);

  // Child bounds never drop below their parent's.
  std::map<std::size_t, double> bound_of;
  for (const auto& ev : trace) bound_of[ev.node] = ev.bound;
  for (const auto& ev : trace) {
    if (ev.parent >= 0) {
      REQUIRE(bound_of.count(static_cast<std::size_t>(ev.parent)));
      CHECK(ev.bound >= bound_of[static_cast<std::size_t>(ev.parent)]);
    }
  }
}

TEST_CASE("single-row search needs no pruning") {
  const auto inst =
      FreInstance::validated({{0.9, 0.4, 0.8}}, {0.6}, {2.0, 1.0, 1.0}, 2.0);
  const auto rs = simplify_matrix(inst);
  const auto cs = split_costs(inst.c);
  const auto res = branch_and_bound(inst, rs, cs);
  double best = std::numeric_limits<double>::infinity();
  for (auto j : rs.j_bar.sets[0]) {
    const auto xi = candidate_vector(inst, 0, j);
    best = std::min(best, node_lower_bound(cs.plus, xi));
  }
  CHECK(res.z1 == best);
  CHECK(res.stats.nodes_pruned <= rs.j_bar.sets[0].size());
}

TEST_CASE("recombination of the two sub-solutions") {
  const auto inst = testing::example2();
  const auto rep = solve(inst, {.tol = 5e-4});
  REQUIRE(rep.feasible);
  const auto [x_opt, z_opt] =
      combine_optimum(rep.x_max, rep.x_min_star, inst.c);
  check_close(x_opt.x, {0, 0, 0.7336, 0, 1, 0.7675}, 5e-4);
  CHECK(std::fabs(z_opt - (-9.0033)) <= 5e-3);

  std::vector<double> all_neg{-1, -1, -1, -1, -1, -1};
  CHECK(combine_optimum(rep.x_max, rep.x_min_star, all_neg).first.x ==
        rep.x_max.x);
  std::vector<double> all_pos{1, 1, 1, 1, 1, 1};
  CHECK(combine_optimum(rep.x_max, rep.x_min_star, all_pos).first.x ==
        rep.x_min_star.x);

  SolutionVector shorter{{0.1}, Role::Probe};
  CHECK_THROWS_AS(combine_optimum(shorter, rep.x_min_star, inst.c),
                  std::invalid_argument);
}

TEST_CASE("full solve on example 2") {
  const auto rep = solve(testing::example2(), {.tol = 5e-4});
  REQUIRE(rep.feasible);
  check_close(rep.x_max.x, {0.7266, 0.6312, 0.7336, 1, 1, 0.7675}, 5e-4);
  CHECK(rep.e_star.cols == std::vector<std::size_t>{2, 4, 4, 4});
  CHECK(std::fabs(rep.z1_star - 2.6471) <= 5e-4);
  check_close(rep.x_opt.x, {0, 0, 0.7336, 0, 1, 0.7675}, 5e-4);
  CHECK(std::fabs(rep.z_opt - (-9.0033)) <= 5e-3);
  CHECK(rep.size_reduced == 12);
  CHECK(rep.stats.nodes_created > 0);
}

TEST_CASE("infeasible instances stop after the feasibility stage") {
  const auto bad = FreInstance::validated({{0.3}}, {0.5}, {1.0}, 2.0);
  const auto rep = solve(bad);
  CHECK(!rep.feasible);
  CHECK(rep.stats.nodes_created == 0);
  CHECK(rep.size_reduced == 0);
}

TEST_CASE("negating the objective swaps the recombination roles") {
  auto inst = testing::example2();
  for (auto& cj : inst.c) cj = -cj;
  const auto rep = solve(inst, {.tol = 5e-4});
  REQUIRE(rep.feasible);
  const auto ref = brute_force_optimum(inst, 1000, 5e-4);
  CHECK(std::fabs(rep.z1_star - ref.z1) <= 1e-9);
  CHECK(std::fabs(rep.z_opt - ref.z_opt) <= 1e-9);
  // Formerly-negative coordinates now come from the minimal candidate.
  CHECK(rep.x_opt.x[0] == rep.x_max.x[0]);
  CHECK(rep.x_opt.x[4] == rep.x_max.x[4]);
}

TEST_CASE("scaling the objective preserves the argmin") {
  const auto inst = testing::example2();
  const auto base = solve(inst, {.tol = 5e-4});
  auto scaled_inst = inst;
  for (auto& cj : scaled_inst.c) cj *= 3.5;
  const auto scaled = solve(scaled_inst, {.tol = 5e-4});
  CHECK(scaled.e_star.cols == base.e_star.cols);
  CHECK(scaled.x_opt.x == base.x_opt.x);
  CHECK(std::fabs(scaled.z_opt - 3.5 * base.z_opt) <= 1e-9);
}

TEST_CASE("heuristic branch order reaches the same optimum") {
  const auto inst = testing::example2();
  const auto paper = solve(inst, {.tol = 5e-4});
  const auto heur = solve(
      inst, {.tol = 5e-4, .order = BranchOrder::SmallestSetFirst});
  CHECK(std::fabs(paper.z1_star - heur.z1_star) <= 1e-12);
  CHECK(paper.x_opt.x == heur.x_opt.x);
}
