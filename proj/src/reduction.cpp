#include "fredombi/reduction.hpp"

#include <limits>
#include <optional>

namespace fredombi {

namespace {

bool zero_rhs(const std::vector<double>& b, std::size_t i) {
  return b[i] <= kZeroThreshold;
}

}  // namespace

ReducedSystem simplify_matrix(const FreInstance& inst) {
  const std::size_t m = inst.m();
  const std::size_t n = inst.n();

  // V(b_i, a_ij) with error bounds for j in J_i on rows with b_i != 0;
  // NaN elsewhere.
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<ResidualBound>> resid(
      m, std::vector<ResidualBound>(n, ResidualBound{nan, 0.0}));
  for (std::size_t i = 0; i < m; ++i) {
    if (inst.zero_rhs(i)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.A[i][j] >= inst.b[i]) {
        resid[i][j] = residual_v_bounded(inst.b[i], inst.A[i][j], inst.lambda);
      }
    }
  }

  ReducedSystem rs;
  rs.a_bar = inst.A;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<ZeroRule> rule;
      if (inst.A[i][j] < inst.b[i]) {
        rule = ZeroRule::I;
      } else if (!inst.zero_rhs(i)) {
        for (std::size_t k = 0; k < m && !rule; ++k) {
          if (k == i) continue;
          // Require a strictly smaller residual beyond both error bounds:
          // residuals that coincide in real arithmetic can differ here by
          // far more than an ulp (the generator difference cancels when
          // a_ij is close to b_i), and zeroing one side of such a tie can
          // empty a row's index set on a feasible instance.
          if (!zero_rhs(inst.b, k) && inst.A[k][j] >= inst.b[k] &&
              resid[k][j].value <
                  resid[i][j].value - resid[i][j].error - resid[k][j].error) {
            rule = ZeroRule::II;
          }
        }
        for (std::size_t k = 0; k < m && !rule; ++k) {
          if (zero_rhs(inst.b, k) && inst.A[k][j] > kZeroThreshold) {
            rule = ZeroRule::III;
          }
        }
      }
      if (rule) {
        rs.a_bar[i][j] = 0.0;
        if (inst.A[i][j] != 0.0) rs.zero_log.push_back({i, j, *rule});
      }
    }
  }

  rs.j_bar = reduced_index_sets(rs.a_bar, inst);
  rs.size_original = search_space_size(compute_index_sets(inst), inst.b);
  rs.size_reduced = search_space_size(rs.j_bar, inst.b);
  return rs;
}

IndexSets reduced_index_sets(const std::vector<std::vector<double>>& a_bar,
                             const FreInstance& inst) {
  IndexSets out;
  out.kind = SetKind::Reduced;
  out.sets.resize(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    for (std::size_t j = 0; j < inst.n(); ++j) {
      if (a_bar[i][j] >= inst.b[i]) out.sets[i].push_back(j);
    }
  }
  return out;
}

BigInt search_space_size(const IndexSets& sets, const std::vector<double>& b) {
  BigInt prod = 1;
  for (std::size_t i = 0; i < sets.sets.size(); ++i) {
    if (zero_rhs(b, i)) continue;
    if (sets.sets[i].empty()) return 0;
    prod *= BigInt(sets.sets[i].size());
  }
  return prod;
}

}  // namespace fredombi
