#include "fredombi/candidates.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fredombi {

bool lex_less(const Assignment& e1, const Assignment& e2) {
  return std::lexicographical_compare(e1.cols.begin(), e1.cols.end(),
                                      e2.cols.begin(), e2.cols.end());
}

std::vector<double> candidate_vector(const FreInstance& inst, std::size_t i,
                                     std::size_t j) {
  if (i >= inst.m() || j >= inst.n()) {
    throw std::out_of_range("candidate_vector: index out of range");
  }
  std::vector<double> x(inst.n(), 0.0);
  if (inst.zero_rhs(i)) return x;
  if (inst.A[i][j] < inst.b[i]) {
    std::ostringstream msg;
    msg << "candidate_vector: column " << j + 1 << " not in J_" << i + 1;
    throw std::domain_error(msg.str());
  }
  x[j] = residual_v_floor(inst.b[i], inst.A[i][j], inst.lambda);
  return x;
}

std::vector<double> assemble_min_candidate(const FreInstance& inst,
                                           const Assignment& e) {
  if (e.cols.size() != inst.m()) {
    throw std::invalid_argument("assignment has wrong number of rows");
  }
  std::vector<double> x(inst.n(), 0.0);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (inst.zero_rhs(i)) continue;
    if (e.cols[i] == kUnconstrained) {
      throw std::invalid_argument("assignment leaves a b != 0 row unassigned");
    }
    const auto xi = candidate_vector(inst, i, e.cols[i]);
    for (std::size_t j = 0; j < inst.n(); ++j) x[j] = std::max(x[j], xi[j]);
  }
  return x;
}

std::vector<CandidateRecord> enumerate_candidates(const FreInstance& inst,
                                                  const IndexSets& sets,
                                                  std::size_t cap, double tol) {
  const BigInt size = search_space_size(sets, inst.b);
  if (size > BigInt(cap)) {
    std::ostringstream msg;
    msg << "enumeration refused: search space has " << size
        << " assignments, cap is " << cap;
    throw EnumerationCapExceeded(msg.str());
  }

  std::vector<double> c_plus(inst.n());
  for (std::size_t j = 0; j < inst.n(); ++j)
    c_plus[j] = std::max(inst.c[j], 0.0);

  std::vector<std::size_t> rows;  // rows that actually get a column
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (!inst.zero_rhs(i)) {
      if (sets.sets[i].empty()) return {};
      rows.push_back(i);
    }
  }

  std::vector<CandidateRecord> out;
  std::vector<std::size_t> pos(rows.size(), 0);  // odometer over sets
  while (true) {
    CandidateRecord rec;
    rec.e.cols.assign(inst.m(), kUnconstrained);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      rec.e.cols[rows[r]] = sets.sets[rows[r]][pos[r]];
    }
    rec.x = assemble_min_candidate(inst, rec.e);
    rec.z1 = 0.0;
    for (std::size_t j = 0; j < inst.n(); ++j) rec.z1 += c_plus[j] * rec.x[j];
    rec.feasible = check_membership(inst, rec.x, tol).feasible;
    out.push_back(std::move(rec));

    // advance, last row fastest: lexicographic order of e
    std::size_t r = rows.size();
    while (r > 0) {
      --r;
      if (++pos[r] < sets.sets[rows[r]].size()) break;
      pos[r] = 0;
      if (r == 0) return out;
    }
    if (rows.empty()) return out;  // all-zero b: the single empty assignment
  }
}

BruteForceResult brute_force_optimum(const FreInstance& inst, std::size_t cap,
                                     double tol) {
  const auto feas = check_feasibility(inst, tol);
  if (!feas.feasible) {
    throw std::domain_error("brute_force_optimum: instance is infeasible");
  }
  const auto rs = simplify_matrix(inst);
  const auto recs = enumerate_candidates(inst, rs.j_bar, cap, tol);
  if (recs.empty()) {
    throw std::domain_error("brute_force_optimum: empty reduced search space");
  }
  // Near-tied matrix entries are kept during simplification, so the reduced
  // space can contain assignments whose assembled candidate violates the
  // equations; only feasible ones compete.
  const CandidateRecord* best = nullptr;
  for (const auto& rec : recs) {
    if (!rec.feasible) continue;
    if (!best || rec.z1 < best->z1 ||
        (rec.z1 == best->z1 && lex_less(rec.e, best->e))) {
      best = &rec;
    }
  }
  if (!best) {
    throw std::domain_error(
        "brute_force_optimum: no feasible minimal candidate");
  }
  BruteForceResult res;
  res.e = best->e;
  res.x_min = SolutionVector{best->x, Role::Candidate};
  res.z1 = best->z1;
  res.x_opt.role = Role::Optimum;
  res.x_opt.x.resize(inst.n());
  res.z_opt = 0.0;
  for (std::size_t j = 0; j < inst.n(); ++j) {
    res.x_opt.x[j] = inst.c[j] <= 0.0 ? feas.x_max.x[j] : best->x[j];
    res.z_opt += inst.c[j] * res.x_opt.x[j];
  }
  return res;
}

SampleReport sample_solution_set(const FreInstance& inst, std::size_t samples,
                                 std::uint64_t seed, double tol,
                                 std::size_t cap) {
  const auto feas = check_feasibility(inst, tol);
  if (!feas.feasible) {
    throw std::domain_error("sample_solution_set: instance is infeasible");
  }
  const auto rs = simplify_matrix(inst);
  const auto recs = enumerate_candidates(inst, rs.j_bar, cap, tol);
  if (recs.empty()) {
    throw std::domain_error(
        "sample_solution_set: no minimal candidates on a feasible instance");
  }

  SampleReport rep;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, recs.size() - 1);

  // Box corners are residual values, so their rounding error -- and the
  // x-space width of the "composition within an ulp of b" band -- is set by
  // the residual's conditioning, not by a fixed constant. Use that bound,
  // per column, as the box slack.
  std::vector<double> slack(inst.n(), 1e-9);
  for (std::size_t j = 0; j < inst.n(); ++j) {
    for (std::size_t i = 0; i < inst.m(); ++i) {
      if (!inst.zero_rhs(i) && inst.A[i][j] >= inst.b[i]) {
        slack[j] = std::max(
            slack[j],
            residual_v_bounded(inst.b[i], inst.A[i][j], inst.lambda).error);
      }
    }
  }
  auto in_some_box = [&](const std::vector<double>& x) {
    for (const auto& rec : recs) {
      bool inside = true;
      for (std::size_t j = 0; j < inst.n() && inside; ++j) {
        inside = x[j] >= rec.x[j] - slack[j] &&
                 x[j] <= feas.x_max.x[j] + slack[j];
      }
      if (inside) return true;
    }
    return false;
  };

  std::vector<double> x(inst.n());
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& box = recs[pick(rng)];
    for (std::size_t j = 0; j < inst.n(); ++j) {
      const double lo = std::min(box.x[j], feas.x_max.x[j]);
      const double hi = std::max(box.x[j], feas.x_max.x[j]);
      x[j] = std::clamp(lo + unit(rng) * (hi - lo), 0.0, 1.0);
    }
    if (!check_membership(inst, x, tol).feasible) rep.box_failures.push_back(x);
  }
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < inst.n(); ++j) x[j] = unit(rng);
    // Strict membership here: a tolerance on the composition widens the
    // feasible region by an amount the boxes know nothing about.
    if (check_membership(inst, x, 0.0).feasible && !in_some_box(x)) {
      rep.stray_feasible.push_back(x);
    }
  }
  return rep;
}

}  // namespace fredombi
