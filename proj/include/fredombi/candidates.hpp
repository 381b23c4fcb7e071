#ifndef FREDOMBI_CANDIDATES_HPP
#define FREDOMBI_CANDIDATES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fredombi/feasibility.hpp"
#include "fredombi/reduction.hpp"

namespace fredombi {

// Sentinel for rows with b_i = 0: their candidate vector is all-zero, so the
// column choice is immaterial and no column is assigned.
inline constexpr std::size_t kUnconstrained =
    std::numeric_limits<std::size_t>::max();

/// One covering column per row (0-based), kUnconstrained on zero-rhs rows.
struct Assignment {
  std::vector<std::size_t> cols;
};

/// e1 < e2 lexicographically over the assigned columns.
bool lex_less(const Assignment& e1, const Assignment& e2);

/// The candidate vector for row i and column j in J_i: the row's residual at
/// position j, zero elsewhere (all-zero when b_i = 0).
std::vector<double> candidate_vector(const FreInstance& inst, std::size_t i,
                                     std::size_t j);

/// X(e): componentwise max of the chosen candidate vectors over rows with
/// b_i != 0.
std::vector<double> assemble_min_candidate(const FreInstance& inst,
                                           const Assignment& e);

struct CandidateRecord {
  Assignment e;
  std::vector<double> x;  // assembled X(e)
  double z1 = 0.0;        // c+ . x
  bool feasible = false;
};

inline constexpr std::size_t kDefaultEnumCap = 1'000'000;

/// Thrown when an enumeration would exceed the configured cap.
struct EnumerationCapExceeded : std::runtime_error {
  explicit EnumerationCapExceeded(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// All assignments over the given index sets, in lexicographic order of e.
std::vector<CandidateRecord> enumerate_candidates(
    const FreInstance& inst, const IndexSets& sets,
    std::size_t cap = kDefaultEnumCap, double tol = kDefaultFeasTol);

struct BruteForceResult {
  Assignment e;
  SolutionVector x_min;  // X(e), role Candidate
  double z1 = 0.0;
  SolutionVector x_opt;  // recombined with X-bar, role Optimum
  double z_opt = 0.0;
};

/// Exhaustive reference optimum: reduce, enumerate the full reduced search
/// space, take the min-z1 record (ties: lexicographically smallest e) and
/// recombine with the maximum solution. Independent of the branch-and-bound.
BruteForceResult brute_force_optimum(const FreInstance& inst,
                                     std::size_t cap = kDefaultEnumCap,
                                     double tol = kDefaultFeasTol);

struct SampleReport {
  std::size_t samples = 0;
  // Points drawn inside some box [X(e), X-bar] that fail membership.
  std::vector<std::vector<double>> box_failures;
  // Uniform cube points that pass membership but lie outside every box.
  std::vector<std::vector<double>> stray_feasible;
};

/// Empirical check of the box-union structure of the solution set: `samples`
/// points from random candidate boxes plus `samples` uniform cube points.
/// Both failure lists are expected to stay empty.
SampleReport sample_solution_set(const FreInstance& inst, std::size_t samples,
                                 std::uint64_t seed,
                                 double tol = kDefaultFeasTol,
                                 std::size_t cap = kDefaultEnumCap);

}  // namespace fredombi

#endif
