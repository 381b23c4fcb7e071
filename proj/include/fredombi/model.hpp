#ifndef FREDOMBI_MODEL_HPP
#define FREDOMBI_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fredombi/dombi.hpp"

namespace fredombi {

/// A validated problem instance: minimize c.x subject to A phi x = b,
/// x in [0,1]^n, with the Dombi t-norm at the given lambda.
struct FreInstance {
  std::vector<std::vector<double>> A;  // m rows of n entries, all in [0,1]
  std::vector<double> b;               // m entries in [0,1]
  std::vector<double> c;               // n finite reals, any sign
  Lambda lambda;
  std::string name;

  std::size_t m() const { return A.size(); }
  std::size_t n() const { return A.empty() ? 0 : A.front().size(); }

  /// Row i has an effectively-zero right-hand side.
  bool zero_rhs(std::size_t i) const { return b[i] <= kZeroThreshold; }

  /// Validates and constructs; throws std::invalid_argument listing every
  /// violation (out-of-range entries with coordinates, dimension mismatches,
  /// bad lambda).
  static FreInstance validated(std::vector<std::vector<double>> A,
                               std::vector<double> b, std::vector<double> c,
                               double lambda, std::string name = "");
};

/// All invariant violations of a raw (A, b, c, lambda) tuple, as messages
/// naming the offending field; empty means valid.
std::vector<std::string> validate_raw(
    const std::vector<std::vector<double>>& A, const std::vector<double>& b,
    const std::vector<double>& c, double lambda);

enum class SetKind { Original, Reduced };

/// Per-row column index sets J_i (or J-bar_i). Indices are 0-based and
/// strictly increasing per row.
struct IndexSets {
  std::vector<std::vector<std::size_t>> sets;
  SetKind kind = SetKind::Original;
  // Diagnostics for a_ij just below b_i (likely round-tripped input).
  std::vector<std::string> warnings;
};

/// J_i = { j : a_ij >= b_i }, exact IEEE comparison. Entries within 1e-12
/// below b_i are flagged in warnings.
IndexSets compute_index_sets(const FreInstance& inst);

enum class Role { Maximum, Candidate, Optimum, Probe };

struct SolutionVector {
  std::vector<double> x;
  Role role = Role::Probe;
};

}  // namespace fredombi

#endif
