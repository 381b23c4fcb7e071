#ifndef FREDOMBI_REDUCTION_HPP
#define FREDOMBI_REDUCTION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "fredombi/model.hpp"

namespace fredombi {

using BigInt = boost::multiprecision::cpp_int;

enum class ZeroRule { I, II, III };

struct ZeroEntry {
  std::size_t row;  // 0-based
  std::size_t col;  // 0-based
  ZeroRule rule;
};

/// The simplified system: A with entries that cannot participate in any
/// solution zeroed out, plus the reduced index sets and the search-space
/// sizes before/after.
struct ReducedSystem {
  std::vector<std::vector<double>> a_bar;
  std::vector<ZeroEntry> zero_log;  // positions actually changed, (i,j) order
  IndexSets j_bar;
  BigInt size_original;  // |E|  over the original J_i
  BigInt size_reduced;   // |E-bar| over the reduced sets
};

/// One pass of the three zeroing rules against the original matrix:
///   (I)   a_ij < b_i
///   (II)  some other row i' covers column j strictly more cheaply
///         (V(b_i', a_i'j) < V(b_i, a_ij), both rows with b != 0)
///   (III) some row with b_i' = 0 has a_i'j > 0, forcing x_j = 0
/// When several rules apply the lowest-numbered one is logged.
ReducedSystem simplify_matrix(const FreInstance& inst);

/// J-bar_i = { j : a_bar_ij >= b_i }.
IndexSets reduced_index_sets(const std::vector<std::vector<double>>& a_bar,
                             const FreInstance& inst);

/// Product of |sets[i]| over rows with b_i != 0 (zero-rhs rows contribute
/// factor 1: their candidate vectors are all identical). Zero if any
/// counted row has an empty set.
BigInt search_space_size(const IndexSets& sets, const std::vector<double>& b);

}  // namespace fredombi

#endif
