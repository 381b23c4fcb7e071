#ifndef FREDOMBI_IO_HPP
#define FREDOMBI_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "fredombi/solver.hpp"

namespace fredombi {

/// Parse an instance document:
///   { "lambda": .., "A": [[..]], "b": [..], "c": [..],
///     "name"?: "..", "seed"?: .. }
/// Throws std::invalid_argument naming the missing/malformed field;
/// validation failures are forwarded.
FreInstance parse_instance(const std::string& text);

nlohmann::json instance_to_json(const FreInstance& inst,
                                std::optional<std::uint64_t> seed = {});
std::string serialize_instance(const FreInstance& inst,
                               std::optional<std::uint64_t> seed = {});

nlohmann::json solve_report_to_json(const SolveReport& rep);

struct GeneratorConfig {
  std::size_t m = 4;
  std::size_t n = 6;
  double lambda = 2.0;
  std::uint64_t seed = 0;
  std::size_t zero_b_rows = 0;  // must stay < m
  double cost_min = -10.0;
  double cost_max = 10.0;
};

/// Random instance, feasible by construction: A is uniform, b is the row
/// composition of A with a hidden uniform point, so the maximum solution
/// dominates that point. Requested rows are forced to b_i = 0 by zeroing
/// part of the hidden point's support (and the rows' columns off it).
/// Deterministic per seed.
FreInstance generate_instance(const GeneratorConfig& cfg);

}  // namespace fredombi

#endif
