#include "fredombi/io.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fredombi {

using nlohmann::json;

namespace {

const json& require_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw std::invalid_argument(std::string("instance document: missing \"") +
                                key + "\"");
  }
  return *it;
}

std::vector<double> number_array(const json& node, const char* key) {
  if (!node.is_array()) {
    throw std::invalid_argument(std::string("instance document: \"") + key +
                                "\" must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string("instance document: \"") + key +
                                  "\" contains a non-number");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::string format_assignment(const Assignment& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.cols.size(); ++i) {
    if (i) out += ",";
    out += e.cols[i] == kUnconstrained ? "-" : std::to_string(e.cols[i] + 1);
  }
  return out + "]";
}

}  // namespace

FreInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("instance document: ") +
                                err.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("instance document: top level must be an object");
  }

  const json& a_node = require_field(doc, "A");
  if (!a_node.is_array()) {
    throw std::invalid_argument("instance document: \"A\" must be an array of rows");
  }
  std::vector<std::vector<double>> A;
  for (const auto& row : a_node) A.push_back(number_array(row, "A"));

  auto b = number_array(require_field(doc, "b"), "b");
  auto c = number_array(require_field(doc, "c"), "c");

  const json& lam = require_field(doc, "lambda");
  if (!lam.is_number()) {
    throw std::invalid_argument("instance document: \"lambda\" must be a number");
  }

  std::string name;
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) {
    name = it->get<std::string>();
  }
  return FreInstance::validated(std::move(A), std::move(b), std::move(c),
                                lam.get<double>(), std::move(name));
}

json instance_to_json(const FreInstance& inst,
                      std::optional<std::uint64_t> seed) {
  json doc;
  if (!inst.name.empty()) doc["name"] = inst.name;
  doc["lambda"] = inst.lambda.value;
  doc["A"] = inst.A;
  doc["b"] = inst.b;
  doc["c"] = inst.c;
  if (seed) doc["seed"] = *seed;
  return doc;
}

std::string serialize_instance(const FreInstance& inst,
                               std::optional<std::uint64_t> seed) {
  return instance_to_json(inst, seed).dump(2) + "\n";
}

json solve_report_to_json(const SolveReport& rep) {
  json doc;
  doc["feasible"] = rep.feasible;
  doc["x_max"] = rep.x_max.x;
  doc["row_residuals"] = rep.row_residuals;
  if (rep.feasible) {
    doc["e_star"] = format_assignment(rep.e_star);
    doc["x_min_star"] = rep.x_min_star.x;
    doc["z1_star"] = rep.z1_star;
    doc["x_opt"] = rep.x_opt.x;
    doc["z_opt"] = rep.z_opt;
    doc["search_space"] = {{"original", rep.size_original.str()},
                           {"reduced", rep.size_reduced.str()}};
    doc["nodes"] = {{"created", rep.stats.nodes_created},
                    {"expanded", rep.stats.nodes_expanded},
                    {"pruned", rep.stats.nodes_pruned}};
  }
  return doc;
}

FreInstance generate_instance(const GeneratorConfig& cfg) {
  if (cfg.m == 0 || cfg.n == 0) {
    throw std::invalid_argument("generator: m and n must be positive");
  }
  if (cfg.zero_b_rows >= cfg.m) {
    throw std::invalid_argument("generator: zero_b_rows must be < m");
  }
  if (!(cfg.cost_min <= cfg.cost_max)) {
    throw std::invalid_argument("generator: empty cost range");
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> cost(cfg.cost_min, cfg.cost_max);
  const Lambda lambda(cfg.lambda);

  std::vector<std::vector<double>> A(cfg.m, std::vector<double>(cfg.n));
  for (auto& row : A)
    for (auto& a : row) a = unit(rng);
  std::vector<double> x0(cfg.n);
  for (auto& v : x0) v = unit(rng);
  std::vector<double> c(cfg.n);
  for (auto& v : c) v = cost(rng);

  if (cfg.zero_b_rows > 0) {
    std::vector<std::size_t> rows(cfg.m);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::shuffle(rows.begin(), rows.end(), rng);
    std::vector<std::size_t> cols(cfg.n);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    std::shuffle(cols.begin(), cols.end(), rng);
    // Zero the hidden point on half the columns; the b = 0 rows may only
    // touch those columns, so their composition vanishes while the
    // remaining rows keep a nontrivial hidden solution.
    const std::size_t k = std::max<std::size_t>(1, cfg.n / 2);
    for (std::size_t t = 0; t < k; ++t) x0[cols[t]] = 0.0;
    for (std::size_t r = 0; r < cfg.zero_b_rows; ++r) {
      for (std::size_t t = k; t < cfg.n; ++t) A[rows[r]][cols[t]] = 0.0;
    }
  }

  std::vector<double> b(cfg.m);
  for (std::size_t i = 0; i < cfg.m; ++i) {
    b[i] = dombi_row_composition(A[i], x0, lambda);
  }
  return FreInstance::validated(std::move(A), std::move(b), std::move(c),
                                cfg.lambda,
                                "gen-seed-" + std::to_string(cfg.seed));
}

}  // namespace fredombi
