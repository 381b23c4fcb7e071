#include "fredombi/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fredombi/io.hpp"

namespace fredombi {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt_vector(const std::vector<double>& x) {
  std::string out = "[";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out += ", ";
    out += fmt4(x[j]);
  }
  return out + "]";
}

std::string fmt_assignment(const Assignment& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.cols.size(); ++i) {
    if (i) out += ",";
    out += e.cols[i] == kUnconstrained ? "-" : std::to_string(e.cols[i] + 1);
  }
  return out + "]";
}

std::string fmt_index_sets(const IndexSets& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.sets.size(); ++i) {
    out += (sets.kind == SetKind::Reduced ? "  Jbar_" : "  J_") +
           std::to_string(i + 1) + " = {";
    for (std::size_t t = 0; t < sets.sets[i].size(); ++t) {
      if (t) out += ",";
      out += std::to_string(sets.sets[i][t] + 1);
    }
    out += "}\n";
  }
  return out;
}

const char* status_word(NodeStatus s) {
  switch (s) {
    case NodeStatus::Expanded: return "expanded";
    case NodeStatus::Candidate: return "candidate";
    case NodeStatus::Pruned: return "pruned";
  }
  return "?";
}

void write_trace(const std::string& path,
                 const std::vector<TraceEvent>& trace) {
  std::ostringstream out;
  out << "# node parent depth column bound status\n";
  for (const auto& ev : trace) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", ev.bound);
    out << ev.node << ' ' << ev.parent << ' ' << ev.depth << ' ' << ev.column
        << ' ' << buf << ' ' << status_word(ev.status) << '\n';
  }
  write_file(path, out.str());
}

std::vector<double> parse_vector_arg(const std::string& text) {
  std::vector<double> out;
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  }
  std::istringstream in(cleaned);
  double v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("--x: malformed vector: " + text);
  return out;
}

int cmd_solve(const std::string& path, double tol, BranchOrder order,
              bool oracle, const std::string& trace_path,
              const std::string& out_path) {
  const auto inst = parse_instance(read_file(path));
  std::vector<TraceEvent> trace;
  SolveOptions opts;
  opts.tol = tol;
  opts.order = order;
  opts.trace = trace_path.empty() ? nullptr : &trace;
  const auto rep = solve(inst, opts);
  if (!trace_path.empty()) write_trace(trace_path, trace);

  if (!rep.feasible) {
    std::cout << "infeasible: max-solution residuals "
              << fmt_vector(rep.row_residuals) << "\n";
    return kExitInfeasible;
  }
  std::cout << "X_max  = " << fmt_vector(rep.x_max.x) << "\n"
            << "e*     = " << fmt_assignment(rep.e_star) << "\n"
            << "X(e*)  = " << fmt_vector(rep.x_min_star.x) << "\n"
            << "Z1*    = " << fmt4(rep.z1_star) << "\n"
            << "x*     = " << fmt_vector(rep.x_opt.x) << "\n"
            << "Z*     = " << fmt4(rep.z_opt) << "\n"
            << "|E| = " << rep.size_original << ", |Ebar| = "
            << rep.size_reduced << ", nodes created/expanded/pruned = "
            << rep.stats.nodes_created << "/" << rep.stats.nodes_expanded
            << "/" << rep.stats.nodes_pruned << "\n";
  if (oracle) {
    const auto ref = brute_force_optimum(inst, kDefaultEnumCap, tol);
    const bool agree = std::abs(ref.z1 - rep.z1_star) <= 1e-9 &&
                       std::abs(ref.z_opt - rep.z_opt) <= 1e-9;
    std::cout << "oracle agreement: " << (agree ? "true" : "false")
              << " (Z1 " << fmt4(ref.z1) << ", Z* " << fmt4(ref.z_opt)
              << ")\n";
    if (!agree) return kExitInternal;
  }
  if (!out_path.empty()) {
    write_file(out_path, solve_report_to_json(rep).dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_check(const std::string& path, double tol) {
  const auto inst = parse_instance(read_file(path));
  const auto rep = check_feasibility(inst, tol);
  std::cout << "X_max = " << fmt_vector(rep.x_max.x) << "\n";
  for (std::size_t i = 0; i < rep.row_residuals.size(); ++i) {
    std::cout << "row " << i + 1 << ": residual " << fmt4(rep.row_residuals[i])
              << "\n";
  }
  std::cout << (rep.feasible ? "feasible" : "infeasible") << "\n";
  return rep.feasible ? kExitOk : kExitInfeasible;
}

int cmd_simplify(const std::string& path) {
  const auto inst = parse_instance(read_file(path));
  const auto sets = compute_index_sets(inst);
  const auto rs = simplify_matrix(inst);
  std::cout << "A_bar =\n";
  for (const auto& row : rs.a_bar) std::cout << "  " << fmt_vector(row) << "\n";
  for (const auto& z : rs.zero_log) {
    const char* rule = z.rule == ZeroRule::I    ? "I"
                       : z.rule == ZeroRule::II ? "II"
                                                : "III";
    std::cout << "zeroed (" << z.row + 1 << "," << z.col + 1 << ") by rule "
              << rule << "\n";
  }
  std::cout << fmt_index_sets(sets) << fmt_index_sets(rs.j_bar);
  std::cout << "|E| = " << rs.size_original << ", |Ebar| = " << rs.size_reduced
            << "\n";
  return kExitOk;
}

int cmd_enumerate(const std::string& path, double tol, std::size_t cap) {
  const auto inst = parse_instance(read_file(path));
  const auto rs = simplify_matrix(inst);
  const auto recs = enumerate_candidates(inst, rs.j_bar, cap, tol);
  for (const auto& rec : recs) {
    std::cout << fmt_assignment(rec.e) << "  X(e) = " << fmt_vector(rec.x)
              << "  Z1 = " << fmt4(rec.z1)
              << (rec.feasible ? "  feasible" : "  infeasible") << "\n";
  }
  std::cout << recs.size() << " candidates\n";
  return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& x_arg, double tol) {
  const auto inst = parse_instance(read_file(path));
  const auto x = parse_vector_arg(x_arg);
  const auto rep = check_membership(inst, x, tol);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    std::cout << "row " << i + 1 << ": composition "
              << fmt4(dombi_row_composition(inst.A[i], x, inst.lambda))
              << ", b = " << fmt4(inst.b[i]) << ", residual "
              << fmt4(rep.row_residuals[i]) << "\n";
  }
  std::cout << (rep.feasible ? "feasible" : "infeasible") << "\n";
  return rep.feasible ? kExitOk : kExitInfeasible;
}

int cmd_gen(const GeneratorConfig& cfg, const std::string& out_path) {
  const auto inst = generate_instance(cfg);
  const auto text = serialize_instance(inst, cfg.seed);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Linear optimization over max-Dombi fuzzy relation equations"};
  app.require_subcommand(1);

  double tol = kDefaultFeasTol;
  std::string order_name = "paper";
  app.add_option("--tol-feas", tol, "feasibility tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--order", order_name, "branch order: paper|heuristic")
      ->check(CLI::IsMember({"paper", "heuristic"}));
  app.fallthrough();

  std::string path, out_path, trace_path, x_arg;
  bool oracle = false;
  std::size_t cap = kDefaultEnumCap;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  solve_cmd->add_option("file", path)->required();
  solve_cmd->add_flag("--oracle", oracle, "cross-check against brute force");
  solve_cmd->add_option("--trace", trace_path, "write a search trace");
  solve_cmd->add_option("-o,--output", out_path, "write the report as JSON");

  auto* check_cmd = app.add_subcommand("check", "feasibility check");
  check_cmd->add_option("file", path)->required();

  auto* simplify_cmd = app.add_subcommand("simplify", "matrix simplification");
  simplify_cmd->add_option("file", path)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "list all candidates");
  enum_cmd->add_option("file", path)->required();
  enum_cmd->add_option("--cap", cap, "enumeration cap");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate constraints at a point");
  eval_cmd->add_option("file", path)->required();
  eval_cmd->add_option("--x", x_arg, "point, e.g. \"0.1,0.2,0.3\"")->required();

  GeneratorConfig cfg;
  auto* gen_cmd = app.add_subcommand("gen", "generate a feasible instance");
  gen_cmd->add_option("--m", cfg.m)->required();
  gen_cmd->add_option("--n", cfg.n)->required();
  gen_cmd->add_option("--lambda", cfg.lambda)->required();
  gen_cmd->add_option("--seed", cfg.seed)->required();
  gen_cmd->add_option("--zero-b-rows", cfg.zero_b_rows);
  gen_cmd->add_option("--cost-min", cfg.cost_min);
  gen_cmd->add_option("--cost-max", cfg.cost_max);
  gen_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitInput;
  }

  const BranchOrder order = order_name == "heuristic"
                                ? BranchOrder::SmallestSetFirst
                                : BranchOrder::PaperOrder;
  try {
    if (solve_cmd->parsed()) {
      return cmd_solve(path, tol, order, oracle, trace_path, out_path);
    }
    if (check_cmd->parsed()) return cmd_check(path, tol);
    if (simplify_cmd->parsed()) return cmd_simplify(path);
    if (enum_cmd->parsed()) return cmd_enumerate(path, tol, cap);
    if (eval_cmd->parsed()) return cmd_eval(path, x_arg, tol);
    if (gen_cmd->parsed()) return cmd_gen(cfg, out_path);
  } catch (const TheoryViolation& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInternal;
  } catch (const EnumerationCapExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace fredombi
