#include "fredombi/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fredombi {

namespace {

bool in_unit(double v) { return !std::isnan(v) && v >= 0.0 && v <= 1.0; }

}  // namespace

std::vector<std::string> validate_raw(
    const std::vector<std::vector<double>>& A, const std::vector<double>& b,
    const std::vector<double>& c, double lambda) {
  std::vector<std::string> out;
  std::ostringstream msg;
  auto flag = [&](const std::ostringstream& m) { out.push_back(m.str()); };

  const std::size_t m = A.size();
  if (m == 0) {
    std::ostringstream e;
    e << "A: must have at least one row";
    flag(e);
  }
  const std::size_t n = m == 0 ? 0 : A.front().size();
  if (m > 0 && n == 0) {
    std::ostringstream e;
    e << "A: must have at least one column";
    flag(e);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) {
      std::ostringstream e;
      e << "A: row " << i + 1 << " has " << A[i].size() << " entries, expected "
        << n;
      flag(e);
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_unit(A[i][j])) {
        std::ostringstream e;
        e << "A[" << i + 1 << "][" << j + 1 << "] = " << A[i][j]
          << " outside [0,1]";
        flag(e);
      }
    }
  }
  if (b.size() != m) {
    std::ostringstream e;
    e << "b: has " << b.size() << " entries, expected " << m;
    flag(e);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!in_unit(b[i])) {
      std::ostringstream e;
      e << "b[" << i + 1 << "] = " << b[i] << " outside [0,1]";
      flag(e);
    }
  }
  if (n > 0 && c.size() != n) {
    std::ostringstream e;
    e << "c: has " << c.size() << " entries, expected " << n;
    flag(e);
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!std::isfinite(c[j])) {
      std::ostringstream e;
      e << "c[" << j + 1 << "] = " << c[j] << " is not finite";
      flag(e);
    }
  }
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    std::ostringstream e;
    e << "lambda = " << lambda << " must be finite and > 0";
    flag(e);
  }
  return out;
}

FreInstance FreInstance::validated(std::vector<std::vector<double>> A,
                                   std::vector<double> b,
                                   std::vector<double> c, double lambda,
                                   std::string name) {
  auto violations = validate_raw(A, b, c, lambda);
  if (!violations.empty()) {
    std::string joined = "invalid instance:";
    for (const auto& v : violations) joined += "\n  " + v;
    throw std::invalid_argument(joined);
  }
  return FreInstance{std::move(A), std::move(b), std::move(c), Lambda(lambda),
                     std::move(name)};
}

IndexSets compute_index_sets(const FreInstance& inst) {
  IndexSets out;
  out.kind = SetKind::Original;
  out.sets.resize(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    for (std::size_t j = 0; j < inst.n(); ++j) {
      if (inst.A[i][j] >= inst.b[i]) {
        out.sets[i].push_back(j);
      } else if (inst.b[i] - inst.A[i][j] <= 1e-12) {
        std::ostringstream w;
        w << "A[" << i + 1 << "][" << j + 1 << "] is within 1e-12 below b["
          << i + 1 << "]; excluded from J_" << i + 1
          << " (input may have lost precision)";
        out.warnings.push_back(w.str());
      }
    }
  }
  return out;
}

}  // namespace fredombi
