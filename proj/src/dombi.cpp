#include "fredombi/dombi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fredombi {

namespace {

void require_unit(double v, const char* what) {
  if (std::isnan(v) || v < 0.0 || v > 1.0) {
    throw std::domain_error(std::string(what) + " must lie in [0,1], got " +
                            std::to_string(v));
  }
}

// log of ((1-x)/x), valid for x in (0,1]; -inf at x = 1.
double log_ratio(double x) { return std::log1p(-x) - std::log(x); }

}  // namespace

Lambda::Lambda(double v) : value(v) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::domain_error("lambda must be finite and > 0, got " +
                            std::to_string(v));
  }
}

double dombi_generator(double x, Lambda lambda) {
  require_unit(x, "x");
  if (x <= 0.0) throw std::domain_error("dombi_generator: x must be > 0");
  if (x == 1.0) return 0.0;
  const double t = lambda.value * log_ratio(x);
  if (t >= kGeneratorLogClamp) return std::exp(kGeneratorLogClamp);
  return std::exp(t);
}

double dombi_tnorm(double x, double y, Lambda lambda) {
  require_unit(x, "x");
  require_unit(y, "y");
  if (x <= kZeroThreshold || y <= kZeroThreshold) return 0.0;
  // log-sum-exp of the two generator terms keeps large lambda stable.
  const double lx = lambda.value * log_ratio(x);
  const double ly = lambda.value * log_ratio(y);
  const double hi = std::max(lx, ly);
  const double lo = std::min(lx, ly);
  if (hi == -std::numeric_limits<double>::infinity()) return 1.0;  // x = y = 1
  const double lse = hi + std::log1p(std::exp(lo - hi));
  const double result = 1.0 / (1.0 + std::exp(lse / lambda.value));
  // The exp/log round trip can land one ulp above min(x, y); the bound is
  // exact in real arithmetic, so enforce it.
  return std::min(result, std::min(x, y));
}

double dombi_row_composition(std::span<const double> a_row,
                             std::span<const double> x, Lambda lambda) {
  if (a_row.size() != x.size()) {
    throw std::invalid_argument("row composition: length mismatch (" +
                                std::to_string(a_row.size()) + " vs " +
                                std::to_string(x.size()) + ")");
  }
  if (a_row.empty()) {
    throw std::invalid_argument("row composition: empty vectors");
  }
  double best = 0.0;
  for (std::size_t j = 0; j < a_row.size(); ++j) {
    best = std::max(best, dombi_tnorm(a_row[j], x[j], lambda));
  }
  return best;
}

double residual_v(double b, double a, Lambda lambda) {
  return residual_v_bounded(b, a, lambda).value;
}

ResidualBound residual_v_bounded(double b, double a, Lambda lambda) {
  require_unit(b, "b");
  require_unit(a, "a");
  if (b <= kZeroThreshold) {
    throw std::domain_error("residual_v: undefined for b = 0");
  }
  if (a < b) {
    throw std::domain_error("residual_v: requires a >= b, got a = " +
                            std::to_string(a) + ", b = " + std::to_string(b));
  }
  const double gb = dombi_generator(b, lambda);
  const double ga = dombi_generator(a, lambda);
  const double diff = gb - ga;
  // Uncertainty of each generator term: the argument itself is a rounded
  // double (an ulp of x moves log g by lambda/(1-x) relative -- unbounded as
  // x -> 1), and the exponentiated log-ratio computation adds a few eps per
  // log. The subtraction keeps those absolute errors while the difference
  // can cancel to almost nothing when a is near b. Propagate the interval
  // [diff - d, diff + d] through the decreasing map
  // diff -> (1 + diff^{1/lambda})^{-1}.
  const double eps = std::numeric_limits<double>::epsilon();
  const auto g_err = [&](double x, double g) {
    if (x >= 1.0) return 0.0;  // g is exactly 0 there
    return 4.0 * eps * g *
           (1.0 + lambda.value * (1.0 / (1.0 - x) + std::fabs(log_ratio(x))));
  };
  const double d_diff = g_err(b, gb) + g_err(a, ga);
  // shift widens the band in the exponent (log-generator) domain to cover
  // the rounding of the log/divide/exp chain itself. Padding in x space
  // instead would be wrong for lambda < 1, where the map is so steep at
  // x = 1 that even a 1e-15 x-side nudge moves the composition by ~1e-5.
  const auto v_of = [&](double d, double shift) {
    if (d <= 0.0) return 1.0;
    const double ld = std::log(d);
    const double pad = 4.0 * eps * ((1.0 + std::fabs(ld)) / lambda.value + 1.0);
    return 1.0 / (1.0 + std::exp(ld / lambda.value + shift * pad));
  };
  if (diff <= 0.0) {
    // a >= b guarantees diff >= 0 in real arithmetic; anything below the
    // noise floor means the inputs were inconsistent after all.
    if (diff < -(d_diff + 1e-12)) {
      throw std::domain_error("residual_v: negative generator difference");
    }
    const double lo = v_of(d_diff, +1.0);
    return {1.0, 1.0 - lo, lo, 1.0};
  }
  const double v = v_of(diff, 0.0);
  // The band is asymmetric near the cancellation: subtracting d_diff can
  // push the generator difference to zero (band top 1) while adding it
  // barely moves the bottom. Keep the one-sided ends; `error` is the wider
  // deviation for symmetric tie tests.
  const double lo = v_of(diff + d_diff, +1.0);
  const double hi = v_of(std::max(diff - d_diff, 0.0), -1.0);
  return {v, std::max(hi - v, v - lo), lo, hi};
}

double residual_v_floor(double b, double a, Lambda lambda) {
  return residual_v_bounded(b, a, lambda).lower;
}

}  // namespace fredombi
