#ifndef FREDOMBI_DOMBI_HPP
#define FREDOMBI_DOMBI_HPP

#include <span>

namespace fredombi {

/// Dombi t-norm parameter. Must be finite and strictly positive.
struct Lambda {
  double value;
  explicit Lambda(double v);
};

// Values at or below this are treated as exact zero in the t-norm
// (the generator diverges there and the analytic limit is 0).
inline constexpr double kZeroThreshold = 1e-15;

// Cap for the generator exponent; exp(700) is still finite in double.
inline constexpr double kGeneratorLogClamp = 700.0;

/// Additive-style generator g(x) = ((1-x)/x)^lambda, computed in the log
/// domain. g(1) = 0; overflow is clamped to exp(kGeneratorLogClamp).
/// Throws std::domain_error for x = 0 or x outside [0,1].
double dombi_generator(double x, Lambda lambda);

/// Dombi t-norm phi(x, y). Zero if either argument is (numerically) zero,
/// otherwise (1 + [g(x) + g(y)]^{1/lambda})^{-1}. Always in [0, min(x,y)].
double dombi_tnorm(double x, double y, Lambda lambda);

/// max_j phi(a_row[j], x[j]). Throws std::invalid_argument on length
/// mismatch or empty vectors.
double dombi_row_composition(std::span<const double> a_row,
                             std::span<const double> x, Lambda lambda);

/// The unique x with phi(a, x) = b, for 0 < b <= a <= 1:
/// (1 + [g(b) - g(a)]^{1/lambda})^{-1}. Returns exactly 1 when a = b.
/// Throws std::domain_error when a < b or b = 0.
double residual_v(double b, double a, Lambda lambda);

/// residual_v plus bounds on its rounding uncertainty. The subtraction
/// g(b) - g(a) cancels catastrophically when a is close to b, so the
/// uncertainty depends on the inputs and is strongly asymmetric near the
/// cancellation: the band top can reach 1 while the band bottom stays put.
/// `error` is the larger one-sided deviation (used for tie comparisons
/// across rows); `lower`/`upper` are the band ends themselves.
struct ResidualBound {
  double value;
  double error;
  double lower;
  double upper;
};
ResidualBound residual_v_bounded(double b, double a, Lambda lambda);

/// Lower end of the residual's uncertainty interval (the `lower` field):
/// the smallest x whose composition with a is indistinguishable from b at
/// double resolution. Minimal candidates are assembled from this value so
/// that a flat composition (a close to b) does not force a coordinate to
/// the top of its band and overshoot another row's equation.
double residual_v_floor(double b, double a, Lambda lambda);

}  // namespace fredombi

#endif
