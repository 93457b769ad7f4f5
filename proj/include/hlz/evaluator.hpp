#pragma once

// Evaluation of the Hurwitz-Lerch zeta function
//   Phi(s,a,z) = sum_{n>=0} z^n (n+a)^{-s}
// and the Hurwitz zeta function zeta(s,a) = Phi(s,a,1) for real s > -1.
//
// Routes:
//   * the Dirichlet series (s > 1, or |z| < 1 for any s),
//   * Mellin integrals of the kernels in kernels.hpp, divided by Gamma(s),
//     for 0 < s < 1 (z = 1), s > 0 (z != 1) and -1 < s < 0,
//   * closed forms at s = 0 and s = -1,
//   * Euler-Maclaurin summation for zeta(s,a), used as an independent oracle.

#include <string_view>

#include "hlz/kernels.hpp"
#include "hlz/special_core.hpp"

namespace hlz {

enum class Method {
  Series,
  IntegralPos,
  IntegralNeg,
  IntegralUnit,  // integral route with z on the unit circle, z != 1
  SpecialValue,
  FunctionalEq,
  EulerMaclaurin,
};

std::string_view to_string(Method m);

struct EvalResult {
  Complex value;
  double abs_err = 0.0;
  Method method = Method::Series;
};

struct QuadConfig {
  /// The Mellin integral is split here; the tail beyond is integrated with
  /// its algebraic pieces removed analytically.
  double split_point = 1.0;
  /// Upper truncation of the exponentially decaying tail. 0 picks it from
  /// the decay rate e^{-ax} and tol.
  double tail_cutoff = 0.0;
  int max_levels = 9;
  /// Absolute tolerance on the Mellin integral (before division by Gamma).
  double tol = 1e-13;
};

void validate(const QuadConfig& cfg);

/// Integral routes refuse |1 - z| below this.
inline constexpr double kMinUnitGap = 1e-3;
/// evaluate() uses the series when |z| is at most this.
inline constexpr double kSeriesRadius = 0.9;

EvalResult phi_series(double sigma, double a, Complex z);

EvalResult hurwitz_integral_pos(double sigma, double a, const QuadConfig& cfg = {});
EvalResult hurwitz_integral_neg(double sigma, double a, const QuadConfig& cfg = {});
EvalResult phi_integral_pos(double sigma, double a, Complex z, const QuadConfig& cfg = {});
EvalResult phi_integral_neg(double sigma, double a, Complex z, const QuadConfig& cfg = {});

/// Closed forms at order 0 and -1:
///   zeta(0,a) = 1/2 - a,   zeta(-1,a) = -B_2(a)/2,
///   Phi(0,a,z) = 1/(1-z), Phi(-1,a,z) = a/(1-z) + z/(1-z)^2.
Complex special_value(int order, double a, Complex z);

/// Euler-Maclaurin summation for zeta(sigma, a), any real sigma != 1, a > 0.
EvalResult hurwitz_em(double sigma, double a);

/// Dispatches on (sigma, z); see Method for the route taken.
EvalResult evaluate(double sigma, double a, Complex z, const QuadConfig& cfg = {});

}  // namespace hlz
