#pragma once

// Mellin-integrand kernels for the Hurwitz and Hurwitz-Lerch zeta functions
// and the auxiliary functions used to establish their signs.
//
//   H(a,x)   = e^{(1-a)x}/(e^x - 1) - 1/x
//   G(a,x)   = H(a,x) - (1/2 - a)
//   G_z(a,x) = e^{(1-a)x}/(e^x - z) - 1/(1 - z)          (z != 1)

#include <vector>

#include "hlz/special_core.hpp"

namespace hlz {

/// Shift parameter and unit-disk point.
struct ParamPoint {
  double a = 1.0;
  Complex z{1.0, 0.0};
};

/// Throws ErrorKind::Domain unless 0 < a <= 1 and 0 < |z| <= 1.
void validate(const ParamPoint& p);

struct KernelEval {
  double x = 0.0;
  Complex value;
  bool used_series_fallback = false;
};

/// Below this abscissa H and G are summed from their Bernoulli series.
inline constexpr double kSeriesCrossover = 0.5;
/// Number of Bernoulli terms in the small-x series of H.
inline constexpr int kSeriesTerms = 30;

double kernel_H(double a, double x);
double kernel_G(double a, double x);
KernelEval kernel_H_eval(double a, double x);
KernelEval kernel_G_eval(double a, double x);

/// e^{(1-a)x}/(e^x - z), the un-subtracted integrand of the z != 1 Mellin form.
/// Written as e^{-ax}/(1 - z e^{-x}) so it stays finite for large x.
Complex kernel_Ez(double a, Complex z, double x);

/// G_z(a,x). Throws ErrorKind::WrongKernel for z = 1.
Complex kernel_Gz(double a, Complex z, double x);
KernelEval kernel_Gz_eval(double a, Complex z, double x);

/// Taylor coefficients of e^{(1-a)x}/(e^x - z) about x = 0, for z != 1.
/// coeff[0] = 1/(1-z); the series converges for |x| < radius = |log z|.
struct GzTaylor {
  std::vector<Complex> coeff;
  double radius = 0.0;
};

/// Computes coefficients until |c_k| * (radius/3)^k drops below 1e-18 of the
/// largest term seen, or max_terms is reached.
GzTaylor gz_taylor(double a, Complex z, int max_terms = 200);

/// Evaluates sum_{k>=1} c_k x^k, i.e. G_z(a,x), from a precomputed expansion.
Complex gz_from_taylor(const GzTaylor& t, double x);

/// g(a,x) = x(e^x - 1) G(a,x) and its first two x-derivatives (order 0, 1, 2).
/// All three vanish at x = 0.
double sign_fn_g(double a, double x, int order);

/// Numerator derivative g_z'(a,x) = (1-z)(1-a)e^{(1-a)x} - e^x for real z.
double sign_fn_gz_prime(double a, double z, double x);

struct Case3Kernels {
  double g_flat = 0.0;     // e^{(1-a)x}(1 + r^2 - 2r cos t)
  double g_sharp = 0.0;    // e^{2x} + r^2 - 2 e^x r cos t
  double g_natural = 0.0;  // e^{2(1-a)x} + r^2 - 2 e^{(1-a)x} r cos t
  double im_G = 0.0;       // Im G_{r,t}(a,x) with z = r e^{it}
};

/// Throws ErrorKind::Domain when sin(theta) = 0 (z real) or r outside (0,1].
Case3Kernels case3_kernels(double a, double r, double theta, double x);

}  // namespace hlz
