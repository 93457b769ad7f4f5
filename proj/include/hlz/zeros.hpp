#pragma once

// Classification of (a, z) by whether sigma -> Phi(sigma, a, z) can vanish on
// (-1, 0), and grid-scan evidence for that classification.
//
//   z = 1:          no zero  iff  b2- <= a <= 1/2  or  b2+ <= a <= 1
//   z in [-1, 1):   no zero  iff  (1 - z)(1 - a) <= 1
//   z not real:     no zero (Im Phi keeps one sign)
//
// with b2+- = (3 +- sqrt 3)/6 the roots of B_2.

#include <string>
#include <utility>
#include <vector>

#include "hlz/evaluator.hpp"

namespace hlz {

enum class Verdict { CaseI, CaseII, CaseIII, ZeroExists };

std::string_view to_string(Verdict v);

struct RegionVerdict {
  Verdict tag = Verdict::ZeroExists;
  std::string detail;
};

/// Boundaries are included (the inequalities are non-strict).
/// Throws ErrorKind::Domain unless 0 < a <= 1 and 0 < |z| <= 1.
RegionVerdict classify(double a, Complex z);

struct ZeroReport {
  std::vector<std::pair<double, double>> brackets;
  std::vector<double> roots;
  std::vector<double> residuals;  // |Phi(root)|
  std::vector<double> residual_errs;  // error estimate of each residual evaluation
  double grid_step = 0.0;
  double value_at_zero = 0.0;       // Phi(0, a, z), closed form (scanned component)
  double value_at_minus_one = 0.0;  // Phi(-1, a, z), closed form (scanned component)
};

struct ScanOptions {
  double grid_step = 0.005;
  double tol = 1e-10;  // bisection width in sigma
  QuadConfig quad{};
};

/// Samples Phi(sigma, a, z) for real z on sigma = -1 + h/2, -1 + 3h/2, ...,
/// -h/2, brackets every sign change and bisects each to width tol.
/// Throws ErrorKind::Domain for non-real z or grid_step > 0.01.
ZeroReport scan_zeros(double a, double z, const ScanOptions& opts = {});

/// The same scan applied to Im Phi(sigma, a, z) for non-real z; a bracket here
/// would contradict the non-vanishing of Im Phi. Residuals are |Im Phi(root)|.
ZeroReport scan_imag_sign_changes(double a, Complex z, const ScanOptions& opts = {});

struct Case3Report {
  double min_abs_im = 0.0;
  bool constant_sign = false;
  int sign = 0;  // sign of Im Phi across the grid when constant
};

/// Evaluates Im Phi(sigma, a, r e^{i theta}) on the sigma grid.
/// Throws ErrorKind::Domain when z = r e^{i theta} is real.
Case3Report check_case3(double a, double r, double theta, const std::vector<double>& sigma_grid,
                        const QuadConfig& cfg = {});

enum class SignBand { Lower, Upper };

/// Lower: zeta(sigma,a) > 0 for b2- <= a <= 1/2. Upper: zeta(sigma,a) < 0 for
/// b2+ <= a <= 1. True iff every grid value has the asserted sign and
/// exceeds its error estimate in magnitude.
bool verify_sign_constancy(SignBand band, const std::vector<double>& sigma_grid,
                           const std::vector<double>& a_grid, const QuadConfig& cfg = {});

/// Evenly spaced interior points of (lo, hi): lo + (i + 1/2)(hi - lo)/n.
std::vector<double> interior_grid(double lo, double hi, int n);

}  // namespace hlz
