#pragma once

// Functional-equation evaluation of zeta(s,a) and Phi(s,a,z) for -1 < s < 0,
// and numeric checks of the partial-fraction kernel expansions and the Mellin
// transforms they are integrated against.
//
//   zeta(s,a) = (-pi i)(2pi)^{s-1} / (Gamma(s) sin(pi s))
//               * ( e^{pi i s/2} sum_{n>=1} e^{2pi i n a} n^{s-1}
//                 - e^{-pi i s/2} sum_{n>=1} e^{-2pi i n a} n^{s-1} )
//
//   Phi(s,a,z) = z^{-a} Gamma(1-s) sum_{n in Z} (-log z + 2pi i n)^{s-1} e^{2pi i n a}
//
// The bilateral sum is taken symmetrically, all powers on the principal branch.

#include "hlz/evaluator.hpp"

namespace hlz {

struct FESumConfig {
  int n_max = 4096;
  /// Add the asymptotic tail  sum_{n > n_max}  of each exponential sum.
  bool use_tail_correction = true;
};

void validate(const FESumConfig& cfg);

EvalResult zeta_fe_rhs(double sigma, double a, const FESumConfig& cfg = {});
EvalResult phi_fe_rhs(double sigma, double a, Complex z, const FESumConfig& cfg = {});

template <class T>
struct ExpansionCheck {
  T truncated_sum;
  T reference;
};

/// sum_{n=1}^{N} [ x e^{-2pi i n a}/(2pi i n (x - 2pi i n)) - x e^{2pi i n a}/(2pi i n (x + 2pi i n)) ]
/// against kernel_G(a,x). Each bracket is real (a conjugate pair).
ExpansionCheck<double> verify_kernel_expansion_z1(double a, double x, int n_max);

/// sum_{|n|<=N} x z^{-a} e^{-2pi i n a} / ((2pi i n + log z)(x - 2pi i n - log z))
/// against kernel_Gz(a,z,x).
ExpansionCheck<Complex> verify_kernel_expansion_zne1(double a, Complex z, double x, int n_max);

struct MellinCheck {
  Complex lhs;  // int_0^inf x^s/(x - w) dx by quadrature
  Complex rhs;  // 2 pi i/(1 - e^{2 pi i s}) w^s
  double lhs_err = 0.0;
};

/// w^s in the closed form takes arg w in (0, 2 pi), the branch cut lying
/// along the positive real axis where the integral has its pole.
/// Throws ErrorKind::Domain for w = 0 or w on the positive real axis.
MellinCheck verify_mellin_identity(double sigma, Complex w);

}  // namespace hlz
