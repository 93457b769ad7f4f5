#pragma once

// Bernoulli polynomials, the real gamma function, principal-branch complex
// powers and compensated summation. Everything here is pure and thread-safe.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <type_traits>

#include "hlz/error.hpp"

namespace hlz {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Roots of B_2(x) = x^2 - x + 1/6.
inline const double kB2Minus = (3.0 - std::numbers::sqrt3) / 6.0;
inline const double kB2Plus = (3.0 + std::numbers::sqrt3) / 6.0;

/// Coefficients of B_n(x) for n <= kMaxDegree, stored in extended precision.
/// Built once on first use and never mutated afterwards.
class BernoulliTable {
 public:
  static constexpr int kMaxDegree = 32;

  static const BernoulliTable& instance();

  int max_degree() const noexcept { return kMaxDegree; }

  /// Bernoulli number B_n = B_n(0) (convention B_1 = -1/2).
  long double number(int n) const;

  /// Coefficient of x^k in B_n(x).
  long double coefficient(int n, int k) const;

  /// B_n(x) by Horner evaluation in extended precision.
  long double eval(int n, long double x) const;

 private:
  BernoulliTable();

  std::array<long double, kMaxDegree + 1> numbers_{};
  // coeff_[n][k] is the x^k coefficient of B_n.
  std::array<std::array<long double, kMaxDegree + 1>, kMaxDegree + 1> coeff_{};
};

/// B_n(x). Throws ErrorKind::DegreeOverflow for n outside [0, 32].
double bernoulli_poly(int n, double x);

/// Gamma(sigma) for sigma in (-1, 0) u (0, inf). On (-1, 0) it is taken as
/// Gamma(sigma + 1) / sigma. Throws ErrorKind::Pole at 0 and -1 and
/// ErrorKind::Domain below -1.
double gamma_real(double sigma);

/// log(z) with the argument normalized to (-pi, pi]. Throws on z = 0.
Complex principal_log(Complex z);

/// exp(exponent * principal_log(base)). Throws ErrorKind::Domain on base = 0.
Complex complex_pow(Complex base, double exponent);

/// exp(2 pi i t), reducing t modulo 1 first so large arguments stay accurate.
Complex unit_phase(double t);

/// |z| = 1 up to rounding; unit_phase(1/3) has |z| = 1 - 1.1e-16.
inline bool on_unit_circle(Complex z) { return std::abs(std::abs(z) - 1.0) <= 4.0 * 2.220446049250313e-16; }

/// Neumaier's variant of Kahan summation.
template <class T>
class CompensatedSum {
 public:
  void add(T value) {
    const T t = sum_ + value;
    if constexpr (std::is_same_v<T, Complex>) {
      comp_ += Complex(neumaier(sum_.real(), value.real(), t.real()),
                       neumaier(sum_.imag(), value.imag(), t.imag()));
    } else {
      comp_ += neumaier(sum_, value, t);
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(T value) {
    add(value);
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  static double neumaier(double s, double v, double t) {
    return std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
  }

  T sum_{};
  T comp_{};
};

}  // namespace hlz
