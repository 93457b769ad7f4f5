#include "hlz/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace hlz {

namespace {

void require_a(double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw Error(ErrorKind::Domain, "shift parameter a must lie in (0, 1], got " + std::to_string(a));
  }
}

void require_x_positive(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::Domain, "kernel abscissa must be positive, got " + std::to_string(x));
  }
}

void require_z(Complex z) {
  const double r = std::abs(z);
  if (!(r > 0.0) || (r > 1.0 && !on_unit_circle(z)) || !std::isfinite(r)) {
    throw Error(ErrorKind::Domain, "z must satisfy 0 < |z| <= 1");
  }
}

// B_n(1-a)/n! for n = 0..kSeriesTerms.
std::array<long double, kSeriesTerms + 1> bernoulli_series_coeffs(double a) {
  const auto& table = BernoulliTable::instance();
  std::array<long double, kSeriesTerms + 1> c{};
  long double fact = 1.0L;
  const long double y = 1.0L - static_cast<long double>(a);
  for (int n = 0; n <= kSeriesTerms; ++n) {
    if (n > 0) fact *= n;
    c[n] = table.eval(n, y) / fact;
  }
  return c;
}

// sum_{n=first}^{kSeriesTerms} c_n x^{n-1}
double bernoulli_series(double a, double x, int first) {
  const auto c = bernoulli_series_coeffs(a);
  long double acc = 0.0L;
  for (int n = kSeriesTerms; n >= first; --n) acc = acc * x + c[n];
  for (int n = 1; n < first; ++n) acc *= x;
  return static_cast<double>(acc);
}

}  // namespace

void validate(const ParamPoint& p) {
  require_a(p.a);
  require_z(p.z);
}

KernelEval kernel_H_eval(double a, double x) {
  require_a(a);
  require_x_positive(x);
  if (x < kSeriesCrossover) return {x, bernoulli_series(a, x, 1), true};
  const double e = std::exp(-a * x) / -std::expm1(-x);
  return {x, e - 1.0 / x, false};
}

KernelEval kernel_G_eval(double a, double x) {
  require_a(a);
  require_x_positive(x);
  if (x < kSeriesCrossover) return {x, bernoulli_series(a, x, 2), true};
  const double e = std::exp(-a * x) / -std::expm1(-x);
  return {x, e - 1.0 / x - (0.5 - a), false};
}

double kernel_H(double a, double x) { return kernel_H_eval(a, x).value.real(); }

double kernel_G(double a, double x) { return kernel_G_eval(a, x).value.real(); }

Complex kernel_Ez(double a, Complex z, double x) {
  return std::exp(-a * x) / (1.0 - z * std::exp(-x));
}

GzTaylor gz_taylor(double a, Complex z, int max_terms) {
  require_a(a);
  require_z(z);
  if (z == Complex(1.0, 0.0)) throw Error(ErrorKind::WrongKernel, "gz_taylor needs z != 1");

  GzTaylor t;
  t.radius = std::abs(principal_log(z));
  const double rho = t.radius / 3.0;
  const Complex d0 = 1.0 - z;

  // Power-series division of sum (1-a)^k x^k/k! by (1-z) + sum_{k>=1} x^k/k!.
  std::vector<double> inv_fact(static_cast<std::size_t>(max_terms) + 1);
  inv_fact[0] = 1.0;
  for (int k = 1; k <= max_terms; ++k) inv_fact[k] = inv_fact[k - 1] / k;

  const double b = 1.0 - a;
  double b_pow = 1.0;
  double biggest = 0.0;
  double rho_pow = 1.0;
  int small_run = 0;  // odd/even kernels have runs of zero coefficients
  for (int k = 0; k <= max_terms; ++k) {
    Complex acc = b_pow * inv_fact[k];
    for (int j = 1; j <= k; ++j) acc -= inv_fact[j] * t.coeff[k - j];
    const Complex ck = acc / d0;
    t.coeff.push_back(ck);
    const double term = std::abs(ck) * rho_pow;
    biggest = std::max(biggest, term);
    small_run = term < 1e-18 * biggest ? small_run + 1 : 0;
    if (k >= 4 && small_run >= 3) break;
    b_pow *= b;
    rho_pow *= rho;
  }
  return t;
}

Complex gz_from_taylor(const GzTaylor& t, double x) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = t.coeff.size() - 1; k >= 1; --k) acc = (acc + t.coeff[k]) * x;
  return acc;
}

KernelEval kernel_Gz_eval(double a, Complex z, double x) {
  require_a(a);
  require_z(z);
  require_x_positive(x);
  if (z == Complex(1.0, 0.0)) {
    throw Error(ErrorKind::WrongKernel, "kernel_Gz is undefined at z = 1; use kernel_G");
  }
  const double radius = std::abs(principal_log(z));
  if (x < std::min(0.25, radius / 4.0)) {
    return {x, gz_from_taylor(gz_taylor(a, z), x), true};
  }
  const Complex one_minus_z = 1.0 - z;
  if (x <= 1.0) {
    // (1-z)(e^{(1-a)x} - 1) - (e^x - 1) over (1-z)(e^x - z)
    const Complex num = one_minus_z * std::expm1((1.0 - a) * x) - std::expm1(x);
    return {x, num / (one_minus_z * (std::exp(x) - z)), false};
  }
  return {x, kernel_Ez(a, z, x) - 1.0 / one_minus_z, false};
}

Complex kernel_Gz(double a, Complex z, double x) { return kernel_Gz_eval(a, z, x).value; }

double sign_fn_g(double a, double x, int order) {
  require_a(a);
  if (!(x >= 0.0)) throw Error(ErrorKind::Domain, "sign_fn_g needs x >= 0");
  if (order < 0 || order > 2) throw Error(ErrorKind::Domain, "sign_fn_g order must be 0, 1 or 2");
  if (x == 0.0) return 0.0;

  const double b = 1.0 - a;
  const double c = 0.5 - a;
  const double eb = std::exp(b * x);
  const double ex = std::exp(x);
  switch (order) {
    case 0:
      return x * eb - std::expm1(x) - c * x * std::expm1(x);
    case 1:
      return b * x * eb + eb - ex - c * (x * ex + std::expm1(x));
    default:
      return (b * b * x + 2.0 * b) * eb - ex - c * (x * ex + 2.0 * ex);
  }
}

double sign_fn_gz_prime(double a, double z, double x) {
  require_a(a);
  if (!(z >= -1.0 && z < 1.0)) throw Error(ErrorKind::Domain, "sign_fn_gz_prime needs z in [-1, 1)");
  return (1.0 - z) * (1.0 - a) * std::exp((1.0 - a) * x) - std::exp(x);
}

Case3Kernels case3_kernels(double a, double r, double theta, double x) {
  require_a(a);
  require_x_positive(x);
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::Domain, "case3_kernels needs r in (0, 1]");
  if (!(theta > 0.0 && theta < kTwoPi) || theta == kPi) {
    throw Error(ErrorKind::Domain, "case3_kernels needs theta in (0, pi) u (pi, 2 pi); z must be non-real");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double eb = std::exp((1.0 - a) * x);
  const double ex = std::exp(x);

  Case3Kernels k;
  const double unit_gap = 1.0 + r * r - 2.0 * r * c;  // |1 - z|^2
  k.g_flat = eb * unit_gap;
  k.g_sharp = ex * ex + r * r - 2.0 * ex * r * c;  // |e^x - z|^2
  k.g_natural = eb * eb + r * r - 2.0 * eb * r * c;
  k.im_G = eb * r * s / k.g_sharp - r * s / unit_gap;
  return k;
}

}  // namespace hlz
