#include "hlz/special_core.hpp"

#include <cmath>
#include <string>

namespace hlz {

namespace {

struct Ratio {
  long double num;
  long double den;
};

// Even-index Bernoulli numbers B_0, B_2, ..., B_32 as exact fractions.
constexpr Ratio kEvenBernoulli[] = {
    {1.0L, 1.0L},
    {1.0L, 6.0L},
    {-1.0L, 30.0L},
    {1.0L, 42.0L},
    {-1.0L, 30.0L},
    {5.0L, 66.0L},
    {-691.0L, 2730.0L},
    {7.0L, 6.0L},
    {-3617.0L, 510.0L},
    {43867.0L, 798.0L},
    {-174611.0L, 330.0L},
    {854513.0L, 138.0L},
    {-236364091.0L, 2730.0L},
    {8553103.0L, 6.0L},
    {-23749461029.0L, 870.0L},
    {8615841276005.0L, 14322.0L},
    {-7709321041217.0L, 510.0L},
};

long double binomial(int n, int k) {
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) c = c * static_cast<long double>(n - k + i) / i;
  return std::round(c);
}

}  // namespace

BernoulliTable::BernoulliTable() {
  for (int n = 0; n <= kMaxDegree; ++n) {
    if (n == 1) {
      numbers_[n] = -0.5L;
    } else if (n % 2 == 0) {
      const Ratio& r = kEvenBernoulli[n / 2];
      numbers_[n] = r.num / r.den;
    } else {
      numbers_[n] = 0.0L;
    }
  }
  // B_n(x) = sum_k C(n,k) B_{n-k} x^k
  for (int n = 0; n <= kMaxDegree; ++n) {
    for (int k = 0; k <= n; ++k) coeff_[n][k] = binomial(n, k) * numbers_[n - k];
  }
}

const BernoulliTable& BernoulliTable::instance() {
  static const BernoulliTable table;
  return table;
}

long double BernoulliTable::number(int n) const {
  if (n < 0 || n > kMaxDegree) {
    throw Error(ErrorKind::DegreeOverflow,
                "Bernoulli index " + std::to_string(n) + " outside [0, 32]");
  }
  return numbers_[n];
}

long double BernoulliTable::coefficient(int n, int k) const {
  if (n < 0 || n > kMaxDegree) {
    throw Error(ErrorKind::DegreeOverflow,
                "Bernoulli degree " + std::to_string(n) + " outside [0, 32]");
  }
  return (k < 0 || k > n) ? 0.0L : coeff_[n][k];
}

long double BernoulliTable::eval(int n, long double x) const {
  if (n < 0 || n > kMaxDegree) {
    throw Error(ErrorKind::DegreeOverflow,
                "Bernoulli degree " + std::to_string(n) + " outside [0, 32]");
  }
  long double acc = coeff_[n][n];
  for (int k = n - 1; k >= 0; --k) acc = acc * x + coeff_[n][k];
  return acc;
}

double bernoulli_poly(int n, double x) {
  const auto& table = BernoulliTable::instance();
  // Horner on [0, 1/2] only: the monomial form cancels badly near x = 1, so
  // use B_n(x) = (-1)^n B_n(1-x) there and B_n(x+1) = B_n(x) + n x^{n-1}
  // to bring nearby x into [0, 1].
  auto unit = [&](long double t) {
    if (t <= 0.5L) return table.eval(n, t);
    const long double r = table.eval(n, 1.0L - t);
    return n % 2 == 0 ? r : -r;
  };
  long double t = x;
  if (!(std::abs(t) <= 8.0L)) return static_cast<double>(table.eval(n, t));
  long double shift = 0.0L;
  while (t > 1.0L) {
    t -= 1.0L;
    if (n > 0) shift += n * std::pow(t, static_cast<long double>(n - 1));
  }
  while (t < 0.0L) {
    if (n > 0) shift -= n * std::pow(t, static_cast<long double>(n - 1));
    t += 1.0L;
  }
  return static_cast<double>(unit(t) + shift);
}

double gamma_real(double sigma) {
  if (!std::isfinite(sigma)) throw Error(ErrorKind::Domain, "gamma_real: non-finite argument");
  if (sigma == 0.0 || sigma == -1.0) {
    throw Error(ErrorKind::Pole, "gamma_real: pole at sigma = " + std::to_string(sigma));
  }
  if (sigma < -1.0) throw Error(ErrorKind::Domain, "gamma_real: sigma must exceed -1");
  if (sigma < 0.0) return std::tgamma(sigma + 1.0) / sigma;
  return std::tgamma(sigma);
}

Complex principal_log(Complex z) {
  if (z == Complex(0.0, 0.0)) throw Error(ErrorKind::Domain, "logarithm of zero");
  double arg = std::atan2(z.imag(), z.real());
  // atan2(-0, x<0) gives -pi; the principal branch is (-pi, pi]
  if (arg <= -kPi) arg = kPi;
  return {std::log(std::abs(z)), arg};
}

Complex complex_pow(Complex base, double exponent) {
  if (base == Complex(0.0, 0.0)) throw Error(ErrorKind::Domain, "complex_pow: zero base");
  if (base.imag() == 0.0 && base.real() > 0.0) return {std::pow(base.real(), exponent), 0.0};
  return std::exp(exponent * principal_log(base));
}

Complex unit_phase(double t) {
  const double frac = t - std::round(t);
  const double angle = kTwoPi * frac;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace hlz
