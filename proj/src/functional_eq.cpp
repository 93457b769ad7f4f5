#include "hlz/functional_eq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hlz/asymptotic.hpp"
#include "hlz/kernels.hpp"
#include "hlz/quadrature.hpp"

namespace hlz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kTailTerms = 60;
const Complex kI{0.0, 1.0};

void require_sigma_neg(double sigma) {
  if (!(sigma > -1.0 && sigma < 0.0)) {
    throw Error(ErrorKind::Domain, "functional equation route needs -1 < sigma < 0");
  }
}

void require_a_open(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw Error(ErrorKind::Domain, "functional equation route needs 0 < a < 1 strictly");
  }
}

// (s-1)(s-2)...(s-k)
double falling(double s, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c *= (s - j);
  return c;
}

struct SumResult {
  Complex value;
  double err = 0.0;
};

// sum_{n>=1} e^{2 pi i n a} n^{s-1}
SumResult exp_sum(double sigma, double a, const FESumConfig& cfg) {
  CompensatedSum<Complex> sum;
  for (int n = 1; n <= cfg.n_max; ++n) {
    sum.add(unit_phase(n * a) * std::pow(static_cast<double>(n), sigma - 1.0));
  }
  const long n0 = cfg.n_max + 1L;
  const Complex w = unit_phase(a);
  SumResult out;
  if (cfg.use_tail_correction) {
    const auto beta = geometric_operator_coeffs(w, kTailTerms);
    const double base = static_cast<double>(n0);
    const TailResult tail = oscillatory_tail(beta, unit_phase(static_cast<double>(n0) * a), [&](int k) {
      return Complex(falling(sigma, k) * std::pow(base, sigma - 1.0 - k), 0.0);
    });
    sum.add(tail.value);
    out.err = tail.err;
  } else {
    out.err = std::pow(static_cast<double>(n0), sigma - 1.0) / std::abs(1.0 - w);
  }
  out.value = sum.value();
  out.err += 4.0 * kEps * cfg.n_max;
  return out;
}

}  // namespace

void validate(const FESumConfig& cfg) {
  if (cfg.n_max < 16) throw Error(ErrorKind::Domain, "FESumConfig.n_max must be >= 16");
}

EvalResult zeta_fe_rhs(double sigma, double a, const FESumConfig& cfg) {
  require_sigma_neg(sigma);
  require_a_open(a);
  validate(cfg);

  const SumResult plus = exp_sum(sigma, a, cfg);
  const Complex minus = std::conj(plus.value);  // sum with e^{-2 pi i n a}
  const Complex rot = std::polar(1.0, kPi * sigma / 2.0);
  const Complex bracket = rot * plus.value - std::conj(rot) * minus;
  const Complex pref = -kPi * kI * std::pow(kTwoPi, sigma - 1.0) /
                       (gamma_real(sigma) * std::sin(kPi * sigma));
  const Complex value = pref * bracket;
  const double err = std::abs(pref) * 2.0 * plus.err + 8.0 * kEps * std::abs(value);
  return {value, err, Method::FunctionalEq};
}

EvalResult phi_fe_rhs(double sigma, double a, Complex z, const FESumConfig& cfg) {
  require_sigma_neg(sigma);
  require_a_open(a);
  validate(cfg);
  validate(ParamPoint{a, z});
  if (z == Complex(1.0, 0.0)) {
    throw Error(ErrorKind::Domain, "phi_fe_rhs needs z != 1 (the n = 0 term is singular)");
  }

  const Complex log_z = principal_log(z);
  const double e = sigma - 1.0;

  CompensatedSum<Complex> sum;
  sum.add(complex_pow(-log_z, e));
  for (int n = 1; n <= cfg.n_max; ++n) {
    const double two_pi_n = kTwoPi * n;
    const Complex phase = unit_phase(n * a);
    sum.add(complex_pow(Complex(0.0, two_pi_n) - log_z, e) * phase);
    sum.add(complex_pow(Complex(0.0, -two_pi_n) - log_z, e) * std::conj(phase));
  }

  double err = 0.0;
  const long n0 = cfg.n_max + 1L;
  const double m0 = static_cast<double>(n0);
  if (cfg.use_tail_correction) {
    const Complex w = unit_phase(a);
    const Complex phase_n0 = unit_phase(m0 * a);
    for (int side : {1, -1}) {
      const Complex step(0.0, side * kTwoPi);  // d/dm of the base
      const Complex base = step * m0 - log_z;
      const auto beta = geometric_operator_coeffs(side > 0 ? w : std::conj(w), kTailTerms);
      const TailResult tail = oscillatory_tail(
          beta, side > 0 ? phase_n0 : std::conj(phase_n0), [&](int k) {
            return falling(sigma, k) * std::pow(step, k) * complex_pow(base, e - k);
          });
      sum.add(tail.value);
      err += tail.err;
    }
  } else {
    const double dist = std::abs(1.0 - unit_phase(a));
    err = 2.0 * std::pow(kTwoPi * m0, e) / dist;
  }

  const Complex pref = std::exp(-a * log_z) * gamma_real(1.0 - sigma);
  const Complex value = pref * sum.value();
  err = std::abs(pref) * (err + 8.0 * kEps * cfg.n_max) + 8.0 * kEps * std::abs(value);
  return {value, err, Method::FunctionalEq};
}

ExpansionCheck<double> verify_kernel_expansion_z1(double a, double x, int n_max) {
  if (!(a > 0.0 && a < 1.0)) throw Error(ErrorKind::Domain, "expansion check needs 0 < a < 1");
  if (!(x > 0.0)) throw Error(ErrorKind::Domain, "expansion check needs x > 0");
  if (n_max < 1) throw Error(ErrorKind::Domain, "expansion check needs n_max >= 1");
  CompensatedSum<double> sum;
  for (int n = 1; n <= n_max; ++n) {
    const Complex two_pi_i_n(0.0, kTwoPi * n);
    const Complex phase = unit_phase(-n * a);
    const Complex lower = x * phase / (two_pi_i_n * (x - two_pi_i_n));
    const Complex upper = x * std::conj(phase) / (two_pi_i_n * (x + two_pi_i_n));
    sum.add((lower - upper).real());
  }
  return {sum.value(), kernel_G(a, x)};
}

ExpansionCheck<Complex> verify_kernel_expansion_zne1(double a, Complex z, double x, int n_max) {
  if (!(a > 0.0 && a < 1.0)) throw Error(ErrorKind::Domain, "expansion check needs 0 < a < 1");
  if (!(x > 0.0)) throw Error(ErrorKind::Domain, "expansion check needs x > 0");
  if (n_max < 0) throw Error(ErrorKind::Domain, "expansion check needs n_max >= 0");
  validate(ParamPoint{a, z});
  if (z == Complex(1.0, 0.0)) throw Error(ErrorKind::WrongKernel, "zne1 expansion needs z != 1");

  const Complex log_z = principal_log(z);
  const Complex z_pow = std::exp(-a * log_z);
  CompensatedSum<Complex> sum;
  auto term = [&](int n) {
    const Complex pole = Complex(0.0, kTwoPi * n) + log_z;
    return x * z_pow * unit_phase(-n * a) / (pole * (x - pole));
  };
  sum.add(term(0));
  for (int n = 1; n <= n_max; ++n) {
    sum.add(term(n));
    sum.add(term(-n));
  }
  return {sum.value(), kernel_Gz(a, z, x)};
}

MellinCheck verify_mellin_identity(double sigma, Complex w) {
  require_sigma_neg(sigma);
  if (w == Complex(0.0, 0.0)) throw Error(ErrorKind::Domain, "Mellin check needs w != 0");
  if (w.imag() == 0.0 && w.real() > 0.0) {
    throw Error(ErrorKind::Domain, "w on the positive real axis: integrand has a non-integrable pole");
  }

  const double r = std::abs(w);
  const double head = r / 4.0;
  const double tail = 4.0 * r;
  constexpr int kTerms = 40;  // both expansions converge like 4^{-k}

  MellinCheck out;
  CompensatedSum<Complex> sum;

  // (0, head]: 1/(x - w) = -(1/w) sum_k (x/w)^k
  Complex w_pow = w;
  for (int k = 0; k < kTerms; ++k) {
    const double p = k + sigma + 1.0;
    sum.add(-std::pow(head, p) / (p * w_pow));
    w_pow *= w;
  }
  // [tail, inf): 1/(x - w) = (1/x) sum_k (w/x)^k
  w_pow = Complex(1.0, 0.0);
  for (int k = 0; k < kTerms; ++k) {
    sum.add(w_pow * std::pow(tail, sigma - k) / (k - sigma));
    w_pow *= w;
  }
  out.lhs_err += 2.0 * std::pow(0.25, kTerms) * std::pow(r, sigma) / (1.0 + sigma);

  // [head, tail] on panels no longer than the pole's distance from the axis
  const double max_len = std::max(std::abs(w.imag()), 0.05 * r);
  for (double lo = head; lo < tail;) {
    const double hi = std::min({2.0 * lo, lo + max_len, tail});
    const QuadResult q = tanh_sinh([&](double x) { return std::pow(x, sigma) / (x - w); }, lo, hi,
                                   1e-15, 10);
    sum.add(q.value);
    out.lhs_err += q.err;
    lo = hi;
  }
  out.lhs = sum.value();

  double arg = std::arg(w);
  if (arg <= 0.0) arg += kTwoPi;  // arg in (0, 2 pi)
  const Complex w_s = std::polar(std::pow(r, sigma), sigma * arg);
  out.rhs = Complex(0.0, kTwoPi) / (1.0 - std::polar(1.0, kTwoPi * sigma)) * w_s;
  return out;
}

}  // namespace hlz
