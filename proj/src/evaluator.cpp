#include "hlz/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hlz/asymptotic.hpp"
#include "hlz/quadrature.hpp"

namespace hlz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_one(Complex z) { return z == Complex(1.0, 0.0); }

void require_a(double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw Error(ErrorKind::Domain, "shift parameter a must lie in (0, 1], got " + std::to_string(a));
  }
}

void require_sigma_finite(double sigma) {
  if (!std::isfinite(sigma)) throw Error(ErrorKind::Domain, "sigma must be finite");
}

void require_integral_z(Complex z) {
  validate(ParamPoint{1.0, z});
  if (is_one(z)) {
    throw Error(ErrorKind::WrongKernel, "z = 1 must use the Hurwitz zeta integral");
  }
  if (std::abs(1.0 - z) < kMinUnitGap) {
    throw Error(ErrorKind::Conditioning, "|1 - z| below 1e-3; integral route is ill-conditioned");
  }
}

// Mellin transform  int_0^inf K(x) x^{sigma-1} dx  of one of the four kernels
//   z = 1:  H (keep_constant) or G
//   z != 1: E_z (keep_constant) or G_z
// (0, delta] is integrated termwise from the Taylor expansion, [delta, split]
// by panel quadrature, and [split, inf) with the algebraic parts of the kernel
// removed and integrated in closed form.
struct MellinResult {
  Complex integral;
  double err = 0.0;
};

MellinResult mellin_integral(double sigma, double a, Complex z, bool keep_constant,
                             const QuadConfig& cfg) {
  validate(cfg);
  const bool unit = is_one(z);
  const double split = cfg.split_point;

  // Taylor coefficients of the kernel about x = 0.
  std::vector<Complex> coeff;
  double delta = 0.0;
  if (unit) {
    const auto& table = BernoulliTable::instance();
    long double fact = 1.0L;
    for (int k = 0; k + 1 <= BernoulliTable::kMaxDegree; ++k) {
      fact *= (k + 1);
      coeff.emplace_back(static_cast<double>(table.eval(k + 1, 1.0L - a) / fact), 0.0);
    }
    delta = std::min(split, 1.5);
  } else {
    GzTaylor t = gz_taylor(a, z);
    coeff = std::move(t.coeff);
    delta = std::min(split, t.radius / 3.0);
  }
  if (!keep_constant) coeff[0] = 0.0;

  MellinResult out;
  CompensatedSum<Complex> total;

  // (0, delta]
  {
    double last = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      if (coeff[k] == Complex(0.0, 0.0)) continue;
      const double p = static_cast<double>(k) + sigma;
      const Complex term = coeff[k] * (std::pow(delta, p) / p);
      total.add(term);
      last = std::abs(term);
    }
    out.err += 2.0 * last;
  }

  auto kernel = [&](double x) -> Complex {
    if (unit) return keep_constant ? kernel_H(a, x) : kernel_G(a, x);
    return keep_constant ? kernel_Ez(a, z, x) : kernel_Gz(a, z, x);
  };

  const double panel_tol = cfg.tol / 8.0;

  // [delta, split]
  for (double lo = delta; lo < split;) {
    const double hi = std::min(2.0 * lo, split);
    const QuadResult q = tanh_sinh(
        [&](double x) { return kernel(x) * std::pow(x, sigma - 1.0); }, lo, hi, panel_tol,
        cfg.max_levels);
    total.add(q.value);
    out.err += q.err;
    lo = hi;
  }

  // [split, inf): only the decaying part e^{-ax}/(1 - z e^{-x}) is integrated.
  auto decaying = [&](double x) -> Complex {
    if (unit) return std::exp(-a * x) / -std::expm1(-x);
    return kernel_Ez(a, z, x);
  };
  const double zabs = std::abs(z);
  auto tail_bound = [&](double x) {
    const double rate = a - std::max(0.0, sigma - 1.0) / x;
    if (rate <= 0.5 * a) return std::numeric_limits<double>::infinity();
    return std::exp(-a * x) * std::pow(x, sigma - 1.0) / ((1.0 - zabs * std::exp(-x)) * rate);
  };
  const double target = cfg.tol * 1e-3;
  double lo = split;
  for (int panel = 0; panel < 64; ++panel) {
    double hi = 2.0 * lo;
    if (cfg.tail_cutoff > 0.0) hi = std::min(hi, cfg.tail_cutoff);
    if (hi <= lo) break;
    const QuadResult q = tanh_sinh(
        [&](double x) { return decaying(x) * std::pow(x, sigma - 1.0); }, lo, hi, panel_tol,
        cfg.max_levels);
    total.add(q.value);
    out.err += q.err;
    lo = hi;
    if (cfg.tail_cutoff > 0.0) {
      if (lo >= cfg.tail_cutoff) break;
    } else if (tail_bound(lo) < target) {
      break;
    }
  }
  const double truncation = tail_bound(lo);
  out.err += std::isfinite(truncation) ? truncation : std::abs(total.value());

  // algebraic pieces of the kernel on [split, inf)
  if (unit) {
    total.add(-std::pow(split, sigma - 1.0) / (1.0 - sigma));  // -1/x
    if (!keep_constant) total.add((0.5 - a) * std::pow(split, sigma) / sigma);
  } else if (!keep_constant) {
    total.add(std::pow(split, sigma) / (sigma * (1.0 - z)));
  }

  out.integral = total.value();
  out.err += 8.0 * kEps * std::abs(out.integral);
  return out;
}

EvalResult finish(const MellinResult& m, double sigma, Method method) {
  const double g = gamma_real(sigma);
  return {m.integral / g, m.err / std::abs(g), method};
}

// sum_{n=0}^{N-1} (n+a)^{-sigma} plus the Euler-Maclaurin tail at N + a.
EvalResult euler_maclaurin(double sigma, double a, int n_terms) {
  const auto& table = BernoulliTable::instance();
  CompensatedSum<double> sum;
  for (int n = 0; n < n_terms; ++n) sum.add(std::pow(n + a, -sigma));

  const double big = n_terms + a;
  sum.add(std::pow(big, 1.0 - sigma) / (sigma - 1.0));
  sum.add(0.5 * std::pow(big, -sigma));

  // B_{2k}/(2k)! * sigma (sigma+1) ... (sigma+2k-2) * big^{-sigma-2k+1}
  double rising = sigma;  // rising factorial with 2k-1 factors
  double fact = 2.0;      // (2k)!
  double power = std::pow(big, -sigma - 1.0);
  double last = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double term = static_cast<double>(table.number(2 * k)) / fact * rising * power;
    if (k <= 8) {
      sum.add(term);
    } else {
      last = std::abs(term);
    }
    rising *= (sigma + 2 * k - 1) * (sigma + 2 * k);
    fact *= (2 * k + 1) * (2 * k + 2);
    power /= big * big;
  }
  const double value = sum.value();
  return {Complex(value, 0.0), last + 16.0 * kEps * std::abs(value) + 1e-300,
          Method::EulerMaclaurin};
}

EvalResult series_inside_disk(double sigma, double a, Complex z) {
  const double r = std::abs(z);
  const bool real = z.imag() == 0.0;
  const double theta = std::arg(z);
  CompensatedSum<Complex> sum;
  double abs_sum = 0.0;
  double bound = 0.0;
  constexpr long kMaxTerms = 50'000'000;
  for (long n = 0; n < kMaxTerms; ++n) {
    const double mag = std::pow(r, static_cast<double>(n)) * std::pow(n + a, -sigma);
    Complex term;
    if (real) {
      term = Complex(std::pow(z.real(), static_cast<double>(n)) * std::pow(n + a, -sigma), 0.0);
    } else {
      term = std::polar(mag, theta * static_cast<double>(n));
    }
    sum.add(term);
    abs_sum += mag;

    // bounds every later ratio of consecutive magnitudes
    const double ratio = sigma >= 0.0 ? r : r * std::pow((n + a) / (n + 1 + a), sigma);
    if (ratio < 1.0) {
      bound = mag * ratio / (1.0 - ratio);
      if (bound <= 1e-17 * std::abs(sum.value()) || bound < 1e-300) break;
    }
  }
  Complex value = sum.value();
  if (real) value.imag(0.0);
  return {value, bound + 4.0 * kEps * abs_sum, Method::Series};
}

EvalResult series_on_circle(double sigma, double a, Complex z) {
  // z = e^{i theta}, theta != 0, sigma > 1: N direct terms plus the
  // asymptotic operator tail.
  const bool minus_one = z.imag() == 0.0;
  const double theta = minus_one ? kPi : std::arg(z);
  const double rate = std::abs(theta);
  const long n0 = static_cast<long>(std::ceil(45.0 / rate)) + 10;

  auto phase = [&](long n) -> Complex {
    if (minus_one) return {(n % 2 == 0) ? 1.0 : -1.0, 0.0};
    return std::polar(1.0, theta * static_cast<double>(n));
  };

  CompensatedSum<Complex> sum;
  double abs_sum = 0.0;
  for (long n = 0; n < n0; ++n) {
    const double mag = std::pow(n + a, -sigma);
    sum.add(phase(n) * mag);
    abs_sum += mag;
  }
  const Complex w = minus_one ? Complex(-1.0, 0.0) : std::polar(1.0, theta);
  const auto beta = geometric_operator_coeffs(w, 80);
  const double base = static_cast<double>(n0) + a;
  const TailResult tail = oscillatory_tail(beta, phase(n0), [&](int k) {
    // d^k/dm^k (m+a)^{-sigma} at m = n0
    double c = 1.0;
    for (int j = 0; j < k; ++j) c *= -(sigma + j);
    return Complex(c * std::pow(base, -sigma - k), 0.0);
  });
  sum.add(tail.value);
  Complex value = sum.value();
  if (minus_one) value.imag(0.0);
  return {value, tail.err + 4.0 * kEps * abs_sum, Method::Series};
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Series: return "Series";
    case Method::IntegralPos: return "IntegralPos";
    case Method::IntegralNeg: return "IntegralNeg";
    case Method::IntegralUnit: return "IntegralUnit";
    case Method::SpecialValue: return "SpecialValue";
    case Method::FunctionalEq: return "FunctionalEq";
    case Method::EulerMaclaurin: return "EulerMaclaurin";
  }
  return "Unknown";
}

void validate(const QuadConfig& cfg) {
  if (!(cfg.split_point > 0.0)) throw Error(ErrorKind::Domain, "split_point must be positive");
  if (!(cfg.tol > 0.0)) throw Error(ErrorKind::Domain, "quadrature tol must be positive");
  if (cfg.max_levels < 2) throw Error(ErrorKind::Domain, "max_levels must be at least 2");
  if (cfg.tail_cutoff < 0.0) throw Error(ErrorKind::Domain, "tail_cutoff must be >= 0");
  if (cfg.tail_cutoff > 0.0 && cfg.tail_cutoff <= cfg.split_point) {
    throw Error(ErrorKind::Domain, "tail_cutoff must exceed split_point");
  }
}

EvalResult phi_series(double sigma, double a, Complex z) {
  require_sigma_finite(sigma);
  require_a(a);
  validate(ParamPoint{a, z});
  if (!on_unit_circle(z)) return series_inside_disk(sigma, a, z);
  if (!(sigma > 1.0)) {
    throw Error(ErrorKind::NonConvergent,
                "Dirichlet series diverges for |z| = 1 and sigma <= 1; use an integral route");
  }
  if (is_one(z)) {
    EvalResult r = euler_maclaurin(sigma, a, 30);
    r.method = Method::Series;
    return r;
  }
  return series_on_circle(sigma, a, z);
}

EvalResult hurwitz_integral_pos(double sigma, double a, const QuadConfig& cfg) {
  require_a(a);
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw Error(ErrorKind::Domain, "hurwitz_integral_pos needs 0 < sigma < 1");
  }
  return finish(mellin_integral(sigma, a, Complex(1.0, 0.0), true, cfg), sigma,
                Method::IntegralPos);
}

EvalResult hurwitz_integral_neg(double sigma, double a, const QuadConfig& cfg) {
  require_a(a);
  if (!(sigma > -1.0 && sigma < 0.0)) {
    throw Error(ErrorKind::Domain, "hurwitz_integral_neg needs -1 < sigma < 0");
  }
  EvalResult r = finish(mellin_integral(sigma, a, Complex(1.0, 0.0), false, cfg), sigma,
                        Method::IntegralNeg);
  r.value.imag(0.0);
  return r;
}

EvalResult phi_integral_pos(double sigma, double a, Complex z, const QuadConfig& cfg) {
  require_a(a);
  require_sigma_finite(sigma);
  if (!(sigma > 0.0)) throw Error(ErrorKind::Domain, "phi_integral_pos needs sigma > 0");
  require_integral_z(z);
  const Method m = on_unit_circle(z) ? Method::IntegralUnit : Method::IntegralPos;
  return finish(mellin_integral(sigma, a, z, true, cfg), sigma, m);
}

EvalResult phi_integral_neg(double sigma, double a, Complex z, const QuadConfig& cfg) {
  require_a(a);
  if (!(sigma > -1.0 && sigma < 0.0)) {
    throw Error(ErrorKind::Domain, "phi_integral_neg needs -1 < sigma < 0");
  }
  require_integral_z(z);
  const Method m = on_unit_circle(z) ? Method::IntegralUnit : Method::IntegralNeg;
  return finish(mellin_integral(sigma, a, z, false, cfg), sigma, m);
}

Complex special_value(int order, double a, Complex z) {
  require_a(a);
  validate(ParamPoint{a, z});
  if (order != 0 && order != -1) throw Error(ErrorKind::Domain, "special_value order must be 0 or -1");
  if (is_one(z)) {
    if (order == 0) return {0.5 - a, 0.0};
    return {-a * a / 2.0 + a / 2.0 - 1.0 / 12.0, 0.0};
  }
  const Complex w = 1.0 - z;
  if (order == 0) return 1.0 / w;
  Complex v = a / w + z / (w * w);
  if (z.imag() == 0.0) v.imag(0.0);
  return v;
}

EvalResult hurwitz_em(double sigma, double a) {
  require_sigma_finite(sigma);
  if (sigma == 1.0) throw Error(ErrorKind::Pole, "zeta(s,a) has a pole at s = 1");
  if (!(a > 0.0)) throw Error(ErrorKind::Domain, "hurwitz_em needs a > 0");
  return euler_maclaurin(sigma, a, 30);
}

EvalResult evaluate(double sigma, double a, Complex z, const QuadConfig& cfg) {
  require_sigma_finite(sigma);
  require_a(a);
  validate(ParamPoint{a, z});
  if (sigma < -1.0) throw Error(ErrorKind::OutOfRange, "sigma must be >= -1");
  if (sigma == 0.0 || sigma == -1.0) {
    return {special_value(static_cast<int>(sigma), a, z), 0.0, Method::SpecialValue};
  }
  if (is_one(z)) {
    if (sigma == 1.0) throw Error(ErrorKind::Pole, "zeta(s,a) has a simple pole at s = 1");
    if (sigma > 1.0) return phi_series(sigma, a, z);
    if (sigma > 0.0) return hurwitz_integral_pos(sigma, a, cfg);
    return hurwitz_integral_neg(sigma, a, cfg);
  }
  if (std::abs(1.0 - z) < kMinUnitGap) {
    throw Error(ErrorKind::Conditioning, "|1 - z| below 1e-3");
  }
  if (sigma > 1.0 || std::abs(z) <= kSeriesRadius) return phi_series(sigma, a, z);
  if (sigma > 0.0) return phi_integral_pos(sigma, a, z, cfg);
  return phi_integral_neg(sigma, a, z, cfg);
}

}  // namespace hlz
