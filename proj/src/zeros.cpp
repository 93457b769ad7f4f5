#include "hlz/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hlz {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CaseI: return "CaseI";
    case Verdict::CaseII: return "CaseII";
    case Verdict::CaseIII: return "CaseIII";
    case Verdict::ZeroExists: return "ZeroExists";
  }
  return "Unknown";
}

RegionVerdict classify(double a, Complex z) {
  validate(ParamPoint{a, z});
  std::ostringstream detail;
  if (z == Complex(1.0, 0.0)) {
    if (a >= kB2Minus && a <= 0.5) {
      detail << "z = 1, b2- <= a <= 1/2";
      return {Verdict::CaseI, detail.str()};
    }
    if (a >= kB2Plus) {
      detail << "z = 1, b2+ <= a <= 1";
      return {Verdict::CaseI, detail.str()};
    }
    detail << "z = 1, a outside [b2-, 1/2] u [b2+, 1]: zeta(0,a) and zeta(-1,a) differ in sign";
    return {Verdict::ZeroExists, detail.str()};
  }
  if (z.imag() == 0.0) {
    const double product = (1.0 - z.real()) * (1.0 - a);
    if (product <= 1.0) {
      detail << "z real, (1-z)(1-a) = " << product << " <= 1";
      return {Verdict::CaseII, detail.str()};
    }
    detail << "z real, (1-z)(1-a) = " << product << " > 1: Phi(-1,a,z) < 0 < Phi(0,a,z)";
    return {Verdict::ZeroExists, detail.str()};
  }
  detail << "z not real: Im Phi(sigma,a,z) keeps one sign";
  return {Verdict::CaseIII, detail.str()};
}

std::vector<double> interior_grid(double lo, double hi, int n) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n));
  const double h = (hi - lo) / n;
  for (int i = 0; i < n; ++i) g.push_back(lo + (i + 0.5) * h);
  return g;
}

namespace {

void validate(const ScanOptions& opts) {
  if (!(opts.grid_step > 0.0 && opts.grid_step <= 0.01)) {
    throw Error(ErrorKind::Domain, "scan needs 0 < grid_step <= 0.01");
  }
  if (!(opts.tol > 0.0)) throw Error(ErrorKind::Domain, "scan needs tol > 0");
}

// Brackets sign changes of component(Phi) on the interior grid and bisects each.
template <class Component>
ZeroReport scan_component(double a, Complex z, const ScanOptions& opts, Component&& component) {
  auto f = [&](double sigma) {
    const EvalResult r = evaluate(sigma, a, z, opts.quad);
    return std::pair{component(r.value), r.abs_err};
  };

  ZeroReport rep;
  rep.grid_step = opts.grid_step;
  rep.value_at_zero = component(special_value(0, a, z));
  rep.value_at_minus_one = component(special_value(-1, a, z));

  const int n = static_cast<int>(std::lround(1.0 / opts.grid_step));
  const std::vector<double> grid = interior_grid(-1.0, 0.0, n);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double s : grid) values.push_back(f(s).first);

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double f0 = values[i];
    const double f1 = values[i + 1];
    if (!((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0))) continue;

    double lo = grid[i], hi = grid[i + 1];
    double flo = f0;
    while (hi - lo > opts.tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = f(mid).first;
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    const double root = 0.5 * (lo + hi);
    const auto [at_root, err] = f(root);
    rep.brackets.emplace_back(grid[i], grid[i + 1]);
    rep.roots.push_back(root);
    rep.residuals.push_back(std::abs(at_root));
    rep.residual_errs.push_back(err);
  }
  return rep;
}

}  // namespace

ZeroReport scan_zeros(double a, double z, const ScanOptions& opts) {
  validate(ParamPoint{a, Complex(z, 0.0)});
  validate(opts);
  return scan_component(a, Complex(z, 0.0), opts, [](Complex v) { return v.real(); });
}

ZeroReport scan_imag_sign_changes(double a, Complex z, const ScanOptions& opts) {
  validate(ParamPoint{a, z});
  if (z.imag() == 0.0) throw Error(ErrorKind::Domain, "imaginary-part scan needs non-real z");
  validate(opts);
  return scan_component(a, z, opts, [](Complex v) { return v.imag(); });
}

Case3Report check_case3(double a, double r, double theta, const std::vector<double>& sigma_grid,
                        const QuadConfig& cfg) {
  const Complex z = std::polar(r, theta);
  if (std::abs(std::sin(theta)) < 1e-12 || z.imag() == 0.0) {
    throw Error(ErrorKind::Domain, "check_case3 needs non-real z (theta not a multiple of pi)");
  }
  validate(ParamPoint{a, z});

  Case3Report rep;
  rep.min_abs_im = std::numeric_limits<double>::infinity();
  int first = 0;
  bool constant = true;
  for (double s : sigma_grid) {
    const double im = evaluate(s, a, z, cfg).value.imag();
    const int sg = (im > 0.0) - (im < 0.0);
    if (first == 0) first = sg;
    if (sg == 0 || sg != first) constant = false;
    rep.min_abs_im = std::min(rep.min_abs_im, std::abs(im));
  }
  rep.constant_sign = constant && !sigma_grid.empty();
  rep.sign = rep.constant_sign ? first : 0;
  return rep;
}

bool verify_sign_constancy(SignBand band, const std::vector<double>& sigma_grid,
                           const std::vector<double>& a_grid, const QuadConfig& cfg) {
  for (double a : a_grid) {
    const bool in_band = band == SignBand::Lower ? (a >= kB2Minus && a <= 0.5)
                                                 : (a >= kB2Plus && a <= 1.0);
    if (!in_band) throw Error(ErrorKind::Domain, "a outside the requested sign band");
  }
  for (double s : sigma_grid) {
    if (!(s > -1.0 && s < 0.0)) throw Error(ErrorKind::Domain, "sigma grid must lie in (-1, 0)");
  }
  for (double a : a_grid) {
    for (double s : sigma_grid) {
      const EvalResult r = evaluate(s, a, Complex(1.0, 0.0), cfg);
      const double v = r.value.real();
      const bool sign_ok = band == SignBand::Lower ? v > 0.0 : v < 0.0;
      if (!sign_ok || std::abs(v) <= r.abs_err) return false;
    }
  }
  return true;
}

}  // namespace hlz
