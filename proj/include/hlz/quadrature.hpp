#pragma once

// Level-doubling tanh-sinh quadrature on a finite panel.

#include <cmath>
#include <numbers>

#include "hlz/special_core.hpp"

namespace hlz {

struct QuadResult {
  Complex value;
  double err = 0.0;  // |I_L - I_{L-1}| at the final level
  int levels = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Integrates f over [lo, hi]. f must be finite on the open interval; nodes
/// never touch the endpoints. Stops once two successive levels differ by at
/// most abs_tol (or by 1e-15 relative), or after max_levels halvings.
template <class F>
QuadResult tanh_sinh(F&& f, double lo, double hi, double abs_tol, int max_levels) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  constexpr double kTMax = 3.5;

  const double half = 0.5 * (hi - lo);

  QuadResult res;
  CompensatedSum<Complex> sum;

  auto add_node = [&](double t) {
    const double u = kHalfPi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = half * kHalfPi * std::cosh(t) / (ch * ch);
    // distance from the nearer endpoint, computed without cancellation
    const double gap = half * 2.0 / (1.0 + std::exp(2.0 * std::abs(u)));
    const double x = t >= 0.0 ? hi - gap : lo + gap;
    if (w == 0.0 || gap == 0.0) return;
    sum.add(w * Complex(f(x)));
    ++res.evaluations;
  };

  double h = 0.5;
  add_node(0.0);
  for (double t = h; t <= kTMax; t += h) {
    add_node(t);
    add_node(-t);
  }
  Complex prev = h * sum.value();
  res.value = prev;

  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTMax; t += 2.0 * h) {
      add_node(t);
      add_node(-t);
    }
    const Complex cur = h * sum.value();
    res.err = std::abs(cur - prev);
    res.value = cur;
    res.levels = level;
    if (level >= 2 && (res.err <= abs_tol || res.err <= 1e-15 * std::abs(cur))) {
      res.converged = true;
      break;
    }
    prev = cur;
  }
  return res;
}

}  // namespace hlz
