#pragma once

// Tails of oscillatory sums  sum_{m >= n0} w^m f(m)  with |w| = 1, w != 1.
//
// Formally sum_m w^m e^{mD} f(n0) = w^{n0} (1 - w e^D)^{-1} f(n0), so with
// (1 - w e^t)^{-1} = sum_k beta_k t^k the tail is w^{n0} sum_k beta_k f^{(k)}(n0).
// The expansion is asymptotic in n0; its smallest term is about
// exp(-|log w| n0), so callers pick n0 >= ~40/|log w|.

#include <algorithm>
#include <cmath>
#include <vector>

#include "hlz/special_core.hpp"

namespace hlz {

/// beta_0 .. beta_{count-1} for (1 - w e^t)^{-1}.
std::vector<Complex> geometric_operator_coeffs(Complex w, int count);

struct TailResult {
  Complex value;
  double err = 0.0;  // magnitude of the last term used
  int terms = 0;
};

/// deriv(k) must return f^{(k)}(n0). phase_n0 = w^{n0}, supplied by the caller
/// so it can be formed without accumulated rounding.
template <class Deriv>
TailResult oscillatory_tail(const std::vector<Complex>& beta, Complex phase_n0, Deriv&& deriv) {
  TailResult res;
  CompensatedSum<Complex> sum;
  // For real w every other beta_k can vanish (w = -1 gives an odd generating
  // function), so decisions use the larger of each adjacent pair of terms.
  double prev_pair = INFINITY;
  double prev = INFINITY;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const Complex term = beta[k] * deriv(static_cast<int>(k));
    const double mag = std::abs(term);
    const double pair = k == 0 ? mag : std::max(mag, prev);
    if (k > 3 && pair > prev_pair) break;  // asymptotic series started to diverge
    sum.add(term);
    res.terms = static_cast<int>(k) + 1;
    res.err = pair;
    prev_pair = pair;
    prev = mag;
    if (k > 0 && pair <= 1e-18 * std::abs(sum.value())) break;
  }
  res.value = phase_n0 * sum.value();
  return res;
}

}  // namespace hlz
