#include "hlz/asymptotic.hpp"

namespace hlz {

std::vector<Complex> geometric_operator_coeffs(Complex w, int count) {
  // (1 - w) beta_k = w * sum_{j=1}^{k} beta_{k-j} / j!
  std::vector<Complex> beta;
  beta.reserve(static_cast<std::size_t>(count));
  const Complex d0 = 1.0 - w;
  std::vector<double> inv_fact(static_cast<std::size_t>(count) + 1, 1.0);
  for (int j = 1; j <= count; ++j) inv_fact[j] = inv_fact[j - 1] / j;
  for (int k = 0; k < count; ++k) {
    if (k == 0) {
      beta.push_back(1.0 / d0);
      continue;
    }
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j) acc += inv_fact[j] * beta[k - j];
    beta.push_back(w * acc / d0);
  }
  return beta;
}

}  // namespace hlz
