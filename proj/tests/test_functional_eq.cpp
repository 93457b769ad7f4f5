#include <doctest.h>

#include <random>

#include "hlz/functional_eq.hpp"

using namespace hlz;

TEST_CASE("Hurwitz functional equation") {
  const EvalResult r = zeta_fe_rhs(-0.5, 0.5);
  CHECK(r.method == Method::FunctionalEq);
  CHECK(std::abs(r.value - hurwitz_integral_neg(-0.5, 0.5).value) <= 1e-6);
  CHECK(std::abs(zeta_fe_rhs(-0.5, 0.25).value.real() - hurwitz_em(-0.5, 0.25).value.real()) <= 1e-6);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> us(-0.95, -0.05), ua(0.05, 0.95);
  for (int k = 0; k < 20; ++k) CHECK(std::abs(zeta_fe_rhs(us(rng), ua(rng)).value.imag()) <= 1e-10);

  CHECK_THROWS_AS(zeta_fe_rhs(-0.5, 1.0), Error);
  CHECK_THROWS_AS(zeta_fe_rhs(-0.5, 0.0), Error);
  CHECK_THROWS_AS(zeta_fe_rhs(0.5, 0.5), Error);
  CHECK_THROWS_AS(zeta_fe_rhs(-1.0, 0.5), Error);
}

TEST_CASE("Lerch functional equation") {
  CHECK(std::abs(phi_fe_rhs(-0.5, 0.5, Complex(-1.0, 0.0)).value -
                 phi_integral_neg(-0.5, 0.5, Complex(-1.0, 0.0)).value) <= 1e-6);
  CHECK(std::abs(phi_fe_rhs(-0.5, 0.5, Complex(0.5, 0.0)).value - phi_series(-0.5, 0.5, Complex(0.5, 0.0)).value) <=
        1e-6);
  CHECK(std::abs(phi_fe_rhs(-0.5, 0.3, Complex(0.0, 1.0)).value -
                 phi_integral_neg(-0.5, 0.3, Complex(0.0, 1.0)).value) <= 1e-6);
  try {
    phi_fe_rhs(-0.5, 0.5, Complex(1.0, 0.0));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("functional equations on the default grid") {
  const std::vector<Complex> zs{{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.5, 0.0}, unit_phase(1.0 / 3.0)};
  for (Complex z : zs) {
    double worst = 0.0;
    for (double s : {-0.9, -0.7, -0.5, -0.3, -0.1}) {
      for (int k = 1; k <= 9; ++k) {
        const double a = k / 10.0;
        const bool one = z == Complex(1.0, 0.0);
        const Complex lhs = (one ? hurwitz_integral_neg(s, a) : phi_integral_neg(s, a, z)).value;
        const Complex rhs = (one ? zeta_fe_rhs(s, a) : phi_fe_rhs(s, a, z)).value;
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("bilateral sum under conjugation") {
  for (double a : {0.1, 0.37, 0.5, 0.9}) {
    for (Complex z : {Complex(0.0, 1.0), Complex(0.3, -0.6), unit_phase(0.8)}) {
      const Complex up = phi_fe_rhs(-0.4, a, z).value;
      const Complex down = phi_fe_rhs(-0.4, a, std::conj(z)).value;
      CHECK(std::abs(down - std::conj(up)) <= 1e-10);
    }
  }
}

TEST_CASE("uncorrected truncation shrinks with n_max") {
  double ratio_sum = 0.0;
  int count = 0;
  for (double s : {-0.7, -0.5, -0.3}) {
    for (double a : {0.2, 0.45, 0.7}) {
      const Complex exact = hurwitz_integral_neg(s, a).value;
      FESumConfig cfg;
      cfg.use_tail_correction = false;
      cfg.n_max = 1024;
      const double e1 = std::abs(zeta_fe_rhs(s, a, cfg).value - exact);
      cfg.n_max = 2048;
      const double e2 = std::abs(zeta_fe_rhs(s, a, cfg).value - exact);
      ratio_sum += e1 / e2;
      ++count;
    }
  }
  CHECK(ratio_sum / count >= 1.8);

  FESumConfig tiny;
  tiny.n_max = 8;
  CHECK_THROWS_AS(validate(tiny), Error);
}

TEST_CASE("partial-fraction expansion of G") {
  const auto c = verify_kernel_expansion_z1(0.5, 1.0, 10000);
  CHECK(std::abs(c.truncated_sum - c.reference) <= 5e-4);
  const auto d = verify_kernel_expansion_z1(0.25, 0.1, 10000);
  CHECK(std::abs(d.truncated_sum - d.reference) <= 5e-4);

  // tightening with N, at roughly N^{-2}
  const auto small = verify_kernel_expansion_z1(0.5, 1.0, 100);
  const auto large = verify_kernel_expansion_z1(0.5, 1.0, 1000);
  CHECK(std::abs(large.truncated_sum - large.reference) < std::abs(small.truncated_sum - small.reference) / 50.0);
}

TEST_CASE("partial-fraction expansion of G_z") {
  for (Complex z : {Complex(-1.0, 0.0), Complex(0.0, 1.0)}) {
    const auto c = verify_kernel_expansion_zne1(0.5, z, 1.0, 10000);
    CHECK(std::abs(c.truncated_sum - c.reference) <= 5e-4);
    const auto c2 = verify_kernel_expansion_zne1(0.5, z, 1.0, 20000);
    CHECK(std::abs(c2.truncated_sum - c2.reference) < std::abs(c.truncated_sum - c.reference));
  }
  // every term carries a factor x
  const auto tiny = verify_kernel_expansion_zne1(0.3, Complex(0.0, 1.0), 1e-12, 50);
  CHECK(std::abs(tiny.truncated_sum) < 1e-11);
  CHECK(std::abs(tiny.reference) < 1e-11);
  CHECK_THROWS_AS(verify_kernel_expansion_zne1(0.5, Complex(1.0, 0.0), 1.0, 10), Error);
}

TEST_CASE("Mellin transform of 1/(x - w)") {
  const double s = -0.5;
  const MellinCheck up = verify_mellin_identity(s, Complex(0.0, kTwoPi));
  CHECK(std::abs(up.lhs - up.rhs) <= 1e-6);
  // arg(2 pi i) = pi/2, arg(-2 pi i) = 3 pi/2 on the (0, 2 pi) branch
  const Complex expected_up =
      Complex(0.0, kTwoPi) / (1.0 - std::polar(1.0, kTwoPi * s)) * std::pow(kTwoPi, s) * std::polar(1.0, kPi * s / 2.0);
  CHECK(std::abs(up.rhs - expected_up) < 1e-14);

  const MellinCheck down = verify_mellin_identity(s, Complex(0.0, -kTwoPi));
  CHECK(std::abs(down.lhs - down.rhs) <= 1e-6);
  const Complex expected_down = Complex(0.0, kTwoPi) / (1.0 - std::polar(1.0, kTwoPi * s)) * std::pow(kTwoPi, s) *
                                std::polar(1.0, 3.0 * kPi * s / 2.0);
  CHECK(std::abs(down.rhs - expected_down) < 1e-14);

  const MellinCheck mixed = verify_mellin_identity(s, Complex(std::log(0.5), kTwoPi));
  CHECK(std::abs(mixed.lhs - mixed.rhs) <= 1e-6);

  CHECK_THROWS_AS(verify_mellin_identity(s, Complex(2.0, 0.0)), Error);
  CHECK_THROWS_AS(verify_mellin_identity(s, Complex(0.0, 0.0)), Error);
  CHECK_NOTHROW(verify_mellin_identity(-0.3, Complex(-1.0, 0.0)));
}
