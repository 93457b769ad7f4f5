#include <doctest.h>

#include <random>

#include "hlz/special_core.hpp"

using namespace hlz;

TEST_CASE("low-degree Bernoulli polynomials match their closed forms") {
  for (double x : {-1.5, -0.3, 0.0, 0.25, 0.5, 1.0, 1.7}) {
    CHECK(bernoulli_poly(0, x) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bernoulli_poly(1, x) == doctest::Approx(x - 0.5).epsilon(1e-15));
    CHECK(bernoulli_poly(2, x) == doctest::Approx(x * x - x + 1.0 / 6.0).epsilon(1e-14));
  }
  CHECK(std::abs(bernoulli_poly(2, kB2Minus)) < 1e-15);
  CHECK(std::abs(bernoulli_poly(2, kB2Plus)) < 1e-15);
  CHECK(bernoulli_poly(1, 0.5) == 0.0);
  CHECK(bernoulli_poly(2, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("Bernoulli numbers") {
  const auto& t = BernoulliTable::instance();
  CHECK(static_cast<double>(t.number(4)) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
  CHECK(static_cast<double>(t.number(12)) == doctest::Approx(-691.0 / 2730.0).epsilon(1e-15));
  CHECK(static_cast<double>(t.number(32)) == doctest::Approx(-7709321041217.0 / 510.0).epsilon(1e-14));
  for (int n = 3; n <= 31; n += 2) CHECK(t.number(n) == 0.0L);
  for (int n = 2; n <= 32; ++n) {
    CHECK(bernoulli_poly(n, 0.0) == doctest::Approx(bernoulli_poly(n, 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("degree beyond the table is rejected") {
  CHECK_THROWS_AS(bernoulli_poly(33, 0.5), Error);
  try {
    bernoulli_poly(40, 0.5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeOverflow);
  }
  CHECK_THROWS_AS(bernoulli_poly(-1, 0.5), Error);
}

TEST_CASE("Bernoulli reflection B_n(1-x) = (-1)^n B_n(x)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 2; n <= 32; ++n) {
    for (int k = 0; k < 100; ++k) {
      const double x = u(rng);
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      const double lhs = bernoulli_poly(n, 1.0 - x);
      const double rhs = sign * bernoulli_poly(n, x);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("derivative of B_n is n B_{n-1}") {
  const double h = 1e-5;
  for (int n = 1; n <= 12; ++n) {
    for (double x : {0.1, 0.37, 0.8}) {
      const double fd = (bernoulli_poly(n, x + h) - bernoulli_poly(n, x - h)) / (2.0 * h);
      CHECK(fd == doctest::Approx(n * bernoulli_poly(n - 1, x)).epsilon(1e-8));
    }
  }
}

TEST_CASE("gamma_real values and poles") {
  const double sqrt_pi = std::sqrt(kPi);
  CHECK(gamma_real(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-14));
  CHECK(gamma_real(-0.5) == doctest::Approx(-2.0 * sqrt_pi).epsilon(1e-14));
  CHECK(gamma_real(3.0) == doctest::Approx(2.0).epsilon(1e-15));
  for (double s : {-0.999, -0.5, -1e-6}) CHECK(gamma_real(s) < 0.0);
  for (double bad : {0.0, -1.0}) {
    try {
      gamma_real(bad);
      FAIL("expected a pole error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Pole);
    }
  }
  CHECK_THROWS_AS(gamma_real(-1.5), Error);
}

TEST_CASE("gamma recursion on (-1, 5)") {
  for (int k = 0; k <= 29; ++k) {
    const double s = -0.9 + 0.2 * k;
    if (std::abs(s) < 1e-12) continue;
    const double lhs = gamma_real(s + 1.0);
    CHECK(std::abs(lhs - s * gamma_real(s)) <= 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("principal branch conventions") {
  CHECK(principal_log(Complex(-1.0, 0.0)).imag() == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(principal_log(Complex(-1.0, -0.0)).imag() == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(principal_log(Complex(0.0, -1.0)).imag() == doctest::Approx(-kPi / 2).epsilon(1e-15));

  const Complex i2 = complex_pow(Complex(0.0, 1.0), 2.0);
  CHECK(i2.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(i2.imag()) < 1e-15);

  const Complex r = complex_pow(Complex(-1.0, 0.0), 0.5);
  CHECK(std::abs(r.real()) < 1e-15);
  CHECK(r.imag() == doctest::Approx(1.0).epsilon(1e-15));

  // oracle: mpmath exp(-1.5 log(2 pi i))
  const Complex p = complex_pow(Complex(0.0, kTwoPi), -1.5);
  CHECK(p.real() == doctest::Approx(-0.0448967805312916404).epsilon(1e-13));
  CHECK(p.imag() == doctest::Approx(-0.0448967805312916404).epsilon(1e-13));

  CHECK_THROWS_AS(complex_pow(Complex(0.0, 0.0), 0.5), Error);
}

TEST_CASE("complex_pow agrees with real pow for positive bases") {
  for (double x : {1e-3, 0.5, 1.0, 3.7, 250.0}) {
    for (double s : {-1.7, -0.5, 0.3, 2.5}) {
      const Complex c = complex_pow(Complex(x, 0.0), s);
      CHECK(c.real() == doctest::Approx(std::pow(x, s)).epsilon(1e-13));
      CHECK(c.imag() == 0.0);
    }
  }
}

TEST_CASE("unit_phase reduces the angle exactly") {
  CHECK(unit_phase(0.25).real() == doctest::Approx(0.0).epsilon(1e-16));
  CHECK(std::abs(unit_phase(1e6 + 0.5) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(unit_phase(-0.25) - Complex(0.0, -1.0)) < 1e-15);
}

TEST_CASE("compensated sum recovers cancelled low bits") {
  CompensatedSum<double> s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1.0);

  CompensatedSum<Complex> c;
  for (int k = 0; k < 10; ++k) c.add(Complex(0.1, -0.1));
  CHECK(std::abs(c.value() - Complex(1.0, -1.0)) < 1e-16);
}
