#include <doctest.h>

#include <sstream>

#include "hlz/identities.hpp"

using namespace hlz;

TEST_CASE("character tables") {
  CHECK(chi3().is_multiplicative());
  CHECK(chi3().is_primitive());
  CHECK(chi4().is_primitive());
  CHECK(principal_mod1().is_primitive());
  CHECK_FALSE(principal_mod(4).is_primitive());
  CHECK(principal_mod(4).is_multiplicative());
  CHECK(chi4()(-1) == Complex(-1.0, 0.0));
  CHECK(chi4()(7) == Complex(-1.0, 0.0));
  CHECK(chi3()(0) == Complex(0.0, 0.0));

  CHECK(characters_mod(1).size() == 1);
  CHECK(characters_mod(2).size() == 1);
  CHECK(characters_mod(3).size() == 2);
  CHECK(characters_mod(4).size() == 2);
  try {
    characters_mod(5);
    FAIL("expected unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }

  CHECK_THROWS_AS(CharacterTable(4, {1.0, 1.0, -1.0, 0.0}), Error);  // nonzero at a non-unit
  CHECK_THROWS_AS(CharacterTable(3, {1.0, 0.5, 0.0}), Error);        // not on the unit circle
  CHECK_THROWS_AS(CharacterTable(3, {1.0, -1.0}), Error);
  // periodic with the right zeros but not multiplicative
  const CharacterTable odd(5, {1.0, 1.0, -1.0, -1.0, 0.0});
  CHECK_FALSE(odd.is_multiplicative());
}

TEST_CASE("Dirichlet L values") {
  // Catalan's constant
  CHECK(std::abs(dirichlet_L(2.0, chi4()).value - Complex(0.915965594177219015, 0.0)) <= 1e-10);
  CHECK(std::abs(dirichlet_L(2.0, principal_mod1()).value.real() - kPi * kPi / 6.0) <= 1e-12);
  // L(1/2 + ..) region through the integral routes; mpmath dirichlet(s, [0,1,0,-1])
  CHECK(dirichlet_L(-0.5, chi4()).value.real() > 0.0);
  CHECK(dirichlet_L(-0.5, chi4()).value.real() == doctest::Approx(std::pow(4.0, 0.5) *
                                                                      (hurwitz_integral_neg(-0.5, 0.25).value.real() -
                                                                       hurwitz_integral_neg(-0.5, 0.75).value.real()))
                                                       .epsilon(1e-12));
  // L(3, chi3) = 4 pi^3 / (81 sqrt 3)
  CHECK(dirichlet_L(3.0, chi3()).value.real() == doctest::Approx(4.0 * kPi * kPi * kPi / (81.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(std::abs(dirichlet_L_direct(2.0, chi4()).value - dirichlet_L(2.0, chi4()).value) <= 1e-12);
}

TEST_CASE("polylogarithms at roots of unity from Hurwitz values") {
  CHECK(lerch_from_hurwitz(2.0, 1, 2).value.real() == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-12));
  CHECK(lerch_from_hurwitz(2.0, 1, 1).value.real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  // mpmath polylog(0.5, 1j)
  const Complex li = lerch_from_hurwitz(0.5, 1, 4).value;
  CHECK(std::abs(li - Complex(-0.427727932693978221, 0.667691457189609177)) <= 1e-9);
  CHECK(std::abs(li - Complex(0.0, 1.0) * phi_integral_pos(0.5, 1.0, Complex(0.0, 1.0)).value) <= 1e-9);
  CHECK(std::abs(polylog_series(3.0, Complex(-1.0, 0.0)).value.real() + 0.75 * 1.2020569031595942854) <= 1e-13);
}

TEST_CASE("Hurwitz values from polylogarithms") {
  CHECK(hurwitz_from_lerch(2.0, 1, 2).value.real() == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-12));
  CHECK(hurwitz_from_lerch(3.0, 1, 1).value.real() == doctest::Approx(1.2020569031595942854).epsilon(1e-13));
  CHECK(std::abs(hurwitz_from_lerch(2.5, 2, 3).value - hurwitz_em(2.5, 2.0 / 3.0).value) <= 1e-12);
  CHECK_THROWS_AS(hurwitz_from_lerch(0.5, 1, 3), Error);
}

TEST_CASE("Hurwitz -> Lerch -> Hurwitz round trip") {
  for (int q : {2, 3, 4, 6}) {
    for (int r = 1; r <= q; ++r) {
      const Complex direct = hurwitz_em(2.5, static_cast<double>(r) / q).value;
      CHECK(std::abs(hurwitz_from_lerch(2.5, r, q).value - direct) <= 1e-11);
    }
  }
}

TEST_CASE("Gauss sums") {
  const Complex g3 = gauss_sum(chi3());
  CHECK(std::abs(g3) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(std::abs(g3 - Complex(0.0, std::sqrt(3.0))) < 1e-14);
  CHECK(std::abs(gauss_sum(chi4()) - Complex(0.0, 2.0)) < 1e-14);
  // imprimitive: G_r(chi) vanishes for some r
  CHECK(std::abs(gauss_sum(principal_mod(4), 1)) < 1e-14);
  // G_r(chi) = conj(chi(r)) G_1(chi) for units r
  CHECK(std::abs(gauss_sum(chi4(), 3) - chi4()(3) * gauss_sum(chi4(), 1)) < 1e-14);
}

TEST_CASE("six relations") {
  for (int q : {1, 3, 4}) {
    for (double s : {2.0, 2.5, 3.0}) {
      const RelationResiduals r = verify_six_relations(s, q);
      for (double v : r.max_residual) CHECK(v <= 1e-9);
      CHECK(r.overall <= 1e-9);
    }
  }
  CHECK_THROWS_AS(verify_six_relations(0.5, 3), Error);
  CHECK_THROWS_AS(verify_six_relations(2.0, 7), Error);
}

TEST_CASE("character CSV") {
  std::istringstream good("# chi mod 4\nq=4\n1, 1, 0\n3, -1, 0\n2, 0, 0\n4, 0, 0\n");
  const CharacterTable t = parse_character_csv(good);
  CHECK(t.modulus() == 4);
  CHECK(t(3) == Complex(-1.0, 0.0));
  CHECK(std::abs(dirichlet_L(2.0, t).value - dirichlet_L(2.0, chi4()).value) < 1e-15);

  std::istringstream no_header("1, 1, 0\n");
  CHECK_THROWS_AS(parse_character_csv(no_header), Error);
  std::istringstream missing_row("q=3\n1, 1, 0\n2, -1, 0\n");
  CHECK_THROWS_AS(parse_character_csv(missing_row), Error);
  std::istringstream garbage("q=2\n1, one, 0\n2, 0, 0\n");
  CHECK_THROWS_AS(parse_character_csv(garbage), Error);
  std::istringstream out_of_range("q=2\n1, 1, 0\n3, 0, 0\n");
  CHECK_THROWS_AS(parse_character_csv(out_of_range), Error);
  try {
    load_character_csv("/nonexistent/chi.csv");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
}
