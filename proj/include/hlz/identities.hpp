#pragma once

// Linear relations between Dirichlet L-functions, Hurwitz zeta values at
// rationals r/q and polylogarithms at q-th roots of unity.

#include <array>
#include <istream>
#include <string>
#include <vector>

#include "hlz/evaluator.hpp"

namespace hlz {

/// Values chi(1), ..., chi(q) of a Dirichlet character mod q.
class CharacterTable {
 public:
  /// Throws ErrorKind::Domain if q < 1, the table length differs from q,
  /// chi(n) != 0 for some gcd(n,q) > 1, or a unit value is not of modulus 1.
  CharacterTable(int modulus, std::vector<Complex> values, std::string name = {});

  int modulus() const noexcept { return q_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Complex>& values() const noexcept { return values_; }

  /// chi(n) for any integer n (periodic extension).
  Complex operator()(long n) const;

  CharacterTable conjugate() const;

  /// Completely multiplicative on units and periodic mod q.
  bool is_multiplicative() const;

  /// Not induced from any modulus properly dividing q.
  bool is_primitive() const;

 private:
  int q_;
  std::vector<Complex> values_;
  std::string name_;
};

/// The character mod 1 (chi = 1).
CharacterTable principal_mod1();
CharacterTable principal_mod(int q);
/// The real primitive characters mod 3 and mod 4.
CharacterTable chi3();
CharacterTable chi4();

/// All Dirichlet characters mod q for q in {1, 2, 3, 4}.
/// Throws ErrorKind::Unsupported otherwise.
std::vector<CharacterTable> characters_mod(int q);

/// Reads a character table: a header line "q=<modulus>" then rows "n, re, im"
/// for n = 1..q in any order. Lines starting with '#' and blank lines are skipped.
CharacterTable parse_character_csv(std::istream& in);
CharacterTable load_character_csv(const std::string& path);

/// L(sigma, chi) = q^{-sigma} sum_{r=1}^{q} chi(r) zeta(sigma, r/q).
EvalResult dirichlet_L(double sigma, const CharacterTable& chi, const QuadConfig& cfg = {});

/// Li_s(e^{2 pi i r/q}) = q^{-s} sum_{n=1}^{q} e^{2 pi i r n/q} zeta(s, n/q).
EvalResult lerch_from_hurwitz(double sigma, int r, int q, const QuadConfig& cfg = {});

/// zeta(s, r/q) = q^{s-1} sum_{k=1}^{q} e^{-2 pi i k r/q} Li_s(e^{2 pi i k/q}), sigma > 1.
EvalResult hurwitz_from_lerch(double sigma, int r, int q);

/// Li_s(z) = z Phi(s, 1, z) from the Dirichlet series (sigma > 1 on |z| = 1).
EvalResult polylog_series(double sigma, Complex z);

/// G_r(chi) = sum_{n=1}^{q} chi(n) e^{2 pi i r n/q}. The Gauss sum of
/// conj(chi) is gauss_sum(chi.conjugate(), r).
Complex gauss_sum(const CharacterTable& chi, int r = 1);

struct RelationResiduals {
  // [0] L from zeta(s,r/q)        [1] zeta(s,r/q) from L
  // [2] zeta(s,r/q) from Li       [3] Li from zeta(s,n/q)
  // [4] L from Li (primitive chi) [5] Li from L
  std::array<double, 6> max_residual{};
  double overall = 0.0;
};

/// Each family is evaluated independently (zeta by Euler-Maclaurin, Li from
/// its Dirichlet series, L from its Dirichlet series with Euler-Maclaurin
/// tails) and every relation's max absolute residual is recorded.
/// Requires sigma > 1 and q in {1, 3, 4}.
RelationResiduals verify_six_relations(double sigma, int q);

/// L(sigma, chi) by direct summation over complete periods plus an
/// Euler-Maclaurin tail for each residue class; sigma > 1.
EvalResult dirichlet_L_direct(double sigma, const CharacterTable& chi);

}  // namespace hlz
