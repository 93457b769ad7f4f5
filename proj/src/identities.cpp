#include "hlz/identities.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace hlz {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr int kDirectPeriods = 200;

int totient(int q) {
  int count = 0;
  for (int n = 1; n <= q; ++n) count += std::gcd(n, q) == 1;
  return count;
}

void require_modulus(int r, int q) {
  if (q < 1) throw Error(ErrorKind::Domain, "modulus q must be >= 1");
  if (r < 1 || r > q) throw Error(ErrorKind::Domain, "residue r must satisfy 1 <= r <= q");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, int line_no) {
  const std::string t = trim(field);
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Io, "character CSV line " + std::to_string(line_no) + ": bad number '" + t + "'");
  }
}

}  // namespace

CharacterTable::CharacterTable(int modulus, std::vector<Complex> values, std::string name)
    : q_(modulus), values_(std::move(values)), name_(std::move(name)) {
  if (q_ < 1) throw Error(ErrorKind::Domain, "character modulus must be >= 1");
  if (static_cast<int>(values_.size()) != q_) {
    throw Error(ErrorKind::Domain, "character table needs exactly q values chi(1..q)");
  }
  for (int n = 1; n <= q_; ++n) {
    const Complex v = values_[n - 1];
    if (std::gcd(n, q_) > 1) {
      if (std::abs(v) > kUnitTol) {
        throw Error(ErrorKind::Domain, "chi(" + std::to_string(n) + ") must vanish, gcd(n,q) > 1");
      }
      values_[n - 1] = 0.0;
    } else if (std::abs(std::abs(v) - 1.0) > kUnitTol) {
      throw Error(ErrorKind::Domain, "chi(" + std::to_string(n) + ") must have modulus 1");
    }
  }
}

Complex CharacterTable::operator()(long n) const {
  long m = n % q_;
  if (m <= 0) m += q_;
  return values_[m - 1];
}

CharacterTable CharacterTable::conjugate() const {
  std::vector<Complex> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), [](Complex c) { return std::conj(c); });
  return CharacterTable(q_, std::move(v), name_.empty() ? name_ : "conj(" + name_ + ")");
}

bool CharacterTable::is_multiplicative() const {
  if (std::abs((*this)(1) - 1.0) > kUnitTol) return false;
  for (int m = 1; m <= q_; ++m) {
    for (int n = m; n <= q_; ++n) {
      if (std::abs((*this)(static_cast<long>(m) * n) - (*this)(m) * (*this)(n)) > kUnitTol) return false;
    }
  }
  return true;
}

bool CharacterTable::is_primitive() const {
  // Induced from modulus d | q, d < q, iff chi(n) = 1 for every unit n = 1 mod d.
  for (int d = 1; d < q_; ++d) {
    if (q_ % d != 0) continue;
    bool induced = true;
    for (int n = 1; n <= q_ && induced; ++n) {
      if (std::gcd(n, q_) == 1 && n % d == 1 % d && std::abs((*this)(n) - 1.0) > kUnitTol) induced = false;
    }
    if (induced) return false;
  }
  return true;
}

CharacterTable principal_mod1() { return CharacterTable(1, {1.0}, "principal mod 1"); }

CharacterTable principal_mod(int q) {
  if (q < 1) throw Error(ErrorKind::Domain, "modulus q must be >= 1");
  std::vector<Complex> v(static_cast<std::size_t>(q));
  for (int n = 1; n <= q; ++n) v[n - 1] = std::gcd(n, q) == 1 ? 1.0 : 0.0;
  return CharacterTable(q, std::move(v), "principal mod " + std::to_string(q));
}

CharacterTable chi3() { return CharacterTable(3, {1.0, -1.0, 0.0}, "chi3"); }
CharacterTable chi4() { return CharacterTable(4, {1.0, 0.0, -1.0, 0.0}, "chi4"); }

std::vector<CharacterTable> characters_mod(int q) {
  switch (q) {
    case 1: return {principal_mod1()};
    case 2: return {principal_mod(2)};
    case 3: return {principal_mod(3), chi3()};
    case 4: return {principal_mod(4), chi4()};
    default:
      throw Error(ErrorKind::Unsupported, "built-in character tables exist only for q in {1, 2, 3, 4}");
  }
}

CharacterTable parse_character_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  int q = 0;
  std::vector<Complex> values;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (q == 0) {
      if (t.rfind("q=", 0) != 0) {
        throw Error(ErrorKind::Io, "character CSV must start with a 'q=<modulus>' header");
      }
      const double qd = parse_double(t.substr(2), line_no);
      if (qd < 1.0 || qd != std::floor(qd) || qd > 1e6) {
        throw Error(ErrorKind::Io, "character CSV: modulus must be a positive integer");
      }
      q = static_cast<int>(qd);
      values.assign(static_cast<std::size_t>(q), 0.0);
      seen.assign(static_cast<std::size_t>(q), false);
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(t);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 3) {
      throw Error(ErrorKind::Io, "character CSV line " + std::to_string(line_no) + ": expected 'n, re, im'");
    }
    const double nd = parse_double(fields[0], line_no);
    if (nd != std::floor(nd) || nd < 1.0 || nd > q) {
      throw Error(ErrorKind::Io, "character CSV line " + std::to_string(line_no) + ": n must be in 1..q");
    }
    const auto n = static_cast<std::size_t>(nd);
    if (seen[n - 1]) {
      throw Error(ErrorKind::Io, "character CSV line " + std::to_string(line_no) + ": duplicate n");
    }
    seen[n - 1] = true;
    values[n - 1] = Complex(parse_double(fields[1], line_no), parse_double(fields[2], line_no));
  }
  if (q == 0) throw Error(ErrorKind::Io, "character CSV is empty");
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw Error(ErrorKind::Io, "character CSV must list every n = 1..q");
  }
  CharacterTable chi(q, std::move(values), "csv mod " + std::to_string(q));
  if (!chi.is_multiplicative()) throw Error(ErrorKind::Domain, "character table is not multiplicative");
  return chi;
}

CharacterTable load_character_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open character table '" + path + "'");
  return parse_character_csv(in);
}

EvalResult dirichlet_L(double sigma, const CharacterTable& chi, const QuadConfig& cfg) {
  const int q = chi.modulus();
  CompensatedSum<Complex> sum;
  double err = 0.0;
  Method method = Method::Series;
  for (int r = 1; r <= q; ++r) {
    const Complex c = chi(r);
    if (c == 0.0) continue;
    const EvalResult z = evaluate(sigma, static_cast<double>(r) / q, Complex(1.0, 0.0), cfg);
    sum.add(c * z.value);
    err += z.abs_err;
    method = z.method;
  }
  const double scale = std::pow(static_cast<double>(q), -sigma);
  return {scale * sum.value(), scale * err, method};
}

EvalResult lerch_from_hurwitz(double sigma, int r, int q, const QuadConfig& cfg) {
  require_modulus(r, q);
  CompensatedSum<Complex> sum;
  double err = 0.0;
  Method method = Method::Series;
  for (int n = 1; n <= q; ++n) {
    const EvalResult z = evaluate(sigma, static_cast<double>(n) / q, Complex(1.0, 0.0), cfg);
    sum.add(unit_phase(static_cast<double>(r) * n / q) * z.value);
    err += z.abs_err;
    method = z.method;
  }
  const double scale = std::pow(static_cast<double>(q), -sigma);
  return {scale * sum.value(), scale * err, method};
}

EvalResult polylog_series(double sigma, Complex z) {
  const EvalResult phi = phi_series(sigma, 1.0, z);
  return {z * phi.value, std::abs(z) * phi.abs_err, Method::Series};
}

EvalResult hurwitz_from_lerch(double sigma, int r, int q) {
  require_modulus(r, q);
  if (!(sigma > 1.0)) {
    throw Error(ErrorKind::Domain, "hurwitz_from_lerch needs sigma > 1 (the k = q term is zeta(sigma))");
  }
  CompensatedSum<Complex> sum;
  double err = 0.0;
  for (int k = 1; k <= q; ++k) {
    const Complex w = k == q ? Complex(1.0, 0.0) : unit_phase(static_cast<double>(k) / q);
    const EvalResult li = polylog_series(sigma, w);
    sum.add(unit_phase(-static_cast<double>(k) * r / q) * li.value);
    err += li.abs_err;
  }
  const double scale = std::pow(static_cast<double>(q), sigma - 1.0);
  return {scale * sum.value(), scale * err, Method::Series};
}

Complex gauss_sum(const CharacterTable& chi, int r) {
  const int q = chi.modulus();
  CompensatedSum<Complex> sum;
  for (int n = 1; n <= q; ++n) sum.add(chi(n) * unit_phase(static_cast<double>(r) * n / q));
  return sum.value();
}

EvalResult dirichlet_L_direct(double sigma, const CharacterTable& chi) {
  if (!(sigma > 1.0)) throw Error(ErrorKind::Domain, "dirichlet_L_direct needs sigma > 1");
  const int q = chi.modulus();
  CompensatedSum<Complex> sum;
  double err = 0.0;
  const long n_direct = static_cast<long>(kDirectPeriods) * q;
  for (long n = 1; n <= n_direct; ++n) {
    const Complex c = chi(n);
    if (c != 0.0) sum.add(c * std::pow(static_cast<double>(n), -sigma));
  }
  // sum_{k >= P} (kq + r)^{-sigma} = q^{-sigma} zeta(sigma, P + r/q)
  const double scale = std::pow(static_cast<double>(q), -sigma);
  for (int r = 1; r <= q; ++r) {
    const Complex c = chi(r);
    if (c == 0.0) continue;
    const EvalResult tail = hurwitz_em(sigma, kDirectPeriods + static_cast<double>(r) / q);
    sum.add(c * scale * tail.value);
    err += scale * tail.abs_err;
  }
  const Complex value = sum.value();
  return {value, err + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(value), Method::Series};
}

RelationResiduals verify_six_relations(double sigma, int q) {
  if (!(sigma > 1.0)) throw Error(ErrorKind::Domain, "verify_six_relations needs sigma > 1");
  const std::vector<CharacterTable> chars = characters_mod(q);
  const double qd = static_cast<double>(q);
  const double phi_q = totient(q);

  std::vector<Complex> zeta(q + 1), li(q + 1), ell;
  for (int r = 1; r <= q; ++r) {
    zeta[r] = hurwitz_em(sigma, r / qd).value;
    li[r] = polylog_series(sigma, r == q ? Complex(1.0, 0.0) : unit_phase(r / qd)).value;
  }
  for (const auto& chi : chars) ell.push_back(dirichlet_L_direct(sigma, chi).value);

  RelationResiduals out;
  auto record = [&](int idx, Complex lhs, Complex rhs) {
    out.max_residual[idx] = std::max(out.max_residual[idx], std::abs(lhs - rhs));
  };

  for (std::size_t c = 0; c < chars.size(); ++c) {
    const CharacterTable& chi = chars[c];
    CompensatedSum<Complex> s0;
    for (int r = 1; r <= q; ++r) s0.add(chi(r) * zeta[r]);
    record(0, ell[c], std::pow(qd, -sigma) * s0.value());

    if (chi.is_primitive()) {
      const CharacterTable bar = chi.conjugate();
      CompensatedSum<Complex> s4;
      for (int r = 1; r <= q; ++r) s4.add(bar(r) * li[r]);
      record(4, ell[c], s4.value() / gauss_sum(bar, 1));
    }
  }

  for (int r = 1; r <= q; ++r) {
    if (std::gcd(r, q) == 1) {
      CompensatedSum<Complex> s1;
      for (std::size_t c = 0; c < chars.size(); ++c) s1.add(std::conj(chars[c](r)) * ell[c]);
      record(1, zeta[r], std::pow(qd, sigma) / phi_q * s1.value());
    }

    CompensatedSum<Complex> s2;
    for (int k = 1; k <= q; ++k) s2.add(unit_phase(-static_cast<double>(k) * r / qd) * li[k]);
    record(2, zeta[r], std::pow(qd, sigma - 1.0) * s2.value());

    CompensatedSum<Complex> s3;
    for (int n = 1; n <= q; ++n) s3.add(unit_phase(static_cast<double>(r) * n / qd) * zeta[n]);
    record(3, li[r], std::pow(qd, -sigma) * s3.value());

    // The character sum only sees n coprime to q; the remaining residues
    // contribute their Hurwitz terms directly.
    CompensatedSum<Complex> s5;
    for (std::size_t c = 0; c < chars.size(); ++c) {
      s5.add(gauss_sum(chars[c].conjugate(), r) * ell[c] / phi_q);
    }
    for (int n = 1; n <= q; ++n) {
      if (std::gcd(n, q) > 1) s5.add(unit_phase(static_cast<double>(r) * n / qd) * std::pow(qd, -sigma) * zeta[n]);
    }
    record(5, li[r], s5.value());
  }

  out.overall = *std::max_element(out.max_residual.begin(), out.max_residual.end());
  return out;
}

}  // namespace hlz
