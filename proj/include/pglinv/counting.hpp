#pragma once

// Number of [A]-invariants of degree n > 2:
//   n_A(Dm) = phi(D)/(Dm) * (c_A + sum_{d | m, gcd(d, D) = 1} mu(d) (q^{m/d} + eta_A(m/d)))
// together with two independent oracles (brute force and the F_{A^j,m}
// factor count).

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pglinv/action.hpp"
#include "pglinv/numtheory.hpp"
#include "pglinv/poly.hpp"
#include "pglinv/projective.hpp"

namespace pglinv {

struct CountParams {
  enum class Eta { MinusOne, Zero, Alternating };
  std::int64_t c_A = 0;
  Eta eta = Eta::Zero;

  std::int64_t eta_at(std::int64_t t) const {
    switch (eta) {
      case Eta::MinusOne: return -1;
      case Eta::Zero: return 0;
      case Eta::Alternating: return t % 2 == 1 ? 1 : -1;
    }
    return 0;
  }
};

/// Per-type constants. Type 3 shares type 1's constants: with c_A = -1 and
/// eta = 0 the bracket is off by one whenever m has an odd prime factor (the
/// count is then not even an integer, e.g. q = 3, n = 6); both versions agree
/// when m is a power of two.
inline CountParams count_params(const TypeInfo& t) {
  using E = CountParams::Eta;
  switch (t.index()) {
    case 1: return {0, E::MinusOne};
    case 2: return {0, E::Zero};
    case 3: return {0, E::MinusOne};
    case 4: return {0, E::Alternating};
  }
  throw std::invalid_argument("count_params: identity class");
}

/// phi(D)/(Dm) (c_A + sum_{d | m, gcd(d, D) = 1} mu(d)(q^{m/d} + eta(m/d))) as a
/// numerator over Dm; the caller decides what to do with a remainder.
inline std::pair<std::int64_t, std::int64_t> count_formula_fraction(std::int64_t q, std::int64_t D, std::int64_t m,
                                                                    const CountParams& cp) {
  std::int64_t sum = cp.c_A;
  for (auto du : divisors(static_cast<std::uint64_t>(m))) {
    const auto d = static_cast<std::int64_t>(du);
    if (std::gcd(d, D) != 1) continue;
    const int mu = moebius_mu(d);
    if (mu == 0) continue;
    sum += mu * (checked_pow(q, static_cast<std::uint64_t>(m / d)) + cp.eta_at(m / d));
  }
  return {euler_phi(D) * sum, D * m};
}

inline std::int64_t count_invariants_formula(const Mat2& A, std::int64_t n) {
  if (n <= 2) throw std::invalid_argument("formula count holds for n > 2 only; use brute force for n <= 2");
  const TypeInfo t = classify(A);
  const CountParams cp = count_params(t);
  const auto D = static_cast<std::int64_t>(proj_order(A));
  if (n % D != 0) return 0;
  const auto [num, den] = count_formula_fraction(A.field().q(), D, n / D, cp);
  if (num % den != 0) throw std::logic_error("formula count is not an integer");
  return num / den;
}

/// Cached list of monic irreducibles of degree n (shared by the oracles).
inline const std::vector<FPoly>& irreducibles_cached(const Field& f, int n) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, int>, std::vector<FPoly>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&f, n});
    if (it != cache.end()) return it->second;
  }
  auto list = enumerate_monic_irreducibles(f, n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(&f, n), std::move(list)).first->second;
}

/// Invariants of degree n by scanning every monic polynomial (invariance
/// first, irreducibility only for the survivors).
inline std::vector<FPoly> invariants_bruteforce(const std::vector<ProjMat>& gens, const Field& f, int n) {
  std::vector<FPoly> out;
  const std::uint64_t total = count_monic(f, n);
  for (std::uint64_t t = 0; t < total; ++t) {
    const FPoly g = monic_from_index(f, n, t);
    if (g[0].is_zero()) continue;
    bool ok = true;
    for (const auto& A : gens)
      if (!(ok = detail::fixes(A.rep, g))) break;
    if (ok && is_irreducible(g)) out.push_back(g);
  }
  return out;
}

inline std::vector<FPoly> invariants_bruteforce(const ProjMat& cls, int n) {
  return invariants_bruteforce(std::vector<ProjMat>{cls}, cls.field(), n);
}

inline std::int64_t count_invariants_bruteforce(const ProjMat& cls, int n) {
  if (n < 2) throw std::invalid_argument("brute-force count needs n >= 2");
  return static_cast<std::int64_t>(invariants_bruteforce(cls, n).size());
}

/// Distinct monic irreducible divisors of F of degree k.
inline std::int64_t count_factors_of_degree(const FPoly& F, int k) {
  if (F.is_zero() || k < 1) throw std::invalid_argument("count_factors_of_degree: need F != 0 and k >= 1");
  if (F.degree() < k) return 0;
  std::int64_t c = 0;
  for (const auto& g : irreducibles_cached(F.field(), k))
    if ((F % g).is_zero()) ++c;
  return c;
}

/// Sum over j in [1, D-1] prime to D of the degree-Dm irreducible factors of F_{A^j, m}.
inline std::int64_t count_via_criterion(const Mat2& A, int m) {
  const std::uint64_t D = proj_order(A);
  if (D == 1) throw std::invalid_argument("count_via_criterion: identity class");
  if (m < 1 || D * m <= 2) throw std::invalid_argument("count_via_criterion: need D*m > 2");
  std::int64_t total = 0;
  for (std::uint64_t j = 1; j < D; ++j) {
    if (std::gcd(j, D) != 1) continue;
    total += count_factors_of_degree(F_poly(mat_pow(A, j), m), static_cast<int>(D * m));
  }
  return total;
}

/// For A = D(c)^j with gcd(j, D) = 1: the unique irreducible quadratic factor
/// of F_{A,m}, present iff m is even. Throws if that structure is violated
/// (degree q^m + 1, no linear factors, at most one quadratic factor).
inline std::optional<FPoly> quadratic_factor_of_F(Felt c, std::uint64_t j, unsigned m) {
  const Field& f = c.field();
  const Mat2 A = mat_pow(mat_D(c), j);
  const std::uint64_t D = proj_order(mat_D(c));
  if (std::gcd(j, D) != 1) throw std::invalid_argument("quadratic_factor_of_F: j must be prime to the order");
  const FPoly F = F_poly(A, m);
  if (static_cast<std::int64_t>(F.degree()) != checked_pow(f.q(), m) + 1)
    throw std::logic_error("F_{A,m} does not have degree q^m + 1");
  if (count_factors_of_degree(F, 1) != 0) throw std::logic_error("F_{A,m} has a linear factor");
  std::vector<FPoly> quads;
  for (const auto& g : irreducibles_cached(f, 2))
    if ((F % g).is_zero()) quads.push_back(g);
  if (quads.size() > 1) throw std::logic_error("F_{A,m} has several quadratic factors");
  if (quads.empty() == (m % 2 == 0)) throw std::logic_error("quadratic factor of F_{A,m} present for the wrong parity of m");
  if (quads.empty()) return std::nullopt;
  return quads[0];
}

struct Rational {
  std::int64_t num = 0, den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) n = -n, d = -d;
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return {n / (g ? g : 1), d / (g ? g : 1)};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string decimal(int digits = 6) const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << value();
    return os.str();
  }
  friend bool operator==(const Rational& x, const Rational& y) { return x.num == y.num && x.den == y.den; }
};

/// n_A(Dm) Dm / (q^m phi(D)) from the formula count.
inline Rational asymptotic_ratio(const Mat2& A, unsigned m) {
  const auto D = static_cast<std::int64_t>(proj_order(A));
  const std::int64_t n = D * static_cast<std::int64_t>(m);
  const std::int64_t cnt = count_invariants_formula(A, n);
  return Rational::make(cnt * n, checked_pow(A.field().q(), m) * euler_phi(D));
}

/// Representatives of every type present in PGL_2(F_q): A(a) for each D | q-1
/// with D > 1, E, C(b) for odd q, and D(c) for each D | q+1 with D > 2.
inline std::vector<Mat2> type_representatives(const Field& f) {
  std::vector<Mat2> out;
  const std::uint64_t q = f.q();
  for (auto D : divisors(q - 1 == 0 ? 1 : q - 1))
    if (D > 1) out.push_back(mat_A(element_of_mult_order(f, D)));
  out.push_back(mat_E(f));
  if (f.p() != 2) out.push_back(mat_C(smallest_nonsquare(f)));
  for (auto D : divisors(q + 1))
    if (D > 2) out.push_back(element_of_order(f, D).rep);
  return out;
}

}  // namespace pglinv
