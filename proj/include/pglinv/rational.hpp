#pragma once

// Rational maps Q_A = g_A / h_A of degree D = ord[A] that are fixed by the
// Moebius substitution of [A]. Every [A]-invariant of degree Dm > 2 is, up to
// a scalar, h_A^m F(g_A / h_A) for a monic irreducible F of degree m.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "pglinv/action.hpp"
#include "pglinv/linalg.hpp"
#include "pglinv/poly.hpp"
#include "pglinv/projective.hpp"

namespace pglinv {

struct RationalMap {
  FPoly num, den;
  int degree = 0;
};

inline bool operator==(const RationalMap& x, const RationalMap& y) {
  return x.num == y.num && x.den == y.den && x.degree == y.degree;
}

/// Lowest terms with a monic denominator.
inline RationalMap normalize(const RationalMap& r) {
  if (r.den.is_zero()) throw std::domain_error("rational map with zero denominator");
  const FPoly g = r.num.is_zero() ? monic(r.den) : gcd(r.num, r.den);
  FPoly n = divrem(r.num, g).first, d = divrem(r.den, g).first;
  const Felt li = d.lead().inv();
  n = n.scale(li);
  d = d.scale(li);
  return {n, d, std::max(n.degree(), d.degree())};
}

inline std::string to_string(const RationalMap& r) { return "(" + to_string(r.num) + ")/(" + to_string(r.den) + ")"; }

struct QConstruction {
  RationalMap map;
  ReducedForm source;
};

/// Q for the reduced matrix itself: x^D, x^p - x, (x^2 + b)/x or g_c/h_c.
inline RationalMap reduced_q_map(const ReducedForm& rf) {
  const Field& f = rf.reduced.field();
  const auto D = static_cast<int>(rf.order);
  const FPoly one = FPoly::constant(f.one()), x = FPoly::x(f);
  switch (rf.info.index()) {
    case 1:
      return {FPoly::monomial(f.one(), D), one, D};
    case 2:
      return {FPoly::monomial(f.one(), f.p()) - x, one, static_cast<int>(f.p())};
    case 3:
      return {FPoly(f, {std::get<Type3>(rf.info).b, f.zero(), f.one()}), x, 2};
    case 4: {
      const ExtField& e = make_ext(f);
      const ExtElt th = rf.eigenvalue, thq = th.frobenius();
      const ExtElt scale = (thq - th).inv();
      const EPoly pq = pow(EPoly::linear(thq), D), p1 = pow(EPoly::linear(th), D);
      const EPoly g = (pq.scale(thq) - p1.scale(th)).scale(scale);
      const EPoly h = (pq - p1).scale(scale);
      if (!th.pow(D).try_descend()) throw std::logic_error("q_map: theta^D not in F_q");
      auto down = [&](const EPoly& p) {
        std::vector<Felt> c;
        for (const auto& x : p.coeffs()) {
          auto y = x.try_descend();
          if (!y) throw std::logic_error("q_map: g_c / h_c not defined over F_q");
          c.push_back(*y);
        }
        return FPoly(f, std::move(c));
      };
      (void)e;
      return {down(g), down(h), D};
    }
  }
  throw std::invalid_argument("q_map: identity class");
}

/// Q_A = (P o g_R) / (P o h_R), both homogenized to degree D, where
/// [A] = [P][R][P]^-1 and g_R / h_R is the map for the reduced matrix R.
inline QConstruction q_map(const Mat2& A) {
  if (std::holds_alternative<Identity>(classify(A))) throw std::invalid_argument("q_map: identity class");
  const ReducedForm rf = reduce(A);
  const RationalMap r = reduced_q_map(rf);
  const int D = r.degree;
  RationalMap out{homogenize(r.num, D, rf.conjugator), homogenize(r.den, D, rf.conjugator), D};
  if (gcd(out.num, out.den).degree() != 0) throw std::logic_error("q_map: numerator and denominator not coprime");
  if (std::max(out.num.degree(), out.den.degree()) != D) throw std::logic_error("q_map: degree differs from order");
  return {out, rf};
}

/// Q((ax + c) / (bx + d)) in lowest terms, denominator monic.
inline RationalMap substitute_mobius(const RationalMap& Q, const Mat2& A) {
  const int k = std::max(Q.num.degree(), Q.den.degree());
  const FPoly n = Q.num.is_zero() ? Q.num : homogenize(Q.num, k, A);
  return normalize({n, homogenize(Q.den, k, A), k});
}

inline bool is_fixed_by(const RationalMap& Q, const Mat2& A) { return substitute_mobius(Q, A) == normalize(Q); }

/// den^m F(num / den) = sum_i F_i num^i den^{m - i}; not made monic.
inline FPoly transform(const FPoly& F, const RationalMap& Q) {
  if (F.is_zero()) throw std::invalid_argument("transform: zero polynomial");
  const int m = F.degree();
  const Field& f = F.field();
  std::vector<FPoly> np{FPoly::constant(f.one())};
  for (int i = 1; i <= m; ++i) np.push_back(np.back() * Q.num);
  FPoly out(f), dp = FPoly::constant(f.one());
  for (int i = m; i >= 0; --i) {
    if (!F[i].is_zero()) out += (np[i] * dp).scale(F[i]);
    if (i > 0) dp *= Q.den;
  }
  return out;
}

/// The [A]-invariants of degree D m, obtained as monic transforms of every
/// monic F of degree m, in encoding order.
inline std::vector<FPoly> generate_invariants(const Mat2& A, int m) {
  const QConstruction qc = q_map(A);
  const int D = qc.map.degree;
  if (m < 1 || D * m <= 2) throw std::invalid_argument("generate_invariants: need D*m > 2");
  const Field& f = A.field();
  std::set<FPoly> out;
  const std::uint64_t total = count_monic(f, m);
  for (std::uint64_t t = 0; t < total; ++t) {
    const FPoly g = transform(monic_from_index(f, m, t), qc.map);
    if (g.degree() != D * m) continue;
    const FPoly h = monic(g);
    if (is_irreducible(h)) out.insert(h);
  }
  return {out.begin(), out.end()};
}

/// Monic F with monic(transform(F, Q)) = f, found by solving the linear
/// system in F's coefficients. Throws when f is not a transform.
inline FPoly decompose(const FPoly& f, const RationalMap& Q) {
  if (f.is_zero() || Q.degree < 1 || f.degree() % Q.degree != 0)
    throw std::invalid_argument("decompose: degree not divisible by the map degree");
  const Field& fld = f.field();
  const int m = f.degree() / Q.degree;
  // column i: num^i den^{m - i}
  std::vector<FPoly> cols;
  for (int i = 0; i <= m; ++i) cols.push_back(pow(Q.num, i) * pow(Q.den, m - i));
  std::size_t nrows = static_cast<std::size_t>(f.degree()) + 1;
  for (const auto& c : cols) nrows = std::max(nrows, static_cast<std::size_t>(c.degree() + 1));
  std::vector<std::vector<Felt>> rows(nrows, std::vector<Felt>(m + 1, fld.zero()));
  std::vector<Felt> rhs(nrows, fld.zero());
  for (std::size_t k = 0; k < nrows; ++k) {
    for (int i = 0; i <= m; ++i) rows[k][i] = cols[i][k];
    rhs[k] = f[k];
  }
  const auto sol = solve_linear(fld, rows, rhs, m + 1);
  if (!sol) throw std::invalid_argument("decompose: " + to_string(f) + " is not a transform under this map");
  const FPoly F(fld, sol->particular);
  if (F.is_zero() || !(monic(transform(F, Q)) == monic(f))) throw std::logic_error("decompose: round trip failed");
  return monic(F);
}

}  // namespace pglinv
