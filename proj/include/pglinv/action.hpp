#pragma once

// The action of GL_2 / PGL_2 on polynomials:
//   A o f = (bx + d)^k f((ax + c) / (bx + d)),  k = deg f,  A = [[a, b], [c, d]],
// and [A] o f is A o f made monic. Invariance, the F_{A,r} criterion and
// subgroup invariance are built on top.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "pglinv/poly.hpp"
#include "pglinv/projective.hpp"

namespace pglinv {

/// sum_i g_i (ax + c)^i (bx + d)^{k - i} for a given k >= deg g.
inline FPoly homogenize(const FPoly& g, int k, const Mat2& A) {
  const Field& f = A.field();
  if (g.degree() > k) throw std::invalid_argument("homogenize: degree exceeds k");
  const FPoly l1(f, {A.c, A.a}), l2(f, {A.d, A.b});
  // powers of l2 from the top down keep the work at O(k^2)
  std::vector<FPoly> p1{FPoly::constant(f.one())};
  for (int i = 1; i <= k; ++i) p1.push_back(p1.back() * l1);
  FPoly out(f), p2 = FPoly::constant(f.one());
  for (int i = k; i >= 0; --i) {
    const Felt gi = g[static_cast<std::size_t>(i)];
    if (!gi.is_zero()) out += (p1[i] * p2).scale(gi);
    if (i > 0) p2 *= l2;
  }
  return out;
}

inline FPoly act(const Mat2& A, const FPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("act: zero polynomial");
  return homogenize(f, f.degree(), A);
}

/// A * f = A^T o f
inline FPoly star_act(const Mat2& A, const FPoly& f) { return act(transpose(A), f); }

namespace detail {

inline FPoly proj_act_unchecked(const Mat2& A, const FPoly& f) {
  const FPoly g = act(A, f);
  if (g.degree() != f.degree()) throw std::logic_error("proj_act: degree dropped on an irreducible input");
  return monic(g);
}

inline void check_action_domain(const FPoly& f) {
  if (f.degree() < 2 || !f.is_monic() || !is_irreducible(f))
    throw std::invalid_argument("action domain is monic irreducible polynomials of degree >= 2");
}

/// [A] o f = f for monic f without a root in F_q, skipping the irreducibility check.
inline bool fixes(const Mat2& A, const FPoly& f) {
  const FPoly g = act(A, f);
  return g.degree() == f.degree() && g == f.scale(g.lead());
}

}  // namespace detail

inline FPoly proj_act(const ProjMat& cls, const FPoly& f) {
  detail::check_action_domain(f);
  return detail::proj_act_unchecked(cls.rep, f);
}

inline bool is_invariant(const ProjMat& cls, const FPoly& f) {
  detail::check_action_domain(f);
  return detail::fixes(cls.rep, f);
}

/// F_{A,r} = b x^{q^r + 1} - a x^{q^r} + d x - c
inline FPoly F_poly(const Mat2& A, unsigned r) {
  const Field& f = A.field();
  const std::uint64_t qr = static_cast<std::uint64_t>(checked_pow(f.q(), r));
  std::vector<Felt> c(qr + 2, f.zero());
  c[qr + 1] += A.b;
  c[qr] -= A.a;
  c[1] += A.d;
  c[0] -= A.c;
  return FPoly(f, std::move(c));
}

/// F_{A,r} mod g given X = x^{q^r} mod g.
inline FPoly F_poly_mod(const Mat2& A, const FPoly& X, const FPoly& g) {
  const Field& f = A.field();
  const FPoly x = FPoly::x(f);
  return ((X * x).scale(A.b) - X.scale(A.a) + x.scale(A.d) - FPoly::constant(A.c)) % g;
}

/// Invariance decided through the divisibility criterion: for deg f = n > 2,
/// [A] fixes f iff D | n and f | F_{A, l m} for some l in [1, D-1] prime to D
/// (m = n / D). Degree 2 falls back to the direct test.
inline bool criterion_invariant(const Mat2& A, const FPoly& f) {
  detail::check_action_domain(f);
  const int n = f.degree();
  if (n == 2) return detail::fixes(A, f);
  const std::uint64_t D = proj_order(A);
  if (D == 1) return true;  // the identity fixes everything
  if (n % D != 0) return false;
  const std::uint64_t m = n / D;
  const Field& fld = A.field();
  FPoly X = FPoly::x(fld) % f;
  for (std::uint64_t l = 1; l < D; ++l) {
    for (std::uint64_t i = 0; i < m; ++i) X = pow_mod(X, fld.q(), f);
    if (std::gcd(l, D) != 1) continue;
    if (F_poly_mod(A, X, f).is_zero()) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subgroups

/// Breadth-first closure of the generators under multiplication (identity included).
inline std::set<ProjMat> subgroup_closure(const Field& f, const std::vector<ProjMat>& gens) {
  std::set<ProjMat> seen{proj_identity(f)};
  std::vector<ProjMat> frontier{proj_identity(f)};
  while (!frontier.empty()) {
    std::vector<ProjMat> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        ProjMat y = proj_mul(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline bool is_cyclic(const std::set<ProjMat>& group) {
  for (const auto& x : group)
    if (proj_order(x) == group.size()) return true;
  return false;
}

inline bool group_invariant(const std::vector<ProjMat>& gens, const FPoly& f) {
  detail::check_action_domain(f);
  for (const auto& g : gens)
    if (!detail::fixes(g.rep, f)) return false;
  return true;
}

/// Monic irreducible quadratics fixed by every generator, by exhaustive scan.
inline std::vector<FPoly> quadratic_invariants(const Field& f, const std::vector<ProjMat>& gens) {
  std::vector<FPoly> out;
  for (const auto& g : enumerate_monic_irreducibles(f, 2)) {
    bool ok = true;
    for (const auto& A : gens) ok = ok && detail::fixes(A.rep, g);
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace pglinv
