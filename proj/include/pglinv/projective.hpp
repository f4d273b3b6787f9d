#pragma once

// GL_2(F_q) and PGL_2(F_q): arithmetic, element orders, the four-type
// classification with reduced forms and conjugators, the sigma-product and
// closed-form powers of the type-4 reduced matrices.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pglinv/field.hpp"
#include "pglinv/linalg.hpp"
#include "pglinv/numtheory.hpp"
#include "pglinv/poly.hpp"

namespace pglinv {

/// Row-major [[a, b], [c, d]].
struct Mat2 {
  Felt a, b, c, d;

  const Field& field() const { return a.field(); }
  Felt det() const { return a * d - b * c; }
  Felt trace() const { return a + d; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mat2 scale(Felt l) const { return {a * l, b * l, c * l, d * l}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  /// Lexicographic on the encodings of (a, b, c, d).
  friend bool operator<(const Mat2& x, const Mat2& y) {
    const Felt xs[] = {x.a, x.b, x.c, x.d}, ys[] = {y.a, y.b, y.c, y.d};
    for (int i = 0; i < 4; ++i)
      if (xs[i].encode() != ys[i].encode()) return xs[i].encode() < ys[i].encode();
    return false;
  }
};

inline Mat2 identity_matrix(const Field& f) { return {f.one(), f.zero(), f.zero(), f.one()}; }

/// Builds [[a, b], [c, d]] from element encodings; rejects singular matrices.
inline Mat2 make_matrix(const Field& f, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  Mat2 m{f.element(a), f.element(b), f.element(c), f.element(d)};
  if (m.det().is_zero()) throw std::invalid_argument("matrix is singular");
  return m;
}

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) { return x * y; }
inline Felt det(const Mat2& m) { return m.det(); }
inline Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }
inline Mat2 mat_inv(const Mat2& m) {
  const Felt di = m.det().inv();
  return {m.d * di, -m.b * di, -m.c * di, m.a * di};
}
inline Mat2 mat_pow(Mat2 m, std::uint64_t e) {
  Mat2 r = identity_matrix(m.field());
  while (e) {
    if (e & 1) r = r * m;
    m = m * m;
    e >>= 1;
  }
  return r;
}

/// x^2 - (a + d) x + det
inline FPoly char_poly(const Mat2& m) { return FPoly(m.field(), {m.det(), -m.trace(), m.field().one()}); }

inline bool is_scalar(const Mat2& m) { return m.b.is_zero() && m.c.is_zero() && m.a == m.d; }

inline std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << m.a.encode() << ',' << m.b.encode() << ',' << m.c.encode() << ',' << m.d.encode();
  return os.str();
}

/// Parses "a,b,c,d" (element encodings).
inline Mat2 parse_matrix(const Field& f, const std::string& text) {
  std::vector<std::uint64_t> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const auto x = std::stoull(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad matrix entry: " + tok);
    v.push_back(x);
  }
  if (v.size() != 4) throw std::invalid_argument("matrix needs four comma-separated entries");
  return make_matrix(f, v[0], v[1], v[2], v[3]);
}

// ---------------------------------------------------------------------------
// PGL_2

/// Class of a matrix modulo scalars, scaled so the first nonzero entry in
/// (a, b, c, d) order is 1.
struct ProjMat {
  Mat2 rep;

  const Field& field() const { return rep.field(); }
  friend bool operator==(const ProjMat& x, const ProjMat& y) { return x.rep == y.rep; }
  friend bool operator<(const ProjMat& x, const ProjMat& y) { return x.rep < y.rep; }
};

inline ProjMat proj_canonical(const Mat2& m) {
  const Felt xs[] = {m.a, m.b, m.c, m.d};
  for (const auto& x : xs)
    if (!x.is_zero()) return {m.scale(x.inv())};
  throw std::invalid_argument("zero matrix has no projective class");
}
inline ProjMat proj_mul(const ProjMat& x, const ProjMat& y) { return proj_canonical(x.rep * y.rep); }
inline ProjMat proj_inv(const ProjMat& x) { return proj_canonical(mat_inv(x.rep)); }
inline bool proj_eq(const Mat2& x, const Mat2& y) { return proj_canonical(x) == proj_canonical(y); }
inline ProjMat proj_identity(const Field& f) { return {identity_matrix(f)}; }

/// Least D >= 1 with A^D scalar. Checks the result against the admissible
/// orders {1} u div(q-1) u {p} u div(q+1).
inline std::uint64_t proj_order(const ProjMat& m) {
  const auto& f = m.field();
  const std::uint64_t q = f.q();
  Mat2 x = m.rep;
  std::uint64_t D = 1;
  while (!is_scalar(x)) {
    x = x * m.rep;
    if (++D > q + 1) throw std::logic_error("proj_order: no scalar power up to q+1");
  }
  const bool ok = D == 1 || (q - 1) % D == 0 || D == f.p() || (q + 1) % D == 0;
  if (!ok) throw std::logic_error("proj_order: order " + std::to_string(D) + " outside the admissible set");
  return D;
}
inline std::uint64_t proj_order(const Mat2& m) { return proj_order(proj_canonical(m)); }

/// Every class of PGL_2(F_q), sorted.
inline std::vector<ProjMat> all_classes(const Field& f) {
  std::vector<ProjMat> out;
  const std::uint32_t q = f.q();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          Mat2 m{f.element(a), f.element(b), f.element(c), f.element(d)};
          if (m.det().is_zero()) continue;
          if (proj_canonical(m).rep == m) out.push_back({m});
        }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

// Reduced matrices.
inline Mat2 mat_A(Felt a) { return {a, a.field().zero(), a.field().zero(), a.field().one()}; }
inline Mat2 mat_E(const Field& f) { return {f.one(), f.zero(), f.one(), f.one()}; }
inline Mat2 mat_C(Felt b) { return {b.field().zero(), b.field().one(), b, b.field().zero()}; }
inline Mat2 mat_D(Felt c) { return {c.field().zero(), c.field().one(), c, c.field().one()}; }

struct Identity {};
/// Conjugate to A(a) = diag(a, 1); a is an eigenvalue ratio, a not in {0, 1}.
struct Type1 {
  Felt a;
};
/// Conjugate to the unipotent E = [[1, 0], [1, 1]].
struct Type2 {};
/// Conjugate to C(b) = [[0, 1], [b, 0]] with b a non-square.
struct Type3 {
  Felt b;
};
/// Conjugate to D(c) = [[0, 1], [c, 1]] with x^2 - x - c irreducible.
struct Type4 {
  Felt c;
};

using TypeInfo = std::variant<Identity, Type1, Type2, Type3, Type4>;

/// 0 for the identity, otherwise the type number 1..4.
inline int type_number(const TypeInfo& t) { return static_cast<int>(t.index()); }

inline std::optional<Felt> type_parameter(const TypeInfo& t) {
  if (auto* x = std::get_if<Type1>(&t)) return x->a;
  if (auto* x = std::get_if<Type3>(&t)) return x->b;
  if (auto* x = std::get_if<Type4>(&t)) return x->c;
  return std::nullopt;
}

inline std::string type_name(const TypeInfo& t) {
  static const char* names[] = {"identity", "type1", "type2", "type3", "type4"};
  return names[t.index()];
}

/// The reduced matrix A(a), E, C(b) or D(c) of a non-identity type.
inline Mat2 reduced_matrix(const TypeInfo& t, const Field& f) {
  return std::visit(
      [&](const auto& x) -> Mat2 {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Identity>) return identity_matrix(f);
        else if constexpr (std::is_same_v<T, Type1>) return mat_A(x.a);
        else if constexpr (std::is_same_v<T, Type2>) return mat_E(f);
        else if constexpr (std::is_same_v<T, Type3>) return mat_C(x.b);
        else return mat_D(x.c);
      },
      t);
}

namespace detail {

inline std::vector<Felt> roots_in_field(const FPoly& g) {
  std::vector<Felt> out;
  const auto& f = g.field();
  for (std::uint32_t c = 0; c < f.q(); ++c)
    if (eval(g, f.element(c)).is_zero()) out.push_back(f.element(c));
  return out;
}

/// Root of a monic quadratic x^2 + c1 x + c0 in F_{q^2} with minimal encoding.
inline ExtElt ext_root(Felt c1, Felt c0) {
  const ExtField& e = make_ext(c1.field());
  const ExtElt e1 = e.embed(c1), e0 = e.embed(c0);
  for (std::uint64_t code = 0; code < e.q(); ++code) {
    const ExtElt x = e.element(code);
    if ((x * x + e1 * x + e0).is_zero()) return x;
  }
  throw std::logic_error("quadratic has no root in F_{q^2}");
}

/// Kernel vector of (m - mu I) normalized so its first nonzero coordinate is 1.
inline std::pair<Felt, Felt> eigenvector(const Mat2& m, Felt mu) {
  const Felt n00 = m.a - mu, n01 = m.b, n10 = m.c, n11 = m.d - mu;
  Felt x, y;
  if (!n00.is_zero() || !n01.is_zero()) {
    x = -n01;
    y = n00;
  } else {
    x = -n11;
    y = n10;
  }
  const Felt s = x.is_zero() ? y : x;
  if (s.is_zero()) throw std::logic_error("eigenvector: matrix is scalar");
  return {x / s, y / s};
}

inline bool lex_less(const std::vector<Felt>& x, const std::vector<Felt>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].encode() != y[i].encode()) return x[i].encode() < y[i].encode();
  return false;
}

/// All vectors particular + span(kernel).
inline std::vector<std::vector<Felt>> enumerate_affine(const Field& f, const AffineSolution& s) {
  std::vector<std::vector<Felt>> out{s.particular};
  for (const auto& k : s.kernel) {
    std::vector<std::vector<Felt>> next;
    for (const auto& base : out)
      for (std::uint32_t t = 0; t < f.q(); ++t) {
        auto v = base;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += f.element(t) * k[i];
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

/// Invertible P with A P = P R of minimal entry encoding (row-major scan).
inline std::optional<Mat2> min_conjugator(const Mat2& A, const Mat2& R) {
  const Field& f = A.field();
  // unknowns (p0, p1, p2, p3) = P row-major; equation (i, j): sum_k A_ik P_kj - P_ik R_kj = 0
  const Felt a[2][2] = {{A.a, A.b}, {A.c, A.d}};
  const Felt r[2][2] = {{R.a, R.b}, {R.c, R.d}};
  std::vector<std::vector<Felt>> rows;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::vector<Felt> row(4, f.zero());
      for (int k = 0; k < 2; ++k) {
        row[2 * k + j] += a[i][k];
        row[2 * i + k] -= r[k][j];
      }
      rows.push_back(std::move(row));
    }
  auto sol = solve_linear(f, rows, std::vector<Felt>(4, f.zero()), 4);
  std::optional<Mat2> best;
  for (const auto& v : enumerate_affine(f, *sol)) {
    Mat2 P{v[0], v[1], v[2], v[3]};
    if (P.det().is_zero()) continue;
    if (!best || P < *best) best = P;
  }
  return best;
}

}  // namespace detail

/// Type of [A] read off the characteristic polynomial of its canonical representative.
inline TypeInfo classify(const Mat2& A) {
  const Mat2 rep = proj_canonical(A).rep;
  const Field& f = rep.field();
  if (is_scalar(rep)) return Identity{};
  const auto roots = detail::roots_in_field(char_poly(rep));
  if (roots.size() == 2) {
    const Felt r1 = roots[0] / roots[1], r2 = roots[1] / roots[0];
    return Type1{r1.encode() <= r2.encode() ? r1 : r2};
  }
  if (roots.size() == 1) return Type2{};
  const Felt t = rep.trace();
  if (t.is_zero()) return Type3{-rep.det()};
  return Type4{-rep.det() / (t * t)};
  (void)f;
}

struct ReducedForm {
  TypeInfo info;
  Mat2 reduced;
  /// P with [A] = [P][reduced][P]^-1.
  Mat2 conjugator;
  /// Eigenvalue of the reduced matrix: a for A(a), 1 for E, a root of
  /// x^2 - b for C(b), a root of x^2 - x - c for D(c).
  ExtElt eigenvalue;
  std::uint64_t order = 1;
};

inline ReducedForm reduce(const Mat2& A) {
  const TypeInfo info = classify(A);
  if (std::holds_alternative<Identity>(info)) throw std::invalid_argument("reduce: identity class has no reduced form");
  const Mat2 rep = proj_canonical(A).rep;
  const Field& f = rep.field();
  const ExtField& ext = make_ext(f);

  ReducedForm out{info, reduced_matrix(info, f), identity_matrix(f), ext.one(), proj_order(proj_canonical(rep))};
  const Mat2& R = out.reduced;

  switch (info.index()) {
    case 1: {
      const Felt a = std::get<Type1>(info).a;
      out.eigenvalue = ext.embed(a);
      if (proj_eq(rep, R)) break;
      const auto roots = detail::roots_in_field(char_poly(rep));
      Felt alpha = roots[0], beta = roots[1];
      if (!(alpha / beta == a)) std::swap(alpha, beta);
      const auto u = detail::eigenvector(rep, alpha), v = detail::eigenvector(rep, beta);
      out.conjugator = {u.first, v.first, u.second, v.second};
      break;
    }
    case 2: {
      out.eigenvalue = ext.one();
      if (proj_eq(rep, R)) break;
      const Felt lambda = detail::roots_in_field(char_poly(rep)).at(0);
      const auto v = detail::eigenvector(rep, lambda);
      // (rep - lambda) u = lambda v
      std::vector<std::vector<Felt>> rows{{rep.a - lambda, rep.b}, {rep.c, rep.d - lambda}};
      auto sol = solve_linear(f, rows, {lambda * v.first, lambda * v.second}, 2);
      if (!sol) throw std::logic_error("reduce: no generalized eigenvector");
      std::optional<std::vector<Felt>> best;
      for (auto& u : detail::enumerate_affine(f, *sol))
        if (!best || detail::lex_less(u, *best)) best = u;
      out.conjugator = {(*best)[0], v.first, (*best)[1], v.second};
      break;
    }
    case 3: {
      const Felt b = std::get<Type3>(info).b;
      out.eigenvalue = detail::ext_root(f.zero(), -b);
      if (proj_eq(rep, R)) break;
      out.conjugator = detail::min_conjugator(rep, R).value();
      break;
    }
    case 4: {
      const Felt c = std::get<Type4>(info).c;
      out.eigenvalue = detail::ext_root(-f.one(), -c);
      if (proj_eq(rep, R)) break;
      out.conjugator = detail::min_conjugator(rep.scale(rep.trace().inv()), R).value();
      break;
    }
  }
  if (!proj_eq(rep * out.conjugator, out.conjugator * R))
    throw std::logic_error("reduce: conjugation identity failed for " + to_string(A));
  return out;
}

// ---------------------------------------------------------------------------

/// The sigma-product of A and A0: A0 o F_{A,r} divides F_{sigma(A,A0),r}.
inline Mat2 sigma_product(const Mat2& A, const Mat2& A0) {
  const Felt a = A.a, b = A.b, c = A.c, d = A.d;
  const Felt a0 = A0.a, b0 = A0.b, c0 = A0.c, d0 = A0.d;
  return {-(b * a0 * c0 - a * a0 * d0 + d * c0 * b0 - c * b0 * d0),
          b * a0 * a0 - a * a0 * b0 + d * a0 * b0 - c * b0 * b0,
          -(b * c0 * c0 - a * c0 * d0 + d * d0 * c0 - c * d0 * d0),
          b * a0 * c0 - a * c0 * b0 + d * d0 * a0 - c * b0 * d0};
}

inline bool quadratic_irreducible(const FPoly& g) { return detail::roots_in_field(g).empty(); }

/// D(c)^j through the eigenvalue alpha of D(c) in F_{q^2}: with
/// delta = (alpha - alpha^q)^-1,
///   D(c)^j = delta [[a^{qj+1} - a^{q+j},  a^j - a^{qj}],
///                   [a^{q(j+1)+1} - a^{q+j+1},  a^{j+1} - a^{q(j+1)}]].
inline Mat2 power_closed_form(Felt c, std::uint64_t j) {
  const Field& f = c.field();
  if (!quadratic_irreducible(FPoly(f, {-c, -f.one(), f.one()})))
    throw std::invalid_argument("power_closed_form: x^2 - x - c is reducible");
  const ExtElt alpha = detail::ext_root(-f.one(), -c);
  const ExtElt aq = alpha.frobenius();
  const ExtElt delta = (alpha - aq).inv();
  const ExtElt aj = alpha.pow(j), aj1 = aj * alpha;
  const ExtElt aqj = aj.frobenius(), aqj1 = aj1.frobenius();
  const ExtElt e00 = delta * (aqj * alpha - aq * aj);
  const ExtElt e01 = delta * (aj - aqj);
  const ExtElt e10 = delta * (aqj1 * alpha - aq * aj1);
  const ExtElt e11 = delta * (aj1 - aqj1);
  auto down = [](const ExtElt& x) {
    auto y = x.try_descend();
    if (!y) throw std::logic_error("power_closed_form: entry not in F_q");
    return *y;
  };
  return {down(e00), down(e01), down(e10), down(e11)};
}

/// A reduced-form class of order D: [A(a)] when D | q-1, [E] when D = p,
/// [D(c)] when D > 2 divides q+1.
inline ProjMat element_of_order(const Field& f, std::uint64_t D) {
  const std::uint64_t q = f.q();
  if (D <= 1) throw std::invalid_argument("element_of_order: D must be > 1");
  if ((q - 1) % D == 0) return proj_canonical(mat_A(element_of_mult_order(f, D)));
  if (D == f.p()) return proj_canonical(mat_E(f));
  if (D > 2 && (q + 1) % D == 0) {
    const ExtField& e = make_ext(f);
    const ExtElt beta = e.primitive().pow((q + 1) / D);
    // minimal polynomial x^2 - s x + n of beta
    const Felt s = *(beta + beta.frobenius()).try_descend();
    const Felt n = beta.norm();
    const Felt c = -n / (s * s);
    return proj_canonical(mat_D(c));
  }
  throw std::invalid_argument("element_of_order: no element of order " + std::to_string(D) + " in PGL_2(F_" +
                              std::to_string(q) + ")");
}

}  // namespace pglinv
