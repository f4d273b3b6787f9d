#pragma once

// Executable property suites. Each suite returns one result per property;
// randomized parts draw from a seeded mt19937_64 so runs are reproducible.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pglinv/action.hpp"
#include "pglinv/counting.hpp"
#include "pglinv/rational.hpp"

namespace pglinv {

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

inline bool all_pass(const std::vector<PropertyResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t below(std::uint64_t n) { return gen() % n; }
  Felt felt(const Field& f) { return f.element(below(f.q())); }
  Felt nonzero(const Field& f) { return f.element(1 + below(f.q() - 1)); }
  Mat2 matrix(const Field& f) {
    for (;;) {
      Mat2 m{felt(f), felt(f), felt(f), felt(f)};
      if (!m.det().is_zero()) return m;
    }
  }
  FPoly monic(const Field& f, int n) { return monic_from_index(f, n, below(count_monic(f, n))); }
  FPoly irreducible(const Field& f, int n) {
    for (;;) {
      FPoly g = monic(f, n);
      if (is_irreducible(g)) return g;
    }
  }
};

namespace detail {

/// Tallies checks and keeps the first counterexample.
struct Tally {
  std::string name;
  std::uint64_t checks = 0, failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  PropertyResult result() const {
    std::ostringstream os;
    os << checks << " checks";
    if (failures) os << ", " << failures << " failures; first: " << first;
    return {name, failures == 0, os.str()};
  }
};

inline std::string describe(const Mat2& A) { return "[" + to_string(A) + "]"; }

inline std::vector<Mat2> nonidentity_classes(const Field& f) {
  std::vector<Mat2> out;
  for (const auto& c : all_classes(f))
    if (!is_scalar(c.rep)) out.push_back(c.rep);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Identity, compatibility, degree and irreducibility preservation, and
/// multiplicativity of the action. Exhaustive for q = 2 (degrees 2..5),
/// randomized otherwise.
inline std::vector<PropertyResult> verify_action_laws(const Field& f, std::uint64_t seed, int samples = 1000) {
  Rng rng(seed);
  detail::Tally id{"identity acts trivially"}, compat{"[A]o([B]of) = [AB]of"},
      pres{"degree and irreducibility preserved"}, mult{"A o (fg) = (A o f)(A o g)"};
  auto run = [&](const Mat2& A, const Mat2& B, const FPoly& g) {
    const FPoly ag = proj_act(proj_canonical(A), g);
    pres.check(ag.degree() == g.degree() && is_irreducible(ag), [&] { return detail::describe(A) + " on " + to_string(g); });
    const FPoly lhs = proj_act(proj_canonical(A), proj_act(proj_canonical(B), g));
    const FPoly rhs = proj_act(proj_canonical(A * B), g);
    compat.check(lhs == rhs, [&] { return detail::describe(A) + "," + detail::describe(B) + " on " + to_string(g); });
  };
  if (f.q() == 2) {
    const auto classes = all_classes(f);
    for (int n = 2; n <= 5; ++n)
      for (const auto& g : irreducibles_cached(f, n)) {
        id.check(proj_act(proj_identity(f), g) == g, [&] { return to_string(g); });
        for (const auto& A : classes)
          for (const auto& B : classes) run(A.rep, B.rep, g);
      }
  } else {
    for (int i = 0; i < samples; ++i) {
      const int n = 2 + static_cast<int>(rng.below(4));
      const FPoly g = rng.irreducible(f, n);
      id.check(proj_act(proj_identity(f), g) == g, [&] { return to_string(g); });
      run(rng.matrix(f), rng.matrix(f), g);
    }
  }
  for (int i = 0; i < samples / 4; ++i) {
    const Mat2 A = rng.matrix(f);
    const FPoly g = rng.monic(f, 1 + static_cast<int>(rng.below(4)));
    const FPoly h = rng.monic(f, 1 + static_cast<int>(rng.below(4)));
    mult.check(act(A, g * h) == act(A, g) * act(A, h), [&] { return detail::describe(A); });
  }
  return {id.result(), compat.result(), pres.result(), mult.result()};
}

/// criterion_invariant agrees with the direct test, and invariants of degree
/// n > 2 only occur when D | n. Exhaustive for q <= 3, degrees 2..6.
inline std::vector<PropertyResult> verify_criterion(const Field& f, std::uint64_t seed, int samples = 300) {
  Rng rng(seed);
  detail::Tally eq{"criterion_invariant == is_invariant"}, deg{"invariant of degree n > 2 implies D | n"};
  auto run = [&](const Mat2& A, const FPoly& g) {
    const bool direct = is_invariant(proj_canonical(A), g);
    eq.check(criterion_invariant(A, g) == direct, [&] { return detail::describe(A) + " on " + to_string(g); });
    if (direct && g.degree() > 2)
      deg.check(g.degree() % proj_order(A) == 0, [&] { return detail::describe(A) + " on " + to_string(g); });
  };
  if (f.q() <= 3) {
    const auto classes = all_classes(f);
    for (int n = 2; n <= 6; ++n)
      for (const auto& g : irreducibles_cached(f, n))
        for (const auto& A : classes) run(A.rep, g);
  } else {
    for (int i = 0; i < samples; ++i) run(rng.matrix(f), rng.irreducible(f, 2 + static_cast<int>(rng.below(4))));
  }
  return {eq.result(), deg.result()};
}

/// classify/reduce consistency, conjugation invariance of the order, type
/// frequencies, and the invariant correspondence f -> [P]^-1 o f between
/// [PAP^-1] and [A].
inline std::vector<PropertyResult> verify_conjugation(const Field& f, std::uint64_t seed, int samples = 1000) {
  Rng rng(seed);
  const std::uint64_t q = f.q();
  detail::Tally red{"reduce agrees with classify and [A] = [P][R][P]^-1"}, ord{"conjugates have equal order"},
      freq{"type frequencies"}, corr{"invariants of [PAP^-1] correspond to invariants of [A]"};
  auto check_reduce = [&](const Mat2& A) {
    bool ok = false;
    try {
      const ReducedForm rf = reduce(A);
      ok = rf.info.index() == classify(A).index() && proj_eq(A * rf.conjugator, rf.conjugator * rf.reduced) &&
           rf.order == proj_order(A);
    } catch (const std::exception&) {
      ok = false;
    }
    red.check(ok, [&] { return detail::describe(A); });
  };
  if (q <= 5) {
    std::map<std::size_t, std::uint64_t> by_type;
    for (const auto& c : all_classes(f)) {
      ++by_type[classify(c.rep).index()];
      if (!is_scalar(c.rep)) check_reduce(c.rep);
    }
    const std::uint64_t t1 = by_type[1], t2 = by_type[2], t34 = by_type[3] + by_type[4];
    freq.check(t1 + t2 + t34 == q * q * q - q - 1, [&] { return std::string("types do not cover the group"); });
    freq.check(t1 == q * (q + 1) * (q - 2) / 2 && t2 == q * q - 1 && t34 == q * q * (q - 1) / 2, [&] {
      return "counts " + std::to_string(t1) + "/" + std::to_string(t2) + "/" + std::to_string(t34);
    });
  } else {
    for (int i = 0; i < samples; ++i) {
      const Mat2 A = rng.matrix(f);
      if (!is_scalar(A)) check_reduce(A);
    }
  }
  for (int i = 0; i < samples / 5; ++i) {
    const Mat2 A = rng.matrix(f), P = rng.matrix(f);
    ord.check(proj_order(P * A * mat_inv(P)) == proj_order(A), [&] { return detail::describe(A); });
  }
  const int maxdeg = q <= 3 ? 6 : 4;
  const int reps = q <= 3 ? 10 : 3;
  for (int i = 0; i < reps; ++i) {
    const Mat2 A = rng.matrix(f), P = rng.matrix(f);
    const ProjMat B = proj_canonical(P * A * mat_inv(P)), Pinv = proj_canonical(mat_inv(P));
    for (int n = 2; n <= maxdeg; ++n) {
      std::set<FPoly> mapped, direct;
      for (const auto& g : invariants_bruteforce(B, n)) mapped.insert(proj_act(Pinv, g));
      for (const auto& g : invariants_bruteforce(proj_canonical(A), n)) direct.insert(g);
      corr.check(mapped == direct, [&] { return detail::describe(A) + " P=" + detail::describe(P) + " n=" + std::to_string(n); });
    }
  }
  return {red.result(), ord.result(), freq.result(), corr.result()};
}

struct CountRow {
  Mat2 matrix;
  std::string type;
  std::uint64_t D = 0;
  int n = 0;
  std::int64_t formula = 0, brute = 0, criterion = 0;
  bool agree() const { return formula == brute && brute == criterion; }
};

/// Formula, brute force and criterion counts for every type representative
/// and every n = Dm with 2 < n <= max_n.
inline std::vector<CountRow> count_table(const Field& f, int max_n) {
  std::vector<CountRow> rows;
  for (const auto& A : type_representatives(f)) {
    const std::uint64_t D = proj_order(A);
    for (int n = 3; n <= max_n; ++n) {
      if (n % D != 0) continue;
      CountRow r{A, type_name(classify(A)), D, n};
      r.formula = count_invariants_formula(A, n);
      r.brute = count_invariants_bruteforce(proj_canonical(A), n);
      r.criterion = count_via_criterion(A, n / static_cast<int>(D));
      rows.push_back(r);
    }
  }
  return rows;
}

inline int default_max_n(const Field& f) { return f.q() <= 3 ? 8 : 6; }

/// Triple agreement, zeros off multiples of D, the self-reciprocal cross
/// check and (for type 4) the inversion consistency of the factor counts.
inline std::vector<PropertyResult> verify_counting(const Field& f, int max_n = 0) {
  if (max_n == 0) max_n = default_max_n(f);
  const std::uint64_t q = f.q();
  detail::Tally tri{"formula = brute force = criterion"}, zero{"no invariants of degree n > 2 with D not dividing n"},
      recip{"self-reciprocal counts match the formula"}, inv{"type-4 factor counts match the inverted sum"};
  for (const auto& r : count_table(f, max_n))
    tri.check(r.agree(), [&] {
      return detail::describe(r.matrix) + " n=" + std::to_string(r.n) + ": " + std::to_string(r.formula) + "/" +
             std::to_string(r.brute) + "/" + std::to_string(r.criterion);
    });
  for (const auto& A : type_representatives(f)) {
    const std::uint64_t D = proj_order(A);
    for (int n = 3; n <= max_n; ++n) {
      if (n % D == 0) continue;
      zero.check(count_invariants_bruteforce(proj_canonical(A), n) == 0 && count_invariants_formula(A, n) == 0,
                 [&] { return detail::describe(A) + " n=" + std::to_string(n); });
    }
  }
  const Mat2 J{f.zero(), f.one(), f.one(), f.zero()};
  for (int m = 2; m <= (q <= 5 ? 4 : 3); ++m)
    recip.check(count_invariants_bruteforce(proj_canonical(J), 2 * m) == count_invariants_formula(J, 2 * m),
                [&] { return "m=" + std::to_string(m); });
  for (const auto& A : type_representatives(f)) {
    if (classify(A).index() != 4) continue;
    const auto D = static_cast<std::int64_t>(proj_order(A));
    for (int m = 1; m <= 6; ++m) {
      if (D * m <= 2) continue;
      if (std::pow(static_cast<double>(q), static_cast<double>(D * m)) > (1 << 18)) break;  // factor scan too large
      auto chi = [D](std::int64_t n) -> std::int64_t { return principal_character(D, n); };
      auto L = [q](std::int64_t t) -> std::int64_t { return checked_pow(q, t) + (t % 2 == 1 ? 1 : -1); };
      const std::int64_t K = mobius_inversion(chi, L, m);
      for (std::int64_t j = 1; j < D; ++j) {
        if (std::gcd(j, D) != 1) continue;
        const std::int64_t c = count_factors_of_degree(F_poly(mat_pow(A, j), m), static_cast<int>(D * m));
        inv.check(c * D * m == K, [&] {
          return detail::describe(A) + " j=" + std::to_string(j) + " m=" + std::to_string(m) + ": " + std::to_string(c) +
                 " vs K=" + std::to_string(K);
        });
      }
    }
  }
  std::vector<PropertyResult> out{tri.result(), zero.result(), recip.result()};
  if (inv.checks) out.push_back(inv.result());
  return out;
}

/// Q_A is fixed by [A], coprime of degree D; reduced matrices give the
/// reduced maps; generation matches brute force; the type-4 scalar law.
inline std::vector<PropertyResult> verify_qmap(const Field& f, std::uint64_t seed, int samples = 200, int max_n = 0) {
  if (max_n == 0) max_n = default_max_n(f);
  Rng rng(seed);
  detail::Tally fix{"Q_A fixed by the substitution of [A]"}, shape{"Q_A coprime of degree D"},
      special{"reduced matrices give x^D, x^p-x, (x^2+b)/x, g_c/h_c"}, gen{"generate_invariants = brute force"},
      scal{"type-4 scalar law"};
  std::vector<Mat2> classes;
  if (f.q() <= 3) {
    classes = detail::nonidentity_classes(f);
  } else {
    while (static_cast<int>(classes.size()) < samples) {
      const Mat2 A = rng.matrix(f);
      if (!is_scalar(A)) classes.push_back(A);
    }
  }
  for (const auto& A : classes) {
    const QConstruction qc = q_map(A);
    fix.check(is_fixed_by(qc.map, A), [&] { return detail::describe(A); });
    shape.check(gcd(qc.map.num, qc.map.den).degree() == 0 && qc.map.degree == static_cast<int>(proj_order(A)),
                [&] { return detail::describe(A); });
  }
  const FPoly one = FPoly::constant(f.one()), x = FPoly::x(f);
  for (const auto& rep : type_representatives(f)) {
    const TypeInfo t = classify(rep);
    const Mat2 R = reduced_matrix(t, f);
    const RationalMap Q = q_map(R).map;
    const auto D = static_cast<int>(proj_order(R));
    RationalMap want;
    switch (t.index()) {
      case 1: want = {FPoly::monomial(f.one(), D), one, D}; break;
      case 2: want = {FPoly::monomial(f.one(), f.p()) - x, one, D}; break;
      case 3: want = {x * x + FPoly::constant(std::get<Type3>(t).b), x, 2}; break;
      default: want = reduced_q_map(reduce(R)); break;
    }
    special.check(Q == want, [&] { return detail::describe(R) + " gave " + to_string(Q); });
  }
  for (const auto& A : type_representatives(f)) {
    const auto D = static_cast<int>(proj_order(A));
    for (int m = 1; D * m <= max_n; ++m) {
      if (D * m <= 2) continue;
      const auto got = generate_invariants(A, m);
      const auto want = invariants_bruteforce(proj_canonical(A), D * m);
      gen.check(std::set<FPoly>(got.begin(), got.end()) == std::set<FPoly>(want.begin(), want.end()),
                [&] { return detail::describe(A) + " m=" + std::to_string(m); });
      if (classify(A).index() == 4 && f.q() == 2) {
        const Mat2 R = reduced_matrix(classify(A), f);
        const ExtElt th = reduce(R).eigenvalue;
        for (const auto& g : generate_invariants(R, m)) {
          const Felt s = *th.pow(static_cast<std::uint64_t>(D * m)).try_descend();
          scal.check(act(R, g) == g.scale(s), [&] { return to_string(g); });
        }
      }
    }
  }
  std::vector<PropertyResult> out{fix.result(), shape.result(), special.result(), gen.result()};
  if (scal.checks) out.push_back(scal.result());
  return out;
}

/// Noncyclic subgroups of order <= 60, as closures of pairs of elements.
/// Exhaustive (deduplicated) for q = 2; otherwise `samples` random draws,
/// which may repeat.
inline std::vector<std::vector<ProjMat>> noncyclic_subgroups(const Field& f, std::uint64_t seed, int samples) {
  std::vector<std::vector<ProjMat>> out;
  const auto classes = all_classes(f);
  if (f.q() == 2) {
    std::set<std::set<ProjMat>> seen;
    for (const auto& a : classes)
      for (const auto& b : classes) {
        auto g = subgroup_closure(f, {a, b});
        if (!is_cyclic(g) && seen.insert(g).second) out.push_back({a, b});
      }
    return out;
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 200000 && static_cast<int>(out.size()) < samples; ++attempt) {
    const ProjMat a = classes[rng.below(classes.size())], b = classes[rng.below(classes.size())];
    const auto g = subgroup_closure(f, {a, b});
    if (g.size() <= 60 && !is_cyclic(g)) out.push_back({a, b});
  }
  return out;
}

inline std::vector<PropertyResult> verify_noncyclic(const Field& f, std::uint64_t seed, int samples = 20) {
  detail::Tally none{"noncyclic subgroups fix no irreducible of degree 3..6"}, found{"noncyclic subgroups sampled"},
      quad{"quadratic invariants of PGL_2(F_2) are {x^2+x+1}"};
  const auto groups = noncyclic_subgroups(f, seed, samples);
  found.check(f.q() == 2 ? !groups.empty() : static_cast<int>(groups.size()) >= samples,
              [&] { return "only " + std::to_string(groups.size()) + " found"; });
  for (const auto& gens : groups)
    for (int n = 3; n <= 6; ++n)
      for (const auto& g : irreducibles_cached(f, n))
        none.check(!group_invariant(gens, g), [&] { return to_string(g) + " fixed by <" + to_string(gens[0].rep) + ", " + to_string(gens[1].rep) + ">"; });
  std::vector<PropertyResult> out{found.result(), none.result()};
  if (f.q() == 2) {
    const auto qi = quadratic_invariants(f, all_classes(f));
    quad.check(qi.size() == 1 && qi[0] == parse_poly(f, "x^2+x+1"), [&] { return std::to_string(qi.size()) + " found"; });
    out.push_back(quad.result());
  }
  return out;
}

/// Subgroups of order p^2 of the translations x -> x + t fix no irreducible
/// of degree 2..6. Needs q = p^s with s >= 2.
inline std::vector<PropertyResult> verify_pgroup(const Field& f, std::uint64_t seed, int samples = 3, int max_deg = 6) {
  if (f.s() < 2) return {{"order-p^2 unipotent subgroups fix no irreducible", true, "not applicable: q is prime"}};
  Rng rng(seed);
  detail::Tally none{"order-p^2 unipotent subgroups fix no irreducible"};
  const std::uint64_t p = f.p();
  for (int i = 0; i < samples; ++i) {
    const Felt t1 = rng.nonzero(f);
    Felt t2;
    for (;;) {
      t2 = rng.nonzero(f);
      bool dependent = false;
      for (std::uint64_t k = 0; k < p; ++k) dependent = dependent || t2 == f.from_int(static_cast<std::int64_t>(k)) * t1;
      if (!dependent) break;
    }
    const std::vector<ProjMat> gens{proj_canonical({f.one(), f.zero(), t1, f.one()}),
                                    proj_canonical({f.one(), f.zero(), t2, f.one()})};
    none.check(subgroup_closure(f, gens).size() == p * p, [&] { return std::string("closure has wrong order"); });
    for (int n = 2; n <= max_deg; ++n) {
      const auto inv = invariants_bruteforce(gens, f, n);
      none.check(inv.empty(), [&] { return to_string(inv[0]) + " fixed by t=" + std::to_string(t1.encode()) + "," + std::to_string(t2.encode()); });
    }
  }
  return {none.result()};
}

/// det(sigma(A, A0)) = det(A) det(A0)^2 and A0 o F_{A,r} | F_{sigma(A,A0),r}.
inline std::vector<PropertyResult> verify_sigma(const Field& f, std::uint64_t seed, int samples = 500) {
  Rng rng(seed);
  detail::Tally det_id{"det(sigma(A,A0)) = det(A) det(A0)^2"}, divides{"A0 o F_{A,r} divides F_{sigma(A,A0),r}"};
  auto det_check = [&](const Mat2& A, const Mat2& A0) {
    det_id.check(sigma_product(A, A0).det() == A.det() * A0.det() * A0.det(),
                 [&] { return detail::describe(A) + "," + detail::describe(A0); });
  };
  if (f.q() <= 3) {
    std::vector<Mat2> gl;
    const std::uint32_t q = f.q();
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          for (std::uint32_t d = 0; d < q; ++d) {
            Mat2 m{f.element(a), f.element(b), f.element(c), f.element(d)};
            if (!m.det().is_zero()) gl.push_back(m);
          }
    for (const auto& A : gl)
      for (const auto& A0 : gl) det_check(A, A0);
  } else {
    for (int i = 0; i < 100; ++i) det_check(rng.matrix(f), rng.matrix(f));
  }
  while (static_cast<int>(divides.checks) < samples) {
    const Mat2 A = rng.matrix(f), A0 = rng.matrix(f);
    const auto r = static_cast<unsigned>(rng.below(3));
    const FPoly F = F_poly(A, r);
    if (F.is_zero()) continue;
    const FPoly G = F_poly(sigma_product(A, A0), r);
    divides.check((G % act(A0, F)).is_zero(),
                  [&] { return detail::describe(A) + "," + detail::describe(A0) + " r=" + std::to_string(r); });
  }
  return {det_id.result(), divides.result()};
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"action-laws", "criterion", "conjugation", "counting",
                                              "qmap-fixed-point", "noncyclic", "pgroup", "sigma"};
  return names;
}

inline std::vector<PropertyResult> run_suite(const std::string& name, const Field& f, std::uint64_t seed) {
  if (name == "action-laws") return verify_action_laws(f, seed);
  if (name == "criterion") return verify_criterion(f, seed);
  if (name == "conjugation") return verify_conjugation(f, seed);
  if (name == "counting") return verify_counting(f);
  if (name == "qmap-fixed-point") return verify_qmap(f, seed);
  if (name == "noncyclic") return verify_noncyclic(f, seed);
  if (name == "pgroup") return verify_pgroup(f, seed);
  if (name == "sigma") return verify_sigma(f, seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace pglinv
