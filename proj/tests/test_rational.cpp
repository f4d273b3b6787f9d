#include <gtest/gtest.h>

#include <random>

#include "pglinv/counting.hpp"
#include "pglinv/rational.hpp"

using namespace pglinv;

namespace {

FPoly P(const Field& f, const char* s) { return parse_poly(f, s); }
Mat2 M(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)};
}
Mat2 sixth_root(const Field& f) { return M(f, 0, 1, -1, 1); }

}  // namespace

TEST(QMap, WorkedMatrix) {
  const Field& f3 = make_field(3, 1);
  const QConstruction q3 = q_map(sixth_root(f3));
  EXPECT_EQ(to_string(q3.map), "(x^2+x)/(x^3+2)");
  EXPECT_TRUE(is_fixed_by(q3.map, sixth_root(f3)));

  const Field& f5 = make_field(5, 1);
  const QConstruction q5 = q_map(sixth_root(f5));
  EXPECT_EQ(q5.source.conjugator, identity_matrix(f5));
  EXPECT_EQ(q5.map.num, P(f5, "x^3+3*x^2+4"));
  EXPECT_EQ(q5.map.den, P(f5, "3*x^2+3*x"));
  EXPECT_EQ(q5.map.degree, 3);

  // q = 7, theta = 3: (x + theta)^3 / (x - theta^2)^3
  const Field& f7 = make_field(7, 1);
  const QConstruction q7 = q_map(sixth_root(f7));
  EXPECT_EQ(q7.map.num, pow(P(f7, "x+3"), 3));
  EXPECT_EQ(q7.map.den, pow(P(f7, "x-2"), 3));
  EXPECT_EQ(q7.map.num, P(f7, "x^3+2*x^2+6*x+6"));
  EXPECT_EQ(q7.map.den, P(f7, "x^3+x^2+5*x+6"));

  const Field& f2 = make_field(2, 1);
  EXPECT_EQ(to_string(q_map(mat_D(f2.one())).map), "(x^3+x^2+1)/(x^2+x)");
  EXPECT_THROW(q_map(identity_matrix(f2)), std::invalid_argument);
}

TEST(QMap, ReducedSpecializations) {
  const Field& f7 = make_field(7, 1);
  const RationalMap a = q_map(mat_A(f7.element(2))).map;
  EXPECT_EQ(a.num, P(f7, "x^3"));
  EXPECT_EQ(a.den, P(f7, "1"));
  const RationalMap e = q_map(mat_E(f7)).map;
  EXPECT_EQ(e.num, P(f7, "x^7-x"));
  const RationalMap c = q_map(mat_C(f7.element(3))).map;
  EXPECT_EQ(c.num, P(f7, "x^2+3"));
  EXPECT_EQ(c.den, P(f7, "x"));
}

TEST(QMap, FixedPointSweep) {
  for (auto [p, s] : std::vector<std::pair<int, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const Field& f = make_field(p, s);
    std::mt19937_64 rng(21);
    const auto classes = all_classes(f);
    const std::size_t step = classes.size() > 400 ? classes.size() / 400 : 1;
    for (std::size_t i = rng() % step; i < classes.size(); i += step) {
      const Mat2& A = classes[i].rep;
      if (std::holds_alternative<Identity>(classify(A))) continue;
      const QConstruction qc = q_map(A);
      ASSERT_TRUE(is_fixed_by(qc.map, A)) << to_string(A) << " " << to_string(qc.map);
      EXPECT_EQ(static_cast<std::uint64_t>(qc.map.degree), proj_order(A));
      EXPECT_EQ(std::max(qc.map.num.degree(), qc.map.den.degree()), qc.map.degree);
    }
  }
}

TEST(Mobius, Substitution) {
  const Field& f5 = make_field(5, 1);
  const FPoly one = FPoly::constant(f5.one());
  const RationalMap x{P(f5, "x"), one, 1};
  const RationalMap s = substitute_mobius(x, mat_E(f5));
  EXPECT_EQ(s.num, P(f5, "x+1"));
  EXPECT_EQ(s.den, one);
  const RationalMap x4{P(f5, "x^4"), one, 4};
  EXPECT_EQ(substitute_mobius(x4, mat_A(f5.element(2))), x4);
  EXPECT_TRUE(is_fixed_by(x4, mat_A(f5.element(2))));
  EXPECT_FALSE(is_fixed_by(x, mat_E(f5)));
}

TEST(Transform, Examples) {
  const Field& f2 = make_field(2, 1);
  const QConstruction qc = q_map(mat_D(f2.one()));
  EXPECT_EQ(transform(P(f2, "x+1"), qc.map), P(f2, "x^3+x+1"));
  // in characteristic 2, F(x^2) = F(x)^2
  const RationalMap sq{P(f2, "x^2"), FPoly::constant(f2.one()), 2};
  EXPECT_EQ(transform(P(f2, "x^2+x+1"), sq), pow(P(f2, "x^2+x+1"), 2));
  const Field& f3 = make_field(3, 1);
  EXPECT_THROW(transform(FPoly(f3), RationalMap{P(f3, "x^2"), P(f3, "1"), 2}), std::invalid_argument);
}

TEST(Generate, Examples) {
  const Field& f2 = make_field(2, 1);
  const Mat2 d1 = mat_D(f2.one());
  const auto m1 = generate_invariants(d1, 1);
  ASSERT_EQ(m1.size(), 2u);
  EXPECT_EQ(m1[0], P(f2, "x^3+x+1"));
  EXPECT_EQ(m1[1], P(f2, "x^3+x^2+1"));
  EXPECT_TRUE(generate_invariants(d1, 2).empty());
  const Field& f3 = make_field(3, 1);
  EXPECT_EQ(generate_invariants(mat_C(f3.element(2)), 2).size(), 2u);
  EXPECT_THROW(generate_invariants(M(f3, 0, 1, 1, 0), 1), std::invalid_argument);
}

TEST(Generate, MatchesBruteForce) {
  for (auto [p, s] : std::vector<std::pair<int, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const Field& f = make_field(p, s);
    for (const Mat2& A : type_representatives(f)) {
      const auto D = static_cast<int>(proj_order(A));
      for (int m = 1; D * m <= (f.q() <= 3 ? 8 : 6); ++m) {
        if (D * m <= 2) continue;
        const auto gen = generate_invariants(A, m);
        const auto brute = invariants_bruteforce(proj_canonical(A), D * m);
        EXPECT_EQ(gen, brute) << to_string(A) << " m=" << m;
      }
    }
  }
}

TEST(Decompose, RoundTrip) {
  const Field& f2 = make_field(2, 1);
  const RationalMap Q = q_map(mat_D(f2.one())).map;
  EXPECT_EQ(decompose(P(f2, "x^3+x+1"), Q), P(f2, "x+1"));
  EXPECT_EQ(decompose(P(f2, "x^3+x^2+1"), Q), P(f2, "x"));
  EXPECT_THROW(decompose(P(f2, "x^4+x+1"), Q), std::invalid_argument);  // wrong degree
  const Field& f3 = make_field(3, 1);
  const Mat2 A = sixth_root(f3);
  const RationalMap Q3 = q_map(A).map;
  for (const auto& g : generate_invariants(A, 2)) EXPECT_EQ(monic(transform(decompose(g, Q3), Q3)), g);
  // an irreducible sextic that [A] does not fix
  for (const auto& g : enumerate_monic_irreducibles(f3, 6))
    if (!is_invariant(proj_canonical(A), g)) {
      EXPECT_THROW(decompose(g, Q3), std::invalid_argument);
      break;
    }
}
