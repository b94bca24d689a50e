#include <gtest/gtest.h>

#include <random>

#include "frob/errors.hpp"
#include "frob/groebner.hpp"
#include "frob/quotient.hpp"
#include "test_util.hpp"

using namespace frob;
using frob::test::P;
using frob::test::Ps;

namespace {

IdealHandle ideal(const RingPtr& R, const std::string& gens) { return IdealHandle(R, Ps(R, gens)); }

// Brute-force colength oracle for monomial ideals: count monomials inside a box.
long box_count(const std::vector<Monomial>& gens, std::size_t n, int bound) {
  long count = 0;
  Monomial m;
  std::vector<int> e(n, 0);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) m.set(i, e[i]);
    bool in = false;
    for (const auto& g : gens) in = in || g.divides(m, n);
    if (!in) ++count;
    std::size_t k = 0;
    while (k < n && ++e[k] > bound) e[k++] = 0;
    if (k == n) return count;
  }
}

}  // namespace

TEST(Buchberger, LexEliminationExample) {
  auto R = make_ring(5, {"x", "y", "z"}, MonomialOrder::lex());
  auto gens = Ps(R, "x^2 - y, x^3 - z");
  auto gb = buchberger(gens);
  EXPECT_TRUE(normal_form(P(R, "y^3 - z^2"), gb).is_zero());
  bool found = false;
  for (const auto& g : gb.elements()) found = found || g == P(R, "y^3 - z^2");
  EXPECT_TRUE(found);
}

TEST(Buchberger, TrivialCases) {
  auto R = make_ring(3, {"x", "y"});
  auto gb = buchberger(Ps(R, "y, x"));
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_TRUE(gb.is_monomial_ideal());
  std::vector<Polynomial> zero{Polynomial(R)};
  EXPECT_TRUE(buchberger(zero).is_zero_ideal());
  EXPECT_TRUE(buchberger(Ps(R, "x*y - 1, x")).is_unit_ideal());
}

TEST(Buchberger, ReducedAndOrderIndependentIdeal) {
  auto R = make_ring(7, {"x", "y", "z"});
  auto gens = Ps(R, "x^2 + y*z - 1, y^2 - x*z, z^3 + x");
  auto g1 = buchberger(gens);
  auto g2 = buchberger(gens, MonomialOrder::lex());
  auto g3 = buchberger(gens, MonomialOrder::grlex());
  // Same ideal: every basis element reduces to zero modulo the others.
  for (const auto& f : g2.elements()) EXPECT_TRUE(normal_form(f.in_ring(R), g1).is_zero());
  for (const auto& f : g1.elements()) EXPECT_TRUE(normal_form(f.in_ring(g2.ring()), g2).is_zero());
  EXPECT_EQ(colength(g1), colength(g2));
  EXPECT_EQ(colength(g1), colength(g3));
  for (const auto& f : g1.elements()) {
    EXPECT_EQ(f.leading_coeff(), 1u);
    EXPECT_TRUE(f.check_invariants());
  }
}

TEST(Buchberger, BudgetExceeded) {
  auto R = make_ring(32003, {"x", "y", "z", "w"});
  auto gens = Ps(R, "x^3*y + y^3*z + z^3*w + w^3*x + 1, x*y*z*w - 3, x^2*y^2 + z^2*w^2 + x*z");
  GbBudget budget;
  budget.max_reductions = 10;
  try {
    (void)buchberger(gens, budget);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(NormalForm, Examples) {
  auto R = make_ring(5, {"x", "y"});
  EXPECT_TRUE(normal_form(P(R, "x^2"), buchberger(Ps(R, "x"))).is_zero());
  EXPECT_EQ(normal_form(P(R, "y + 1"), buchberger(Ps(R, "x"))), P(R, "y + 1"));
  auto lex = make_ring(5, {"x", "y"}, MonomialOrder::lex());
  EXPECT_EQ(normal_form(P(lex, "x^3"), buchberger(Ps(lex, "x^2 - y"))), P(lex, "x*y"));
}

TEST(NormalForm, MembershipOfCombinations) {
  std::mt19937_64 rng(3);
  auto R = make_ring(11, {"x", "y", "z"});
  auto gens = Ps(R, "x*y - z^2, x^3 - y*z, y^4 - x");
  auto gb = buchberger(gens);
  std::uniform_int_distribution<int> c(0, 10);
  for (int k = 0; k < 10; ++k) {
    Polynomial f(R);
    for (const auto& g : gens) {
      auto m = Monomial::variable(static_cast<std::size_t>(c(rng) % 3), c(rng) % 3);
      f = f + g.mul_term(static_cast<Coeff>(c(rng)), m);
    }
    EXPECT_TRUE(normal_form(f, gb).is_zero());
  }
}

TEST(Colength, Examples) {
  auto R = make_ring(3, {"x", "y"});
  for (int q : {1, 3, 9, 27}) {
    auto I = IdealHandle(R, {Polynomial::term(R, 1, Monomial::variable(0, q)),
                             Polynomial::term(R, 1, Monomial::variable(1, q))});
    EXPECT_EQ(colength(I), BigInt(q) * q);
  }
  EXPECT_EQ(colength(ideal(R, "x, y")), 1);
  EXPECT_EQ(colength(ideal(R, "x^2, x*y, y^3")), 4);
  EXPECT_THROW(colength(ideal(R, "x*y")), Error);
  EXPECT_EQ(colength(ideal(R, "1")), 0);
}

TEST(Colength, StaircaseAgreesWithBoxCount) {
  std::mt19937_64 rng(5);
  auto R = make_ring(2, {"a", "b", "c"});
  std::uniform_int_distribution<int> e(0, 4);
  for (int k = 0; k < 20; ++k) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < 3; ++i) gens.push_back(Polynomial::term(R, 1, Monomial::variable(i, 5)));
    for (int j = 0; j < 4; ++j) {
      Monomial m;
      for (std::size_t i = 0; i < 3; ++i) m.set(i, e(rng));
      gens.push_back(Polynomial::term(R, 1, m));
    }
    auto gb = buchberger(gens);
    long oracle = box_count(gb.leading_monomials(), 3, 5);
    EXPECT_EQ(colength(gb), oracle);
    EXPECT_EQ(standard_monomials(gb).size(), static_cast<std::size_t>(oracle));
  }
}

TEST(Colength, FrobeniusFlatnessOnRegularRing) {
  // Kunz: l(S/I^[q]) = q^n l(S/I) in a polynomial ring.
  auto R = make_ring(3, {"x", "y"});
  auto gens = Ps(R, "x^2 + y, y^3");
  BigInt base = colength(buchberger(gens));
  for (unsigned e = 1; e <= 2; ++e) {
    std::vector<Polynomial> fq;
    for (const auto& g : gens) fq.push_back(frobenius_power(g, e));
    BigInt q = prime_power(3, e);
    EXPECT_EQ(colength(buchberger(fq)), q * q * base);
  }
}

TEST(KrullDimension, Examples) {
  auto R = make_ring(3, {"x", "y", "z"});
  EXPECT_EQ(krull_dimension(ideal(R, "x*y - z^2")), 2);
  EXPECT_EQ(krull_dimension(IdealHandle(R, {})), 3);
  auto R2 = make_ring(5, {"x", "y"});
  EXPECT_EQ(krull_dimension(ideal(R2, "x, y")), 0);
  EXPECT_EQ(krull_dimension(ideal(R, "x*y, x*z")), 2);
  EXPECT_EQ(krull_dimension(ideal(R, "x, y*z")), 1);
  EXPECT_THROW(krull_dimension(ideal(R, "1")), Error);
}

TEST(IdealHandle, ContainsAndEquality) {
  auto R = make_ring(5, {"x", "y"});
  auto I = ideal(R, "x^2, x*y");
  auto J = ideal(R, "x*y, x^2 + x*y");
  EXPECT_TRUE(I == J);
  EXPECT_TRUE(I.contains(P(R, "x^3 + x*y^5")));
  EXPECT_FALSE(I.contains(P(R, "x")));
  EXPECT_TRUE(ideal(R, "x").contains(I));
}

TEST(StandardBasis, CoordinatesRoundTrip) {
  auto R = make_ring(7, {"x", "y"});
  auto I = ideal(R, "x^3 - y, y^2 - x*y");
  const auto& B = I.standard_basis();
  EXPECT_EQ(B.dimension(), static_cast<std::size_t>(colength(I)));
  auto f = P(R, "x^5 + 3*x*y^2 + 1");
  EXPECT_EQ(B.polynomial(B.coordinates(f)), normal_form(f, I.gb()));
}

TEST(StandardBasis, SubspaceIdealIsSum) {
  auto R = make_ring(3, {"x", "y"});
  auto I = ideal(R, "x^3, y^3");
  const auto& B = I.standard_basis();
  // K = image of (x*y) in S/I: spanned by x*y * standard monomials.
  std::vector<SparseVector> K;
  for (const auto& m : B.monomials()) K.push_back(B.coordinates(P(R, "x*y").mul_term(1, m)));
  auto sum = ideal_from_subspace(B, K);
  EXPECT_TRUE(IdealHandle::from_groebner(sum) == ideal(R, "x^3, y^3, x*y"));
}
