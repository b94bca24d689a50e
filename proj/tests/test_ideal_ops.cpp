#include <gtest/gtest.h>

#include <random>

#include "frob/errors.hpp"
#include "frob/ideal_ops.hpp"
#include "frob/quotient.hpp"
#include "test_util.hpp"

using namespace frob;
using frob::test::P;
using frob::test::Ps;

namespace {

PresentationPtr ring(std::uint32_t p, std::vector<std::string> vars, const std::string& rel = "") {
  auto S = make_ring(p, std::move(vars));
  return RingPresentation::create(S, Ps(S, rel));
}

QuotientIdeal id(const PresentationPtr& R, const std::string& gens) {
  return QuotientIdeal(R, Ps(R->ambient(), gens));
}

// Colon oracle by definition: g in (I:f) iff g*f in I, checked on every
// standard monomial of the candidate's complement and on its generators.
void expect_colon(const QuotientIdeal& I, const Polynomial& f, const QuotientIdeal& C) {
  for (const auto& g : C.generators()) EXPECT_TRUE(I.contains(g * f)) << g.to_string();
  EXPECT_TRUE(C.contains(I));
  if (C.is_zero_dimensional() && !C.is_unit()) {
    // No nonzero combination of standard monomials of C multiplies into I.
    const auto& B = C.lift().standard_basis();
    for (const auto& m : B.monomials())
      EXPECT_FALSE(I.contains(f.mul_term(1, m))) << "standard monomial in colon";
  }
}

}  // namespace

TEST(BracketPower, Examples) {
  auto R = ring(3, {"x", "y"});
  EXPECT_EQ(bracket_power(R->maximal_ideal(), 1), id(R, "x^3, y^3"));
  auto I = id(R, "x^2 + y, x*y");
  EXPECT_EQ(bracket_power(I, 0), I);
  auto R2 = ring(2, {"x", "y"});
  EXPECT_EQ(bracket_power(id(R2, "x + y"), 1), id(R2, "x^2 + y^2"));
}

TEST(BracketPower, AdditiveAndComposes) {
  auto R = ring(3, {"x", "y", "z"}, "x*y - z^2");
  auto I = id(R, "x + z, y^2");
  auto J = id(R, "x*z - y");
  EXPECT_EQ(bracket_power(ideal_sum(I, J), 1), ideal_sum(bracket_power(I, 1), bracket_power(J, 1)));
  EXPECT_EQ(bracket_power(bracket_power(I, 1), 1), bracket_power(I, 2));
}

TEST(BracketPower, Overflow) {
  auto R = ring(2, {"x"});
  try {
    (void)bracket_power(R->maximal_ideal(), 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExponentOverflow);
  }
}

TEST(Colon, Examples) {
  auto R = ring(5, {"x"});
  auto I = id(R, "x^25");
  EXPECT_EQ(ideal_colon(I, P(R->ambient(), "x^24")), id(R, "x"));
  auto R2 = ring(5, {"x", "y"});
  auto J = id(R2, "x^2, x*y");
  EXPECT_EQ(ideal_colon(J, Polynomial::constant(R2->ambient(), 1)), J);
  EXPECT_EQ(ideal_colon(J, P(R2->ambient(), "x")), id(R2, "x, y"));
  EXPECT_TRUE(ideal_colon(J, P(R2->ambient(), "x^2")).is_unit());
}

TEST(Colon, GeneralPathsAgree) {
  // Zero-dimensional linear path versus intersect-and-divide in a
  // positive-dimensional ambient ideal that contains the same data.
  auto R = ring(7, {"x", "y", "z"}, "x*y - z^2");
  auto I = id(R, "x^3, y^2 + z, x*z");
  auto f = P(R->ambient(), "x + y");
  QuotientIdeal C = ideal_colon(I, f);
  expect_colon(I, f, C);
  auto nonzero_dim = id(R, "x^2 + z");
  QuotientIdeal D = ideal_colon(nonzero_dim, P(R->ambient(), "x"));
  for (const auto& g : D.generators()) EXPECT_TRUE(nonzero_dim.contains(g * P(R->ambient(), "x")));
  EXPECT_TRUE(D.contains(nonzero_dim));
}

TEST(Colon, LengthIdentityRandomized) {
  // l(R/(J:c)) = l(R/J) - l(R/(J + c)).
  std::mt19937_64 rng(17);
  auto R = ring(3, {"x", "y", "z"}, "x*y - z^2");
  const auto& S = R->ambient();
  std::vector<std::string> pool{"x", "y", "z", "x + y", "x*z + y^2", "z^2 + x", "y*z - x^2", "x + y + z"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 15; ++k) {
    auto J = bracket_power(R->maximal_ideal(), 1);
    J = ideal_sum(J, std::vector<Polynomial>{P(S, pool[pick(rng)])});
    auto c = P(S, pool[pick(rng)]);
    auto C = ideal_colon(J, c);
    std::vector<Polynomial> cs{c};
    EXPECT_EQ(C.colength(), J.colength() - ideal_sum(J, cs).colength());
    expect_colon(J, c, C);
  }
}

TEST(ColonIdeal, Examples) {
  auto R = ring(5, {"x", "y"});
  auto I = id(R, "x^2");
  EXPECT_EQ(ideal_colon_ideal(I, R->unit_ideal()), I);
  EXPECT_EQ(ideal_colon_ideal(I, id(R, "x, y")), id(R, "x^2"));
  EXPECT_EQ(ideal_colon_ideal(id(R, "x*y"), id(R, "x")), id(R, "y"));
  // Zero-dimensional linear path against the two-colon intersection.
  auto K = id(R, "x^3 + y^2, x*y^2, y^4");
  auto J = id(R, "x + y, y^2");
  auto direct = ideal_colon_ideal(K, J);
  auto viaint = ideal_intersect(ideal_colon(K, P(R->ambient(), "x + y")), ideal_colon(K, P(R->ambient(), "y^2")));
  EXPECT_EQ(direct, viaint);
}

TEST(Intersect, Examples) {
  auto R = ring(5, {"x", "y"});
  auto I = id(R, "x^2 + y, x*y");
  EXPECT_EQ(ideal_intersect(I, I), I);
  EXPECT_EQ(ideal_intersect(id(R, "x"), id(R, "y")), id(R, "x*y"));
  EXPECT_EQ(ideal_intersect(id(R, "x^2, y"), id(R, "x, y^2")), id(R, "x^2, x*y, y^2"));
  EXPECT_EQ(ideal_intersect(id(R, "x + y"), id(R, "x - y")), id(R, "x^2 - y^2"));
}

TEST(Intersect, InclusionExclusionAndBaseAgreement) {
  auto R = ring(3, {"x", "y", "z"}, "x*y - z^2");
  auto I = id(R, "x^2 + z, y^3, z*y");
  auto J = id(R, "x + y, z^3");
  auto meet = ideal_intersect(I, J);
  EXPECT_TRUE(I.contains(meet));
  EXPECT_TRUE(J.contains(meet));
  EXPECT_EQ(meet.colength() + ideal_sum(I, J).colength(), I.colength() + J.colength());
  auto base = ideal_product(I, J);
  std::vector<QuotientIdeal> both{I, J};
  EXPECT_EQ(ideal_intersect_over(base, both), meet);
}

TEST(Socle, Examples) {
  auto R = ring(5, {"x", "y"});
  for (int t : {1, 2, 4}) {
    std::string ts = std::to_string(t);
    auto J = id(R, "x^" + ts + ", y^" + ts);
    EXPECT_EQ(socle_generator(J), P(R->ambient(), "x^" + std::to_string(t - 1) + "*y^" + std::to_string(t - 1)));
  }
  EXPECT_EQ(socle_generator(R->maximal_ideal()), Polynomial::constant(R->ambient(), 1));
  try {
    (void)socle_generator(id(R, "x^2, y^2, x*y"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
  }
  EXPECT_EQ(socle_dimension(id(R, "x^2, y^2, x*y")), 2u);
  EXPECT_THROW(socle_generator(id(R, "x*y")), Error);
}

TEST(Socle, GeneratorProperties) {
  auto R = ring(3, {"x", "y", "z"}, "x*y - z^2");
  auto J = id(R, "x^3, y^3");  // parameter ideal in a Gorenstein ring
  Polynomial d = socle_generator(J);
  EXPECT_FALSE(J.contains(d));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(J.contains(d * Polynomial::variable(R->ambient(), i)));
  auto soc = ideal_colon_ideal(J, R->maximal_ideal());
  std::vector<Polynomial> ds{d};
  EXPECT_EQ(soc, ideal_sum(J, ds));
}

TEST(Presentation, Basics) {
  auto R = ring(3, {"x", "y", "z"}, "x*y - z^2");
  EXPECT_EQ(R->dimension(), 2);
  EXPECT_TRUE(R->is_hypersurface());
  EXPECT_TRUE(R->maximal_ideal().is_m_primary());
  auto S = ring(5, {"x"});
  EXPECT_FALSE(id(S, "x^2 - x").is_m_primary());
  EXPECT_TRUE(id(S, "x^3").is_m_primary());
  EXPECT_FALSE(id(S, "x*(x+1)^2 + x^5").is_m_primary());
  EXPECT_THROW(ring(5, {"x"}, "1"), Error);
}
