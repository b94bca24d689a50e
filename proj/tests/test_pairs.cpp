#include <gtest/gtest.h>

#include "frob/ideal_ops.hpp"
#include "frob/pairs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace frob;
using frob::test::Ps;

namespace {

PresentationPtr ring(std::uint32_t p, std::vector<std::string> vars, const std::string& rel = "") {
  auto S = make_ring(p, std::move(vars));
  return RingPresentation::create(S, Ps(S, rel));
}

std::vector<BigInt> lengths(const InvariantTable& t) {
  std::vector<BigInt> out;
  for (const auto& r : t.rows) out.push_back(r.length);
  return out;
}

}  // namespace

TEST(CeilPower, Examples) {
  auto R = ring(5, {"x", "y"});
  auto m = R->maximal_ideal();
  EXPECT_TRUE(ideal_ceil_power(m, 0).is_unit());
  EXPECT_EQ(ideal_ceil_power(m, 2), QuotientIdeal(R, Ps(R->ambient(), "x^2, x*y, y^2")));
  QuotientIdeal a(R, Ps(R->ambient(), "x"));
  EXPECT_EQ(ideal_ceil_power(a, 7), QuotientIdeal(R, Ps(R->ambient(), "x^7")));
}

TEST(CeilPower, ExactExponent) {
  EXPECT_EQ(pair_exponent(BigRational(1, 2), 5), 2);
  EXPECT_EQ(pair_exponent(BigRational(1, 2), 25), 12);
  EXPECT_EQ(pair_exponent(BigRational(1, 3), 5), 2);
  EXPECT_EQ(pair_exponent(BigRational(0), 125), 0);
  EXPECT_EQ(pair_exponent(BigRational(2), 1), 0);
}

TEST(PairSignature, ZeroExponentIsPlainSignature) {
  auto R = ring(3, {"x", "y", "z"}, "x*y - z^2");
  auto sop = find_sop(R, 0);
  auto chain = parameter_power_chain(R, sop);
  PairSpec spec{R, R->maximal_ideal(), 0};
  EXPECT_EQ(lengths(pair_fsig_function(spec, chain, 5, 2)), lengths(fsig_function_chain(R, chain, 5, 2).table));
}

TEST(PairSignature, PrincipalHalf) {
  auto R = ring(5, {"x"});
  PairSpec spec{R, R->maximal_ideal(), BigRational(1, 2)};
  auto t = pair_fsig_function(spec, parameter_power_chain(R, find_sop(R, 0)), 5, 3);
  for (const auto& r : t.rows)
    EXPECT_EQ(r.length, oracle::principal_pair_length(static_cast<std::int64_t>(r.q), 1, 2));
  EXPECT_NEAR(pair_fsig_estimate(t).eta_value(), 0.5, 0.05);
}

TEST(PairSignature, LargeExponentVanishes) {
  auto R = ring(5, {"x"});
  PairSpec spec{R, R->maximal_ideal(), BigRational(3, 2)};
  auto t = pair_fsig_function(spec, parameter_power_chain(R, find_sop(R, 0)), 5, 3);
  for (std::size_t i = 1; i < t.rows.size(); ++i) EXPECT_EQ(t.rows[i].length, 0);
  EXPECT_EQ(pair_fsig_estimate(t).eta, 0);
}

TEST(PairSignature, MonotoneInExponent) {
  auto R = ring(3, {"x", "y"});
  auto chain = parameter_power_chain(R, find_sop(R, 0));
  std::vector<BigInt> previous;
  for (auto xi : {BigRational(0), BigRational(1, 3), BigRational(1, 2), BigRational(1)}) {
    auto rows = lengths(pair_fsig_function(PairSpec{R, R->maximal_ideal(), xi}, chain, 5, 2));
    if (!previous.empty())
      for (std::size_t e = 0; e < rows.size(); ++e) EXPECT_LE(rows[e], previous[e]);
    previous = rows;
  }
}

TEST(PairSignature, RejectsBadSpecs) {
  auto R = ring(5, {"x"});
  auto chain = parameter_power_chain(R, find_sop(R, 0));
  EXPECT_THROW(pair_fsig_function(PairSpec{R, R->zero_ideal(), 1}, chain, 5, 2), Error);
  EXPECT_THROW(pair_fsig_function(PairSpec{R, R->maximal_ideal(), -1}, chain, 5, 2), Error);
}
