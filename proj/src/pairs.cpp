#include "frob/pairs.hpp"

#include "frob/ideal_ops.hpp"

namespace frob {

QuotientIdeal ideal_ceil_power(const QuotientIdeal& a, unsigned n) { return ideal_power(a, n); }

BigInt pair_exponent(const BigRational& t, const BigInt& q) {
  BigRational x = t * BigRational(q - 1);
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt floor = num / den;
  if (num % den != 0 && num > 0) floor += 1;
  return floor;
}

InvariantTable pair_fsig_function(const PairSpec& spec, const ChainFn& chain, unsigned t_max, unsigned e_max,
                                  unsigned threads) {
  if (spec.t < 0) fail(ErrorKind::InvalidArgument, "pair exponent must be non-negative");
  if (spec.a.is_zero()) fail(ErrorKind::InvalidArgument, "pair ideal must be nonzero");
  require_same_presentation(spec.a, spec.base->maximal_ideal());
  const std::uint32_t p = spec.base->characteristic();
  auto twist = [&](unsigned e) -> std::optional<QuotientIdeal> {
    BigInt n = pair_exponent(spec.t, BigInt(prime_power(p, e)));
    if (n == 0) return std::nullopt;
    if (n > 1'000'000) fail(ErrorKind::BudgetExceeded, "pair exponent " + n.str() + " too large");
    return ideal_ceil_power(spec.a, static_cast<unsigned>(n));
  };
  return chain_colon_table(TableKind::PAIR, spec.base, chain, t_max, e_max, threads, twist).table;
}

Estimate pair_fsig_estimate(const InvariantTable& table) { return hk_estimate(table); }

}  // namespace frob
