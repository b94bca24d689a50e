#pragma once

#include "frob/invariants.hpp"

namespace frob {

/// (R, a^t) with t >= 0 rational.
struct PairSpec {
  PresentationPtr base;
  QuotientIdeal a;
  BigRational t;
};

/// a^n with a basis reduction between multiplications; a^0 = R.
QuotientIdeal ideal_ceil_power(const QuotientIdeal& a, unsigned n);

/// ceil(t (q - 1)) in exact arithmetic.
BigInt pair_exponent(const BigRational& t, const BigInt& q);

/// Per e, the t-stabilized l(R/(J_t^[q] : a^ceil(xi(q-1)) delta_t^q)).
/// Throws InvalidArgument for a = 0 or negative t, PartialTableError(ChainExhausted).
InvariantTable pair_fsig_function(const PairSpec& spec, const ChainFn& chain, unsigned t_max, unsigned e_max,
                                  unsigned threads = 1);

Estimate pair_fsig_estimate(const InvariantTable& table);

}  // namespace frob
