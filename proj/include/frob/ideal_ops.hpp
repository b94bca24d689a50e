#pragma once

#include <span>

#include "frob/presentation.hpp"

namespace frob {

/// I^{[p^e]}: generators raised to the p^e-th power, plus Q.
/// Throws ExponentOverflow.
QuotientIdeal bracket_power(const QuotientIdeal& I, unsigned e);

QuotientIdeal ideal_sum(const QuotientIdeal& I, const QuotientIdeal& J);
QuotientIdeal ideal_sum(const QuotientIdeal& I, std::span<const Polynomial> extra);
QuotientIdeal ideal_product(const QuotientIdeal& I, const QuotientIdeal& J);
/// I^n, reducing to a basis between multiplications. I^0 = R.
QuotientIdeal ideal_power(const QuotientIdeal& I, unsigned n);

/// (I : f). Uses the monomial rule when I and f are monomial, linear algebra
/// on S/I when I is zero-dimensional, and intersection-and-divide otherwise.
/// f in I gives the unit ideal.
QuotientIdeal ideal_colon(const QuotientIdeal& I, const Polynomial& f);
/// (I : J) = intersection of (I : g) over generators g of J.
QuotientIdeal ideal_colon_ideal(const QuotientIdeal& I, const QuotientIdeal& J);

/// I ∩ J by tag-variable elimination (monomial rule when both are monomial).
/// Throws BudgetExceeded.
QuotientIdeal ideal_intersect(const QuotientIdeal& I, const QuotientIdeal& J);
/// Intersection of ideals that all contain the zero-dimensional `base`,
/// computed as a kernel on S/base.
QuotientIdeal ideal_intersect_over(const QuotientIdeal& base, std::span<const QuotientIdeal> ideals);

/// Generator of the one-dimensional socle (J : m)/J, scaled so its leading
/// coefficient is 1. Throws NotZeroDimensional, NotMPrimary, NotIrreducible.
Polynomial socle_generator(const QuotientIdeal& J);
/// dim_k (J : m)/J for zero-dimensional J.
std::size_t socle_dimension(const QuotientIdeal& J);

/// Exact quotient f / g. Throws InvalidArgument when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Throws RingMismatch unless both ideals share a presentation.
void require_same_presentation(const QuotientIdeal& I, const QuotientIdeal& J);

}  // namespace frob
