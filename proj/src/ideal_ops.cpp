#include "frob/ideal_ops.hpp"

#include "frob/errors.hpp"
#include "frob/quotient.hpp"

namespace frob {

void require_same_presentation(const QuotientIdeal& I, const QuotientIdeal& J) {
  if (I.presentation() != J.presentation()) fail(ErrorKind::RingMismatch, "ideals of different presentations");
}

QuotientIdeal bracket_power(const QuotientIdeal& I, unsigned e) {
  if (e == 0) return I;
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, e));
  return QuotientIdeal(I.presentation(), std::move(gens));
}

QuotientIdeal ideal_sum(const QuotientIdeal& I, const QuotientIdeal& J) {
  require_same_presentation(I, J);
  return ideal_sum(I, J.generators());
}

QuotientIdeal ideal_sum(const QuotientIdeal& I, std::span<const Polynomial> extra) {
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return QuotientIdeal(I.presentation(), std::move(gens));
}

QuotientIdeal ideal_product(const QuotientIdeal& I, const QuotientIdeal& J) {
  require_same_presentation(I, J);
  std::vector<Polynomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return QuotientIdeal(I.presentation(), std::move(gens));
}

QuotientIdeal ideal_power(const QuotientIdeal& I, unsigned n) {
  QuotientIdeal result = I.presentation()->unit_ideal();
  for (unsigned k = 0; k < n; ++k) {
    QuotientIdeal next = ideal_product(result, I);
    result = QuotientIdeal::from_lift(next.presentation(), next.lift());
  }
  return result;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero polynomial");
  const PrimeField& F = f.ring()->field();
  const std::size_t n = f.ring()->nvars();
  const Coeff inv = F.inv(g.leading_coeff());
  std::vector<Term> quotient;
  Polynomial r = f;
  while (!r.is_zero()) {
    if (!g.leading_monomial().divides(r.leading_monomial(), n)) {
      fail(ErrorKind::InvalidArgument, "polynomial division is not exact");
    }
    Coeff c = F.mul(r.leading_coeff(), inv);
    Monomial m = divide(r.leading_monomial(), g.leading_monomial());
    quotient.push_back({c, m});
    r = sub_mul(r, c, m, g);
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(quotient));
}

namespace {

bool all_monomial(std::span<const Polynomial> fs) {
  for (const auto& f : fs)
    if (!f.is_monomial()) return false;
  return true;
}

std::vector<Polynomial> monomial_colon(const GroebnerBasis& gb, const Monomial& f) {
  const RingPtr& ring = gb.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements()) {
    const Monomial& m = g.leading_monomial();
    gens.push_back(Polynomial::term(ring, 1, divide(m, gcd(m, f))));
  }
  return gens;
}

std::vector<Polynomial> monomial_intersection(const GroebnerBasis& a, const GroebnerBasis& b) {
  const RingPtr& ring = a.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : a.elements())
    for (const auto& h : b.elements())
      gens.push_back(Polynomial::term(ring, 1, lcm(g.leading_monomial(), h.leading_monomial())));
  return gens;
}

// Kernel of multiplication by `multipliers` on S/I, added to I.
QuotientIdeal linear_colon(const QuotientIdeal& I, std::span<const Polynomial> multipliers) {
  const StandardBasis& B = I.lift().standard_basis();
  std::vector<const StandardBasis*> targets(multipliers.size(), &B);
  KernelResult k = multiplication_kernel(B, multipliers, targets, true);
  return QuotientIdeal::from_lift(I.presentation(), IdealHandle::from_groebner(ideal_from_subspace(B, k.kernel)));
}

Polynomial shift_into(const Polynomial& f, const RingPtr& target, std::size_t offset) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const std::size_t n = f.ring()->nvars();
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.set(i + offset, t.mono[i]);
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial shift_out(const Polynomial& f, const RingPtr& target, std::size_t offset) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const std::size_t n = target->nvars();
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i + offset]);
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// I ∩ J in S via the basis of t*I + (1-t)*J under an order eliminating t.
IdealHandle eliminate_intersection(const IdealHandle& I, const IdealHandle& J, const GbBudget& budget) {
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->nvars();
  if (n + 1 > kMaxVars) fail(ErrorKind::InvalidArgument, "too many variables for tag-variable intersection");
  std::vector<std::string> names{"_tag"};
  for (std::size_t i = 0; i < n; ++i) names.push_back(ring->variables()[i]);
  RingPtr tagged = make_ring(ring->characteristic(), names, MonomialOrder::elimination(1));
  Polynomial t = Polynomial::variable(tagged, 0);
  Polynomial one_minus_t = Polynomial::constant(tagged, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gb().elements()) gens.push_back(t * shift_into(g, tagged, 1));
  for (const auto& h : J.gb().elements()) gens.push_back(one_minus_t * shift_into(h, tagged, 1));
  GroebnerBasis gb = buchberger(gens, budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements())
    if (g.leading_monomial()[0] == 0) kept.push_back(shift_out(g, ring, 1));
  return IdealHandle(ring, std::move(kept), budget);
}

}  // namespace

QuotientIdeal ideal_colon(const QuotientIdeal& I, const Polynomial& f) {
  const PresentationPtr& R = I.presentation();
  if (I.contains(f)) return R->unit_ideal();
  const GroebnerBasis& gb = I.lift().gb();
  if (gb.is_monomial_ideal() && f.is_monomial()) {
    return QuotientIdeal(R, monomial_colon(gb, f.leading_monomial()));
  }
  if (I.is_zero_dimensional()) {
    Polynomial fs[] = {f};
    return linear_colon(I, fs);
  }
  IdealHandle principal(I.ring(), {f}, R->budget());
  IdealHandle meet = eliminate_intersection(I.lift(), principal, R->budget());
  std::vector<Polynomial> gens;
  for (const auto& h : meet.gb().elements()) gens.push_back(divide_exact(h, f));
  return QuotientIdeal(R, std::move(gens));
}

QuotientIdeal ideal_colon_ideal(const QuotientIdeal& I, const QuotientIdeal& J) {
  require_same_presentation(I, J);
  const PresentationPtr& R = I.presentation();
  std::vector<Polynomial> mult;
  for (const auto& g : J.generators())
    if (!I.contains(g)) mult.push_back(g);
  if (mult.empty()) return R->unit_ideal();
  if (mult.size() == 1) return ideal_colon(I, mult[0]);
  const GroebnerBasis& gb = I.lift().gb();
  if (gb.is_monomial_ideal() && all_monomial(mult)) {
    QuotientIdeal acc = ideal_colon(I, mult[0]);
    for (std::size_t k = 1; k < mult.size(); ++k) acc = ideal_intersect(acc, ideal_colon(I, mult[k]));
    return acc;
  }
  if (I.is_zero_dimensional()) return linear_colon(I, mult);
  QuotientIdeal acc = ideal_colon(I, mult[0]);
  for (std::size_t k = 1; k < mult.size(); ++k) acc = ideal_intersect(acc, ideal_colon(I, mult[k]));
  return acc;
}

QuotientIdeal ideal_intersect(const QuotientIdeal& I, const QuotientIdeal& J) {
  require_same_presentation(I, J);
  if (J.contains(I)) return I;
  if (I.contains(J)) return J;
  const PresentationPtr& R = I.presentation();
  const GroebnerBasis& a = I.lift().gb();
  const GroebnerBasis& b = J.lift().gb();
  if (a.is_monomial_ideal() && b.is_monomial_ideal()) return QuotientIdeal(R, monomial_intersection(a, b));
  return QuotientIdeal::from_lift(R, eliminate_intersection(I.lift(), J.lift(), R->budget()));
}

QuotientIdeal ideal_intersect_over(const QuotientIdeal& base, std::span<const QuotientIdeal> ideals) {
  if (ideals.empty()) return base.presentation()->unit_ideal();
  if (!base.is_zero_dimensional()) fail(ErrorKind::NotZeroDimensional, "intersection base must be zero-dimensional");
  for (const auto& I : ideals) {
    require_same_presentation(base, I);
    if (!I.contains(base)) fail(ErrorKind::InvalidArgument, "intersection base is not contained in every ideal");
  }
  const StandardBasis& B = base.lift().standard_basis();
  std::vector<Polynomial> ones(ideals.size(), Polynomial::constant(base.ring(), 1));
  std::vector<const StandardBasis*> targets;
  for (const auto& I : ideals) targets.push_back(&I.lift().standard_basis());
  KernelResult k = multiplication_kernel(B, ones, targets, true);
  return QuotientIdeal::from_lift(base.presentation(), IdealHandle::from_groebner(ideal_from_subspace(B, k.kernel)));
}

namespace {

std::vector<SparseVector> socle_kernel(const QuotientIdeal& J) {
  if (J.is_unit()) fail(ErrorKind::UnitIdeal, "socle of the zero module");
  if (!J.is_zero_dimensional()) fail(ErrorKind::NotZeroDimensional, "socle requires a zero-dimensional ideal");
  const StandardBasis& B = J.lift().standard_basis();
  const RingPtr& ring = J.ring();
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  std::vector<const StandardBasis*> targets(vars.size(), &B);
  return multiplication_kernel(B, vars, targets, true).kernel;
}

}  // namespace

std::size_t socle_dimension(const QuotientIdeal& J) { return socle_kernel(J).size(); }

Polynomial socle_generator(const QuotientIdeal& J) {
  std::vector<SparseVector> k = socle_kernel(J);
  if (!J.is_m_primary()) fail(ErrorKind::NotMPrimary, "socle generator requires an m-primary ideal");
  if (k.size() != 1) {
    fail(ErrorKind::NotIrreducible, "socle has dimension " + std::to_string(k.size()));
  }
  return J.lift().standard_basis().polynomial(k[0]).monic();
}

}  // namespace frob
