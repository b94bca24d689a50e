#include "frob/presentation.hpp"

#include "frob/errors.hpp"
#include "frob/quotient.hpp"

namespace frob {

PresentationPtr RingPresentation::create(RingPtr ambient, std::vector<Polynomial> relations, GbBudget budget) {
  std::shared_ptr<RingPresentation> r(new RingPresentation());
  r->ambient_ = ambient;
  r->budget_ = budget;
  r->q_ = IdealHandle(std::move(ambient), std::move(relations), budget);
  if (r->q_.is_unit()) fail(ErrorKind::UnitIdeal, "defining ideal is the unit ideal");
  r->dim_ = krull_dimension(r->q_);
  return r;
}

QuotientIdeal RingPresentation::maximal_ideal() const {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < nvars(); ++i) vars.push_back(Polynomial::variable(ambient_, i));
  return QuotientIdeal(shared_from_this(), std::move(vars));
}

QuotientIdeal RingPresentation::unit_ideal() const {
  return QuotientIdeal(shared_from_this(), {Polynomial::constant(ambient_, 1)});
}

QuotientIdeal RingPresentation::zero_ideal() const { return QuotientIdeal(shared_from_this(), {}); }

PresentationPtr RingPresentation::with_order(const MonomialOrder& order) const {
  RingPtr ring = frob::with_order(ambient_, order);
  std::vector<Polynomial> rel;
  for (const auto& g : relations()) rel.push_back(g.in_ring(ring));
  return create(ring, std::move(rel), budget_);
}

QuotientIdeal::QuotientIdeal(PresentationPtr R, std::vector<Polynomial> generators)
    : r_(std::move(R)), gens_(std::move(generators)) {
  std::vector<Polynomial> all = r_->defining_ideal().gb().elements();
  for (const auto& g : gens_) {
    if (!same_ring(g.ring(), r_->ambient())) fail(ErrorKind::RingMismatch, "generator from a different ring");
    all.push_back(g);
  }
  lift_ = IdealHandle(r_->ambient(), std::move(all), r_->budget());
}

QuotientIdeal QuotientIdeal::from_lift(PresentationPtr R, IdealHandle lift) {
  if (!same_ring(lift.ring(), R->ambient())) fail(ErrorKind::RingMismatch, "lift from a different ring");
  QuotientIdeal I;
  I.r_ = std::move(R);
  I.lift_ = std::move(lift);
  for (const auto& g : I.lift_.gb().elements())
    if (!I.r_->defining_ideal().contains(g)) I.gens_.push_back(g);
  return I;
}

bool QuotientIdeal::is_zero() const { return lift_ == r_->defining_ideal(); }

namespace {

bool homogeneous(const Polynomial& f) {
  for (const auto& t : f.terms())
    if (t.mono.degree() != f.leading_monomial().degree()) return false;
  return true;
}

}  // namespace

bool QuotientIdeal::is_m_primary() const {
  if (is_unit() || !is_zero_dimensional()) return false;
  const GroebnerBasis& gb = lift_.gb();
  bool graded = true;
  for (const auto& g : gb.elements()) graded = graded && homogeneous(g);
  if (graded) return true;
  // x_i is nilpotent on S/I iff x_i^L lies in I for L = dim S/I.
  const std::size_t L = lift_.standard_basis().dimension();
  const RingPtr& ring = lift_.ring();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Polynomial result = Polynomial::constant(ring, 1);
    Polynomial base = normal_form(Polynomial::variable(ring, i), gb);
    for (std::size_t n = L; n > 0 && !result.is_zero(); n >>= 1) {
      if (n & 1) result = normal_form(result * base, gb);
      if (n > 1) base = normal_form(base * base, gb);
    }
    if (!result.is_zero()) return false;
  }
  return true;
}

std::string QuotientIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

}  // namespace frob
