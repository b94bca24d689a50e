#include "frob/quotient.hpp"

#include <algorithm>
#include <unordered_set>

#include "frob/errors.hpp"

namespace frob {

namespace {

void enumerate(std::size_t k, std::size_t n, Monomial& current, const std::vector<Monomial>& lms,
               std::vector<Monomial>& out) {
  if (k == n) {
    for (const auto& g : lms)
      if (g.divides(current, n)) return;
    out.push_back(current);
    return;
  }
  for (std::int32_t a = 0;; ++a) {
    current.set(k, a);
    // Once the prefix alone is divisible, every larger exponent is too.
    bool dead = false;
    for (const auto& g : lms) {
      bool prefix_only = true;
      for (std::size_t i = k + 1; i < n && prefix_only; ++i) prefix_only = g[i] == 0;
      if (prefix_only && g.divides(current, n)) {
        dead = true;
        break;
      }
    }
    if (dead) break;
    enumerate(k + 1, n, current, lms, out);
  }
  current.set(k, 0);
}

}  // namespace

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return {};
  if (!is_zero_dimensional(gb)) {
    fail(ErrorKind::NotZeroDimensional, "standard monomials of a positive-dimensional ideal");
  }
  const std::size_t n = gb.ring()->nvars();
  std::vector<Monomial> lms = gb.leading_monomials();
  std::vector<Monomial> out;
  Monomial current;
  enumerate(0, n, current, lms, out);
  const PolyRing& R = *gb.ring();
  std::sort(out.begin(), out.end(), [&R](const Monomial& a, const Monomial& b) { return R.compare(a, b) < 0; });
  return out;
}

StandardBasis::StandardBasis(GroebnerBasis gb) : gb_(std::move(gb)), monomials_(standard_monomials(gb_)) {
  index_.reserve(monomials_.size());
  for (std::uint32_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::int64_t StandardBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

SparseVector StandardBasis::coordinates(const Polynomial& f) const {
  Polynomial r = normal_form(f, gb_);
  std::vector<std::pair<std::uint32_t, Coeff>> entries;
  entries.reserve(r.size());
  for (const auto& t : r.terms()) {
    std::int64_t i = index_of(t.mono);
    if (i < 0) fail(ErrorKind::IdentityViolation, "normal form left a non-standard monomial");
    entries.emplace_back(static_cast<std::uint32_t>(i), t.coeff);
  }
  // Terms are descending in the order, indices ascend with the order.
  std::reverse(entries.begin(), entries.end());
  SparseVector v;
  v.index.reserve(entries.size());
  v.value.reserve(entries.size());
  for (auto& [i, c] : entries) {
    v.index.push_back(i);
    v.value.push_back(c);
  }
  return v;
}

Polynomial StandardBasis::polynomial(const SparseVector& v) const {
  std::vector<Term> terms;
  terms.reserve(v.nnz());
  for (std::size_t k = v.nnz(); k-- > 0;) terms.push_back({v.value[k], monomials_[v.index[k]]});
  return Polynomial::from_sorted_terms(ring(), std::move(terms));
}

GroebnerBasis ideal_from_subspace(const StandardBasis& base, std::span<const SparseVector> subspace) {
  const RingPtr& ring = base.ring();
  const std::size_t n = ring->nvars();
  const std::size_t dim = base.dimension();
  EchelonForm echelon(ring->field(), dim);
  for (const auto& v : subspace) echelon.insert(v);
  if (echelon.rank() == 0) return base.gb();
  if (echelon.rank() == dim) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
  echelon.make_reduced();

  std::unordered_set<Monomial, MonomialHash> standard;
  for (std::uint32_t i = 0; i < dim; ++i)
    if (!echelon.is_pivot(i)) standard.insert(base.monomials()[i]);

  // Minimal generators of the new leading-term ideal lie on the border of
  // the surviving staircase.
  std::vector<Monomial> corners;
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const auto& b : standard) {
    for (std::size_t v = 0; v < n; ++v) {
      Monomial m = b * Monomial::variable(v);
      if (standard.count(m) || !seen.insert(m).second) continue;
      bool minimal = true;
      for (std::size_t w = 0; w < n && minimal; ++w) {
        if (m[w] == 0) continue;
        minimal = standard.count(divide(m, Monomial::variable(w))) > 0;
      }
      if (minimal) corners.push_back(m);
    }
  }
  std::vector<Polynomial> elements;
  elements.reserve(corners.size());
  for (const auto& m : corners) {
    SparseVector tail = echelon.reduce(base.coordinates(Polynomial::term(ring, 1, m)));
    elements.push_back(Polynomial::term(ring, 1, m) - base.polynomial(tail));
  }
  return GroebnerBasis(ring, std::move(elements));
}

KernelResult multiplication_kernel(const StandardBasis& base, std::span<const Polynomial> multipliers,
                                   std::span<const StandardBasis* const> targets, bool want_kernel) {
  if (multipliers.size() != targets.size()) fail(ErrorKind::InvalidArgument, "multiplier/target count mismatch");
  const RingPtr& ring = base.ring();
  const std::size_t dim = base.dimension();
  std::vector<std::uint32_t> offset;
  std::size_t total = 0;
  for (const StandardBasis* t : targets) {
    offset.push_back(static_cast<std::uint32_t>(total));
    total += t->dimension();
  }
  EchelonForm echelon(ring->field(), total, want_kernel ? dim : 0);
  for (std::uint32_t b = 0; b < dim; ++b) {
    SparseVector row;
    for (std::size_t j = 0; j < multipliers.size(); ++j) {
      Polynomial image = multipliers[j].mul_term(1, base.monomials()[b]);
      SparseVector part = targets[j]->coordinates(image);
      for (std::size_t k = 0; k < part.nnz(); ++k) {
        row.index.push_back(part.index[k] + offset[j]);
        row.value.push_back(part.value[k]);
      }
    }
    echelon.insert(row, want_kernel ? SparseVector::unit(b) : SparseVector{});
  }
  KernelResult result;
  result.rank = echelon.rank();
  if (want_kernel) result.kernel = echelon.relations();
  return result;
}

}  // namespace frob
