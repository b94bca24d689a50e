#include "frob/polynomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "frob/errors.hpp"

namespace frob {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(order) {
  if (variables_.empty()) fail(ErrorKind::InvalidArgument, "a polynomial ring needs at least one variable");
  if (variables_.size() > kMaxVars) {
    fail(ErrorKind::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) fail(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(v).second) fail(ErrorKind::InvalidArgument, "duplicate variable '" + v + "'");
  }
}

int PolyRing::variable_index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(variables), order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return std::make_shared<const PolyRing>(ring->field(), ring->variables(), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) fail(ErrorKind::RingMismatch, "operands live in different rings");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Coeff r = ring->field().reduce(c);
  Polynomial f(std::move(ring));
  if (r != 0) f.terms_.push_back({r, Monomial{}});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) fail(ErrorKind::InvalidArgument, "variable index out of range");
  return term(std::move(ring), 1, Monomial::variable(index));
}

Polynomial Polynomial::term(RingPtr ring, Coeff c, const Monomial& m) {
  c = ring->field().reduce(c);
  Polynomial f(std::move(ring));
  if (c != 0) f.terms_.push_back({c, m});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& R = *ring;
  std::sort(terms.begin(), terms.end(),
            [&R](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = R.field().reduce(t.coeff);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = R.field().add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({c, t.mono});
    }
  }
  return from_sorted_terms(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

std::int64_t Polynomial::total_degree() const noexcept {
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return terms_.empty() ? -1 : d;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  const PrimeField& F = ring_->field();
  c = F.reduce(c);
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out(terms_);
  for (auto& t : out) t.coeff = F.mul(t.coeff, c);
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(Coeff c, const Monomial& m) const {
  const PrimeField& F = ring_->field();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({F.mul(t.coeff, c), t.mono * m});
  // Multiplication by a monomial preserves any monomial order.
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
  if (ring->variables() != ring_->variables() || !(ring->field() == ring_->field())) {
    fail(ErrorKind::RingMismatch, "in_ring requires identical variables and field");
  }
  std::vector<Term> copy(terms_);
  return from_terms(ring, std::move(copy));
}

bool Polynomial::check_invariants() const {
  const std::uint32_t p = ring_ ? ring_->characteristic() : 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0 || terms_[i].coeff >= p) return false;
    for (std::size_t v = ring_->nvars(); v < kMaxVars; ++v)
      if (terms_[i].mono[v] != 0) return false;
    if (i > 0 && ring_->compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const std::uint32_t p = ring_->characteristic();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool negative = t.coeff > p / 2 && p > 2;
    std::uint32_t magnitude = negative ? p - t.coeff : t.coeff;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + '*';
      out += ring_->format(t.mono);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

Polynomial sub_mul(const Polynomial& f, Coeff c, const Monomial& m, const Polynomial& g) {
  const RingPtr& ring = f.ring() ? f.ring() : g.ring();
  const PolyRing& R = *ring;
  const PrimeField& F = R.field();
  Coeff neg_c = F.neg(F.reduce(c));
  auto ft = f.terms();
  auto gt = g.terms();
  std::vector<Term> out;
  out.reserve(ft.size() + gt.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < ft.size() || j < gt.size()) {
    if (j < gt.size() && !have_gm) {
      gm = gt[j].mono * m;
      have_gm = true;
    }
    int cmp;
    if (i == ft.size()) cmp = -1;
    else if (j == gt.size()) cmp = 1;
    else cmp = R.compare(ft[i].mono, gm);
    if (cmp > 0) {
      out.push_back(ft[i++]);
    } else if (cmp < 0) {
      Coeff v = F.mul(gt[j].coeff, neg_c);
      if (v != 0) out.push_back({v, gm});
      ++j;
      have_gm = false;
    } else {
      Coeff v = F.add(ft[i].coeff, F.mul(gt[j].coeff, neg_c));
      if (v != 0) out.push_back({v, gm});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return Polynomial::from_sorted_terms(ring, std::move(out));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  require_same(f, g);
  return sub_mul(f, f.ring()->field().neg(1), Monomial{}, g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) return f;
  if (f.is_zero()) return -g;
  require_same(f, g);
  return sub_mul(f, 1, Monomial{}, g);
}

Polynomial operator-(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.ring()->field().neg(1));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.ring() && g.ring()) require_same(f, g);
  const RingPtr& ring = f.ring() ? f.ring() : g.ring();
  if (f.is_zero() || g.is_zero()) return Polynomial(ring);
  const Polynomial& small = f.size() <= g.size() ? f : g;
  const Polynomial& large = f.size() <= g.size() ? g : f;
  if (small.size() == 1) return large.mul_term(small.leading_coeff(), small.leading_monomial());
  std::vector<Term> all;
  all.reserve(f.size() * g.size());
  const PrimeField& F = ring->field();
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) all.push_back({F.mul(a.coeff, b.coeff), a.mono * b.mono});
  return Polynomial::from_terms(ring, std::move(all));
}

Polynomial pow(const Polynomial& f, std::uint64_t n) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::int64_t prime_power(std::uint32_t p, unsigned e) {
  std::int64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::int64_t{1} << 62) / p) fail(ErrorKind::ExponentOverflow, "p^e exceeds 2^62");
    q *= p;
  }
  return q;
}

Polynomial frobenius_power(const Polynomial& f, unsigned e) {
  if (e == 0 || f.is_zero()) return f;
  std::int64_t q = prime_power(f.ring()->characteristic(), e);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coeff, scale_exponents(t.mono, q)});
  // m -> m^q is strictly monotone for every monomial order in use.
  return Polynomial::from_sorted_terms(f.ring(), std::move(out));
}

}  // namespace frob
