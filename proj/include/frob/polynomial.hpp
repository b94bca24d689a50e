#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "frob/field.hpp"
#include "frob/monomial.hpp"

namespace frob {

/// F_p[x_1..x_n] with a fixed monomial order. Shared immutably between
/// polynomials via RingPtr.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const MonomialOrder& order() const noexcept { return order_; }

  /// Index of a variable name, or -1.
  int variable_index(std::string_view name) const noexcept;

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return order_.compare(a, b, variables_.size());
  }

  std::string format(const Monomial& m) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::grevlex());
/// Same field and variables, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

struct Term {
  Coeff coeff;
  Monomial mono;
};

/// Sparse polynomial; terms strictly descending in the ring order with
/// nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Coeff c, const Monomial& m);
  /// Sorts and combines arbitrary terms; zero coefficients are dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` already satisfy the class invariant.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  std::int64_t total_degree() const noexcept;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(Coeff c, const Monomial& m) const;
  /// Same terms, re-sorted for another ring with identical variables.
  Polynomial in_ring(const RingPtr& ring) const;

  /// Strict descending order, no zero coefficients, coefficients reduced.
  bool check_invariants() const;
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f);
Polynomial operator*(const Polynomial& f, const Polynomial& g);

/// f - c * m * g, the reduction step.
Polynomial sub_mul(const Polynomial& f, Coeff c, const Monomial& m, const Polynomial& g);

Polynomial pow(const Polynomial& f, std::uint64_t n);

/// f^(p^e), computed termwise: c^(p^e) = c in F_p, so each term (c, m) maps
/// to (c, m * p^e). Throws ExponentOverflow.
Polynomial frobenius_power(const Polynomial& f, unsigned e);

/// p^e as a checked 64-bit integer; throws ExponentOverflow past 2^62.
std::int64_t prime_power(std::uint32_t p, unsigned e);

}  // namespace frob
