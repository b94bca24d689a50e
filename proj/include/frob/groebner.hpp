#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frob/polynomial.hpp"

namespace frob {

using BigInt = boost::multiprecision::cpp_int;

/// Limits for one Gröbner computation. Zero disables a limit.
/// max_reductions counts single division steps across all S-pair reductions.
struct GbBudget {
  std::uint64_t max_reductions = 1'000'000;
  std::uint64_t max_pairs = 0;
  double max_seconds = 0.0;
};

struct GbStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t reductions = 0;  // division steps
};

/// Reduced Gröbner basis: monic, auto-reduced, sorted ascending by leading
/// monomial in the ring's order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, GbStats stats = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GbStats& stats() const noexcept { return stats_; }

  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  bool is_unit_ideal() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }
  bool is_monomial_ideal() const noexcept;
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  GbStats stats_;
};

/// Buchberger's algorithm with normal pair selection and Gebauer–Möller
/// pair elimination. Throws BudgetExceeded.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const GbBudget& budget = {});
/// Computes in a copy of the generators' ring carrying `order`.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GbBudget& budget = {});

/// Full reduction: no term of the result is divisible by a leading monomial of `gb`.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> reducers);

class StandardBasis;

/// Generators of an ideal of S plus a lazily computed reduced Gröbner basis.
/// Copies share state; the basis is computed at most once even under
/// concurrent access.
class IdealHandle {
 public:
  IdealHandle() = default;
  IdealHandle(RingPtr ring, std::vector<Polynomial> generators, GbBudget budget = {});
  /// Handle whose basis is already known.
  static IdealHandle from_groebner(GroebnerBasis gb);

  const RingPtr& ring() const noexcept;
  const std::vector<Polynomial>& generators() const noexcept;
  const GroebnerBasis& gb() const;
  bool has_gb() const noexcept;

  bool contains(const Polynomial& f) const;
  bool contains(const IdealHandle& other) const;
  bool is_unit() const { return gb().is_unit_ideal(); }
  bool is_zero_dimensional() const;

  /// Standard-monomial basis of S/I. Throws NotZeroDimensional.
  const StandardBasis& standard_basis() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

bool operator==(const IdealHandle& a, const IdealHandle& b);

/// True when every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& gb);

/// dim_k S/I as the number of standard monomials. Throws NotZeroDimensional.
BigInt colength(const IdealHandle& ideal);
BigInt colength(const GroebnerBasis& gb);

/// Largest set of variables independent modulo the leading-term ideal.
/// Throws UnitIdeal.
int krull_dimension(const IdealHandle& ideal);
int krull_dimension(const GroebnerBasis& gb);

}  // namespace frob
