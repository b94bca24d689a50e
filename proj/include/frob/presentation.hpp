#pragma once

#include <memory>
#include <vector>

#include "frob/groebner.hpp"

namespace frob {

class QuotientIdeal;

/// R = S/Q with S = F_p[x_1..x_n] and m = (x_1..x_n) + Q.
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
 public:
  /// Throws UnitIdeal when Q = S.
  static std::shared_ptr<const RingPresentation> create(RingPtr ambient, std::vector<Polynomial> relations,
                                                        GbBudget budget = {});

  const RingPtr& ambient() const noexcept { return ambient_; }
  const IdealHandle& defining_ideal() const noexcept { return q_; }
  const std::vector<Polynomial>& relations() const noexcept { return q_.generators(); }
  std::uint32_t characteristic() const noexcept { return ambient_->characteristic(); }
  std::size_t nvars() const noexcept { return ambient_->nvars(); }
  /// Krull dimension of S/Q.
  int dimension() const noexcept { return dim_; }
  const GbBudget& budget() const noexcept { return budget_; }
  bool is_polynomial_ring() const { return q_.gb().is_zero_ideal(); }
  /// True when Q is principal (its reduced basis has one element).
  bool is_hypersurface() const { return q_.gb().size() == 1; }

  QuotientIdeal maximal_ideal() const;
  QuotientIdeal unit_ideal() const;
  QuotientIdeal zero_ideal() const;

  /// Same presentation of the same ambient ring with a different order.
  std::shared_ptr<const RingPresentation> with_order(const MonomialOrder& order) const;

 private:
  RingPresentation() = default;

  RingPtr ambient_;
  IdealHandle q_;
  int dim_ = 0;
  GbBudget budget_;
};

using PresentationPtr = std::shared_ptr<const RingPresentation>;

/// An ideal of R, stored as its lift to S (which always contains Q).
class QuotientIdeal {
 public:
  QuotientIdeal() = default;
  /// Ideal of R generated by the images of `generators`.
  QuotientIdeal(PresentationPtr R, std::vector<Polynomial> generators);
  /// Wraps an S-ideal already known to contain Q.
  static QuotientIdeal from_lift(PresentationPtr R, IdealHandle lift);

  const PresentationPtr& presentation() const noexcept { return r_; }
  const RingPtr& ring() const noexcept { return r_->ambient(); }
  const IdealHandle& lift() const noexcept { return lift_; }
  /// Generators modulo Q (for a wrapped lift: basis elements not in Q).
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  bool contains(const Polynomial& f) const { return lift_.contains(f); }
  bool contains(const QuotientIdeal& J) const { return lift_.contains(J.lift_); }
  bool is_unit() const { return lift_.is_unit(); }
  /// True for the zero ideal of R (lift equals Q).
  bool is_zero() const;
  bool is_zero_dimensional() const { return lift_.is_zero_dimensional(); }
  /// Zero-dimensional with every variable nilpotent modulo the ideal.
  bool is_m_primary() const;
  /// l_R(R/I). Throws NotZeroDimensional.
  BigInt colength() const { return frob::colength(lift_); }

  std::string to_string() const;

  friend bool operator==(const QuotientIdeal& a, const QuotientIdeal& b) { return a.lift_ == b.lift_; }

 private:
  PresentationPtr r_;
  IdealHandle lift_;
  std::vector<Polynomial> gens_;
};

}  // namespace frob
