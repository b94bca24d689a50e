#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "frob/groebner.hpp"
#include "frob/linalg.hpp"

namespace frob {

/// The finite-dimensional algebra S/I for zero-dimensional I, with the
/// standard monomials of its reduced Gröbner basis as a vector-space basis
/// (ascending in the ring order).
class StandardBasis {
 public:
  explicit StandardBasis(GroebnerBasis gb);

  const GroebnerBasis& gb() const noexcept { return gb_; }
  const RingPtr& ring() const noexcept { return gb_.ring(); }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  /// Index of a standard monomial, or -1.
  std::int64_t index_of(const Monomial& m) const;

  /// Coordinates of NF(f) in the standard-monomial basis.
  SparseVector coordinates(const Polynomial& f) const;
  Polynomial polynomial(const SparseVector& v) const;

 private:
  GroebnerBasis gb_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

/// Enumerates the standard monomials of a zero-dimensional leading-term
/// ideal. Throws NotZeroDimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// For a subspace K of S/I (given by spanning vectors) that is closed under
/// multiplication, returns the reduced Gröbner basis of I + K.
GroebnerBasis ideal_from_subspace(const StandardBasis& base, std::span<const SparseVector> subspace);

/// Kernel of b -> (NF_{targets[0]}(m_0 b), ..., NF_{targets[k]}(m_k b)) on
/// S/I, where I = base. Used for colons (all targets equal I) and for
/// intersections (all multipliers 1). Returns the kernel vectors and the
/// rank of the map.
struct KernelResult {
  std::vector<SparseVector> kernel;
  std::size_t rank = 0;
};
KernelResult multiplication_kernel(const StandardBasis& base, std::span<const Polynomial> multipliers,
                                   std::span<const StandardBasis* const> targets, bool want_kernel);

}  // namespace frob
