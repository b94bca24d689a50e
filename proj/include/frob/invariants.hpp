#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frob/errors.hpp"
#include "frob/presentation.hpp"

namespace frob {

using BigRational = boost::multiprecision::cpp_rational;

enum class TableKind { HK, FSIG, RELHK, PAIR, SEQ };
std::string to_string(TableKind kind);

struct TableRow {
  unsigned e = 0;
  BigInt q;
  BigInt length;
  BigRational normalized;  // length / q^d
  unsigned t_stabilized = 0;  // chain index where the row stabilized, 0 if not a chain row
};

/// Exact per-e lengths, rows strictly increasing in e starting at e = 0.
struct InvariantTable {
  TableKind kind = TableKind::HK;
  std::uint32_t p = 0;
  int d = 0;
  std::vector<TableRow> rows;

  void add_row(unsigned e, BigInt length, unsigned t_stabilized = 0);
  bool check_invariants() const;
};

/// Two-term fit l_e = eta q^d + alpha q^(d-1) on the last two rows.
struct Estimate {
  BigRational eta;
  BigRational alpha;
  double error_bound = 0;
  double residual = 0;   // |residual at the third-last row| / q^d
  double envelope = 0;   // 2 C / p^e_last
  double range_excess = 0;  // distance of eta outside [min, max] of the samples
  unsigned e_first = 0;
  unsigned e_last = 0;
  std::string model;

  double eta_value() const { return eta.convert_to<double>(); }
  double alpha_value() const { return alpha.convert_to<double>(); }
};

/// Thrown when a table computation stops early; carries the completed rows.
class PartialTableError : public Error {
 public:
  PartialTableError(ErrorKind kind, const std::string& what, InvariantTable partial)
      : Error(kind, what), partial_(std::move(partial)) {}
  const InvariantTable& partial() const noexcept { return partial_; }

 private:
  InvariantTable partial_;
};

/// Throws UnitIdeal, NotZeroDimensional or NotMPrimary.
void require_m_primary(const QuotientIdeal& I, const std::string& what);

/// l(R/I^[q]) for e = 0..e_max. Rows are independent and computed on up to
/// `threads` threads.
InvariantTable hk_function(const QuotientIdeal& I, unsigned e_max, unsigned threads = 1);

/// Throws InsufficientSamples for fewer than three rows.
Estimate hk_estimate(const InvariantTable& table);
Estimate fsig_estimate(const InvariantTable& table);

struct SOP {
  std::vector<Polynomial> elements;
  std::uint64_t seed = 0;
};

/// d elements whose sum with Q is m-primary. Seed 0 first tries subsets of
/// the variables; afterwards (and for every other seed) random linear forms,
/// then random degree-2 combinations. Throws SOPNotFound.
SOP find_sop(const PresentationPtr& R, std::uint64_t seed = 0);

/// F-signature table plus the ideals I_e whose colengths form it.
struct FsigResult {
  InvariantTable table;
  std::vector<QuotientIdeal> ideals;
};

/// I_e = (J^[q] : delta^q) for J = (sop) irreducible. Throws NotGorenstein.
FsigResult fsig_function_gorenstein(const PresentationPtr& R, const SOP& sop, unsigned e_max, unsigned threads = 1);

/// J_t for t = 1, 2, ...
using ChainFn = std::function<QuotientIdeal(unsigned t)>;
/// J_t = (x_1^t, ..., x_d^t) + Q.
ChainFn parameter_power_chain(const PresentationPtr& R, const SOP& sop);

/// For each e, increases t until l(R/(J_t^[q] : delta_t^q)) agrees for two
/// consecutive t. Throws PartialTableError(ChainExhausted) when t_max is
/// reached first.
FsigResult fsig_function_chain(const PresentationPtr& R, const ChainFn& chain, unsigned t_max, unsigned e_max,
                               unsigned threads = 1);

/// l(R/I^[q]) - l(R/(I,x)^[q]), checked against l(R/(I^[q] : x^q)).
/// Throws IdentityViolation when the two disagree.
InvariantTable relative_hk(const QuotientIdeal& I, const Polynomial& x, unsigned e_max, unsigned threads = 1);

enum class TCStatus { InIdeal, InClosureLikely, NotInClosure, Inconclusive };
std::string to_string(TCStatus status);

struct TCVerdict {
  TCStatus status = TCStatus::Inconclusive;
  std::optional<InvariantTable> table;
  std::optional<Estimate> estimate;
  /// Intersection of (I^[q] : x^q) over e <= e_max.
  std::optional<QuotientIdeal> multiplier;
  bool multiplier_stabilized = false;
  bool budget_exceeded = false;
  std::string reason;
};

TCVerdict tc_membership(const QuotientIdeal& I, const Polynomial& x, unsigned e_max, double tau = 1e-3,
                        unsigned threads = 1);

struct SplittingPrimeResult {
  QuotientIdeal ideal;
  bool stabilized = false;
  int n_est = 0;
  Estimate rf;
};

/// Estimates the splitting prime from I_0..I_E: Q plus the basis elements of
/// I_E of degree below p^(E-1). The flag compares with the same construction
/// at E-1. Throws NotFPure when a_1 = 0, InsufficientSamples when E < 2.
SplittingPrimeResult splitting_prime_probe(const FsigResult& fsig);

struct SequenceResult {
  InvariantTable table;
  Estimate estimate;
  QuotientIdeal intersection;  // of I_e over e <= e_max
  bool intersection_stabilized = false;  // same intersection at e_max - 1
};

/// Table and limit estimate for a user sequence I_0..I_{e_max}. Throws
/// HypothesisViolation when m^[q] is not contained in I_e.
SequenceResult sequence_limit(const PresentationPtr& R, const std::function<QuotientIdeal(unsigned e)>& seq,
                              unsigned e_max, std::optional<int> d_override = std::nullopt, unsigned threads = 1);

/// Optional ideal A_e; the chain colon becomes (J_t^[q] : A_e * delta_t^q).
using ColonTwist = std::function<std::optional<QuotientIdeal>(unsigned e)>;
/// Shared engine of the chain and pair tables.
FsigResult chain_colon_table(TableKind kind, const PresentationPtr& R, const ChainFn& chain, unsigned t_max,
                             unsigned e_max, unsigned threads, const ColonTwist& twist);

/// l_S(S/((m^[q] :_S f^(q-1)) + (f))) for R = S/(f). Throws NotHypersurface.
InvariantTable fedder_hypersurface_oracle(const PresentationPtr& R, unsigned e_max, unsigned threads = 1);

}  // namespace frob
