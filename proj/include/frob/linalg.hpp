#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frob/field.hpp"

namespace frob {

/// Sparse vector over F_p, entries sorted by ascending index, no zeros.
struct SparseVector {
  std::vector<std::uint32_t> index;
  std::vector<Coeff> value;

  bool empty() const noexcept { return index.empty(); }
  std::size_t nnz() const noexcept { return index.size(); }
  static SparseVector unit(std::uint32_t i) { return {{i}, {1}}; }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

/// Incremental row echelon form over F_p. Each stored row is monic at its
/// pivot, the largest column index it touches. Optionally tracks, for every
/// inserted row, a "tag" vector recording which combination of inputs it
/// came from; inputs that reduce to zero yield kernel relations.
class EchelonForm {
 public:
  EchelonForm(PrimeField field, std::size_t ncols, std::size_t ntags = 0);

  /// Inserts a row; returns true when it was independent of earlier rows.
  bool insert(const SparseVector& row, const SparseVector& tag = {});

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ncols() const noexcept { return ncols_; }

  /// Tags of inserted rows that reduced to zero (a kernel basis when every
  /// input row was tagged with a distinct unit vector).
  const std::vector<SparseVector>& relations() const noexcept { return relations_; }

  /// Back-substitutes so every pivot column is zero outside its own row.
  void make_reduced();

  /// v minus its projection onto the row space along pivot columns; the
  /// result is zero at every pivot column once the form is reduced.
  SparseVector reduce(const SparseVector& v) const;

  bool is_pivot(std::uint32_t col) const noexcept { return pivot_row_[col] >= 0; }
  /// Rows ordered by ascending pivot.
  std::vector<SparseVector> rows() const;

 private:
  struct Row {
    SparseVector data;
    SparseVector tag;
  };

  PrimeField field_;
  std::size_t ncols_;
  std::size_t ntags_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<SparseVector> relations_;
};

}  // namespace frob
