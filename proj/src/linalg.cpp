#include "frob/linalg.hpp"

#include <algorithm>
#include <queue>

#include "frob/errors.hpp"

namespace frob {

namespace {

// Dense scratch accumulator with a max-heap over touched columns so that
// elimination visits columns in descending order without scanning.
class Accumulator {
 public:
  Accumulator(const PrimeField& field, std::size_t n) : field_(field), value_(n, 0) {}

  void scatter(const SparseVector& v) {
    for (std::size_t k = 0; k < v.nnz(); ++k) add(v.index[k], v.value[k]);
  }

  void add(std::uint32_t i, Coeff c) {
    if (c == 0) return;
    if (value_[i] == 0) {
      heap_.push(i);
      touched_.push_back(i);
    }
    value_[i] = field_.add(value_[i], c);
  }

  /// this -= factor * v
  void axpy(Coeff factor, const SparseVector& v) {
    Coeff neg = field_.neg(factor);
    for (std::size_t k = 0; k < v.nnz(); ++k) add(v.index[k], field_.mul(neg, v.value[k]));
  }

  Coeff at(std::uint32_t i) const { return value_[i]; }

  /// Largest column that is currently nonzero, or -1.
  std::int64_t pop_max() {
    while (!heap_.empty()) {
      std::uint32_t c = heap_.top();
      heap_.pop();
      while (!heap_.empty() && heap_.top() == c) heap_.pop();
      if (value_[c] != 0) return c;
    }
    return -1;
  }

  /// Remaining nonzero entries scaled by `scale`, ascending; resets state.
  SparseVector drain(Coeff scale) {
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    SparseVector out;
    for (std::uint32_t i : touched_) {
      if (value_[i] != 0) {
        out.index.push_back(i);
        out.value.push_back(field_.mul(value_[i], scale));
        value_[i] = 0;
      }
    }
    touched_.clear();
    heap_ = {};
    return out;
  }

  void clear() {
    for (std::uint32_t i : touched_) value_[i] = 0;
    touched_.clear();
    heap_ = {};
  }

 private:
  const PrimeField& field_;
  std::vector<Coeff> value_;
  std::vector<std::uint32_t> touched_;
  std::priority_queue<std::uint32_t> heap_;
};

}  // namespace

EchelonForm::EchelonForm(PrimeField field, std::size_t ncols, std::size_t ntags)
    : field_(field), ncols_(ncols), ntags_(ntags), pivot_row_(ncols, -1) {}

bool EchelonForm::insert(const SparseVector& row, const SparseVector& tag) {
  Accumulator acc(field_, ncols_);
  std::optional<Accumulator> tacc;
  if (ntags_ > 0) {
    tacc.emplace(field_, ntags_);
    tacc->scatter(tag);
  }
  for (std::size_t k = 0; k < row.nnz(); ++k) {
    if (row.index[k] >= ncols_) fail(ErrorKind::InvalidArgument, "row index out of range");
  }
  acc.scatter(row);
  for (;;) {
    std::int64_t c = acc.pop_max();
    if (c < 0) break;
    Coeff lead = acc.at(static_cast<std::uint32_t>(c));
    std::int64_t r = pivot_row_[c];
    if (r >= 0) {
      acc.axpy(lead, rows_[r].data);
      if (tacc) tacc->axpy(lead, rows_[r].tag);
      continue;
    }
    Coeff scale = field_.inv(lead);
    Row fresh;
    fresh.data = acc.drain(scale);
    if (tacc) fresh.tag = tacc->drain(scale);
    pivot_row_[c] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(fresh));
    return true;
  }
  acc.clear();
  if (tacc) relations_.push_back(tacc->drain(1));
  return false;
}

void EchelonForm::make_reduced() {
  std::vector<std::uint32_t> order;
  order.reserve(rows_.size());
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_row_[c] >= 0) order.push_back(static_cast<std::uint32_t>(c));
  Accumulator acc(field_, ncols_);
  for (std::uint32_t c : order) {
    Row& row = rows_[pivot_row_[c]];
    acc.scatter(row.data);
    // The own pivot stays; every smaller pivot column is eliminated.
    std::vector<std::pair<std::uint32_t, Coeff>> kept;
    for (;;) {
      std::int64_t col = acc.pop_max();
      if (col < 0) break;
      Coeff v = acc.at(static_cast<std::uint32_t>(col));
      std::int64_t r = pivot_row_[col];
      if (col != c && r >= 0) {
        acc.axpy(v, rows_[r].data);
      } else {
        kept.emplace_back(static_cast<std::uint32_t>(col), v);
        acc.add(static_cast<std::uint32_t>(col), field_.neg(v));
      }
    }
    acc.clear();
    SparseVector out;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      out.index.push_back(it->first);
      out.value.push_back(it->second);
    }
    row.data = std::move(out);
  }
}

SparseVector EchelonForm::reduce(const SparseVector& v) const {
  Accumulator acc(field_, ncols_);
  acc.scatter(v);
  std::vector<std::pair<std::uint32_t, Coeff>> kept;
  for (;;) {
    std::int64_t col = acc.pop_max();
    if (col < 0) break;
    Coeff value = acc.at(static_cast<std::uint32_t>(col));
    std::int64_t r = pivot_row_[col];
    if (r >= 0) {
      acc.axpy(value, rows_[r].data);
    } else {
      kept.emplace_back(static_cast<std::uint32_t>(col), value);
      acc.add(static_cast<std::uint32_t>(col), field_.neg(value));
    }
  }
  acc.clear();
  SparseVector out;
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
    out.index.push_back(it->first);
    out.value.push_back(it->second);
  }
  return out;
}

std::vector<SparseVector> EchelonForm::rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(rows_[pivot_row_[c]].data);
  return out;
}

}  // namespace frob
