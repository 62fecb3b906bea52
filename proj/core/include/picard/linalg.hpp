#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "picard/rational.hpp"

namespace picard {

/// A sparse column over Q: row index -> nonzero entry.
using SparseCol = std::map<int64_t, Rational>;

/// y += a * x, dropping entries that cancel.
void axpy(SparseCol& y, const Rational& a, const SparseCol& x);

/// Incremental Gaussian elimination over Q.  Pivots on the smallest row
/// index of each reduced column, so results are deterministic for a fixed
/// insertion order.
class SpanBuilder {
 public:
  /// Reduces col against the current span; registers a new pivot if a
  /// nonzero remainder survives.  Returns true iff the rank increased.
  bool add(SparseCol col);

  /// True iff col lies in the span of the columns added so far.
  bool contains(SparseCol col) const;

  int64_t rank() const { return rank_; }

 private:
  SparseCol reduce(SparseCol col) const;
  std::map<int64_t, SparseCol> pivots_;  // pivot row -> normalized column
  int64_t rank_ = 0;
};

int64_t rank_of(const std::vector<SparseCol>& cols);

/// Basis of the kernel of the matrix with the given columns: coefficient
/// vectors c (indexed by column number) with sum_i c_i * cols[i] = 0.
std::vector<SparseCol> kernel_basis(const std::vector<SparseCol>& cols);

}  // namespace picard
