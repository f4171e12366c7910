#pragma once

#include <optional>
#include <vector>

#include "jsuper/rational.hpp"

namespace jsuper {

using QVec = std::vector<Rat>;

/*
 * Incremental exact row space over the rationals.  Rows are kept as
 * primitive integer vectors in fully reduced echelon form, and every stored
 * row remembers its rational combination over the raw vectors inserted so
 * far, so membership answers come with replayable coefficients.
 */
class RowSpan {
 public:
  explicit RowSpan(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // true if v was independent of the span (and is now part of it)
  bool insert(const QVec& v);

  bool contains(const QVec& v) const;

  // coefficients over the inserted raw vectors, in insertion order
  std::optional<QVec> express(const QVec& v) const;

  // some y with y . r = 0 for every row r and y . v != 0; nullopt iff v is
  // in the span
  std::optional<QVec> orthogonal_witness(const QVec& v) const;

 private:
  struct Row {
    std::vector<BigInt> a;
    QVec combo;  // stored row = sum combo[k] * raw[k]
    int pivot;
  };

  int cols_;
  int raw_count_ = 0;
  std::vector<Row> rows_;

  // remainder of v after elimination, plus its coefficients over rows_
  std::pair<QVec, QVec> reduce(const QVec& v) const;
};

struct LinearSolveResult {
  bool feasible = false;
  QVec solution;  // over the columns, when feasible
  QVec farkas;    // y with y.col = 0 for all columns, y.rhs != 0, otherwise
};

// solve  sum_j x_j col_j = rhs  exactly; free variables are set to zero
LinearSolveResult solve_linear(const std::vector<QVec>& columns, const QVec& rhs);

}  // namespace jsuper
