#ifndef SVIR_LINALG_HPP
#define SVIR_LINALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "svir/rational.hpp"

namespace svir {

/// Sparse exact row: (column, coefficient) pairs, columns strictly
/// increasing, no zero coefficients.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow sparse_add(const SparseRow& a, const SparseRow& b);
/// a + scale·b.
SparseRow sparse_axpy(const SparseRow& a, const Rational& scale, const SparseRow& b);
void sparse_scale(SparseRow& a, const Rational& scale);

/// Incremental row echelon over Q with leading entries normalized to 1.
/// Pivot columns are always the leftmost nonzero column of a reduced row,
/// so for a fixed insertion order the result is deterministic; a final
/// back-substitution pass (rref) makes it canonical for the row space.
class RowEchelon {
  public:
    /// Reduces `row` against the current pivots and, if a nonzero residual
    /// remains, installs it as a new monic pivot row. Returns the residual
    /// (empty when the input was already in the span).
    SparseRow insert(SparseRow row);

    /// Reduction of `row` against the current pivots, without inserting.
    SparseRow reduce(SparseRow row) const;

    /// True iff row lies in the current row space.
    bool contains(const SparseRow& row) const { return reduce(row).empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    /// Rows sorted by pivot column.
    std::vector<SparseRow> sorted_rows() const;
    const std::vector<SparseRow>& rows() const { return rows_; }

  private:
    std::vector<SparseRow> rows_;  // insertion order, monic
    std::map<int, int> pivot_index_;  // pivot column -> index into rows_
};

/// Fully reduced canonical form of the span of `rows`: monic pivots, pivot
/// columns eliminated from all other rows, rows sorted by pivot column.
/// This is the unique reduced echelon basis of the row space.
std::vector<SparseRow> reduced_row_echelon(const std::vector<SparseRow>& rows);

/// Coefficient vectors c (over the row index) spanning the left null space
/// {c : Σ c_i · rows_i = 0}, computed by eliminating [rows | I] and
/// collecting the identity parts of the rows whose data part vanished.
/// Returned in canonical reduced echelon form over the row indices.
std::vector<SparseRow> left_nullspace(const std::vector<SparseRow>& rows);

}  // namespace svir

#endif  // SVIR_LINALG_HPP
