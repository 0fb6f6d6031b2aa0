#ifndef MATWB_MATRIX_HPP
#define MATWB_MATRIX_HPP

#include "matwb/ratfun.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace matwb {

struct PMatrixWitness {
  std::vector<std::string> rows, cols;
  RatFun det;
};

struct PMatrixCertificate {
  bool verdict = false;
  std::optional<PMatrixWitness> witness;
  std::uint64_t checkedCount = 0;
};

// Matrix with ordered, disjoint row/column label sets over a partial field.
// Values are immutable; pivot/scale/submatrix return new matrices.
class LabeledMatrix {
public:
  LabeledMatrix(PartialField field, std::vector<std::string> rowLabels,
                std::vector<std::string> colLabels, std::vector<std::vector<RatFun>> entries);

  static LabeledMatrix identity(PartialField field, const std::vector<std::string>& labels);

  static LabeledMatrix fromStrings(PartialField field, std::vector<std::string> rowLabels,
                                   std::vector<std::string> colLabels,
                                   const std::vector<std::vector<std::string>>& entries);

  const PartialField& field() const { return field_; }
  size_t nRows() const { return rows_.size(); }
  size_t nCols() const { return cols_.size(); }
  const std::vector<std::string>& rowLabels() const { return rows_; }
  const std::vector<std::string>& colLabels() const { return cols_; }

  const RatFun& at(size_t i, size_t j) const { return entries_[i * cols_.size() + j]; }
  const RatFun& at(const std::string& row, const std::string& col) const {
    return at(rowIndex(row), colIndex(col));
  }
  size_t rowIndex(const std::string& label) const;
  size_t colIndex(const std::string& label) const;
  bool hasRow(const std::string& label) const { return rowPos_.count(label) > 0; }
  bool hasCol(const std::string& label) const { return colPos_.count(label) > 0; }

  // Subsets are treated as sets; the result keeps this matrix's label order.
  LabeledMatrix submatrix(const std::vector<std::string>& rowSubset,
                          const std::vector<std::string>& colSubset) const;

  // Row/column permutations (same label sets, new order).
  LabeledMatrix reordered(const std::vector<std::string>& rowOrder,
                          const std::vector<std::string>& colOrder) const;

  // -A^T with row/column labels swapped.
  LabeledMatrix transposeNegate() const;

  // Exact determinant: cofactor expansion through 3x3, fraction-free
  // Bareiss elimination above that (per-column denominators cleared first).
  RatFun det() const;

  // det via the pivot identity (-1)^(pos(x)+pos(y)) A_xy det(A^xy[X\x, Y\y]),
  // positions 1-based within the ordered label sets.
  RatFun detViaPivot(const std::string& x, const std::string& y) const;

  // Basis-exchange pivot on (x, y); the incoming label takes the outgoing
  // label's ordinal slot.
  LabeledMatrix pivot(const std::string& x, const std::string& y) const;

  LabeledMatrix scaleRow(const std::string& row, const RatFun& c) const;
  LabeledMatrix scaleCol(const std::string& col, const RatFun& c) const;

  // Scans every square submatrix in ascending size, lexicographic within a
  // size, and reports the first determinant outside G union {0}.
  PMatrixCertificate isPMatrix() const;

  bool operator==(const LabeledMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  bool operator!=(const LabeledMatrix& o) const { return !(*this == o); }

  // Field-aware entry arithmetic (modular for finite fields).
  RatFun fAdd(const RatFun& x, const RatFun& y) const;
  RatFun fSub(const RatFun& x, const RatFun& y) const;
  RatFun fMul(const RatFun& x, const RatFun& y) const;
  RatFun fInv(const RatFun& x) const;
  RatFun fNeg(const RatFun& x) const;
  RatFun fCanon(const RatFun& x) const;

private:
  LabeledMatrix() = default;
  void buildIndex();

  PartialField field_;
  std::vector<std::string> rows_, cols_;
  std::vector<RatFun> entries_;  // row-major
  std::map<std::string, size_t> rowPos_, colPos_;
};

}  // namespace matwb

#endif
