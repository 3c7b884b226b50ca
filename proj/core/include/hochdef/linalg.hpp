#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hochdef/scalar.hpp"
#include "hochdef/sparse.hpp"

namespace hochdef::linalg {

// Exact rank over Q.
std::size_t rank(const SparseMatrix& m);

// Basis of the right null space. One vector per non-pivot column, in increasing column
// order; each has a 1 in its own free column and 0 in every other free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

// Some x with m * x = b, or nullopt when the system is inconsistent. Free variables are 0.
// Throws DimensionMismatch when b.size() != m.rows().
std::optional<std::vector<Scalar>> solve(const SparseMatrix& m, std::span<const Scalar> b);
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);

// Result of sparse Gaussian elimination: pivot rows in selection order. Each pivot row is
// frozen at the moment it was selected, so it contains no earlier pivot column.
struct Elimination {
  std::size_t cols = 0;
  std::vector<SparseVector> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<Scalar> pivot_rhs;
  bool consistent = true;

  std::size_t rank() const { return pivot_cols.size(); }
};

// Markowitz-pivoted elimination. Among the few sparsest active columns, the entry of
// minimal (row_nnz - 1) * (col_nnz - 1) is chosen; ties go to the smallest column, then the
// smallest row. The pivot sequence is fully deterministic.
Elimination eliminate(const SparseMatrix& m, std::span<const Scalar> rhs = {});

// Incrementally maintained reduced row echelon form of a subspace of Q^dim. The pivot of a
// row is its smallest column index; rows carry a 1 at their pivot and 0 at all other pivots.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }

  // Canonical representative of v modulo the space (zero at every pivot column).
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  // Returns true when v was independent of the current rows.
  bool insert(const SparseVector& v);

  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  std::size_t dimension_;
  std::map<std::size_t, SparseVector> rows_;
};

// Small dense matrix, used for Gram matrices and Vandermonde systems.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Scalar> row(std::size_t r) const;

  DenseMatrix transpose() const;
  std::vector<Scalar> multiply(std::span<const Scalar> x) const;
  // Throws DimensionMismatch when singular or not square.
  DenseMatrix inverse() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// x^T M y
Scalar bilinear(std::span<const Scalar> x, const DenseMatrix& m, std::span<const Scalar> y);

}  // namespace hochdef::linalg
