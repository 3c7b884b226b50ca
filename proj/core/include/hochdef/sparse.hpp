#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hochdef/scalar.hpp"

namespace hochdef {

struct Entry {
  std::size_t index;
  Scalar value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sparse vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  // Sorts, merges duplicate indices and drops zeros.
  static SparseVector from_unsorted(std::vector<Entry> entries);
  static SparseVector from_dense(std::span<const Scalar> dense);
  static SparseVector unit(std::size_t index, Scalar value = Scalar(1));

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Entry& front() const { return entries_.front(); }

  Scalar at(std::size_t index) const;
  bool contains(std::size_t index) const;
  std::vector<Scalar> to_dense(std::size_t dimension) const;

  // this += factor * other
  void add_scaled(const SparseVector& other, const Scalar& factor);
  void scale(const Scalar& factor);
  SparseVector scaled(const Scalar& factor) const;
  Scalar dot(std::span<const Scalar> dense) const;

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  friend SparseVector operator+(SparseVector lhs, const SparseVector& rhs) { return lhs += rhs; }
  friend SparseVector operator-(SparseVector lhs, const SparseVector& rhs) { return lhs -= rhs; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

  // Appends an entry; index must exceed the current last index and value must be nonzero.
  void push_back(std::size_t index, Scalar value);

 private:
  std::vector<Entry> entries_;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

// Row-major sparse matrix over the rationals. Immutable after construction.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols);
  SparseMatrix(std::size_t cols, std::vector<SparseVector> rows);

  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& dense);
  // Columns given as sparse vectors of length `rows`.
  static SparseMatrix from_columns(std::size_t rows, std::span<const SparseVector> columns);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<SparseVector>& row_vectors() const { return rows_; }
  std::size_t nonzeros() const;
  Scalar at(std::size_t r, std::size_t c) const { return rows_[r].at(c); }

  std::vector<Scalar> multiply(std::span<const Scalar> x) const;
  SparseVector multiply(const SparseVector& x) const;
  SparseMatrix transpose() const;

 private:
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

}  // namespace hochdef
