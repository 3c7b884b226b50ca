#include "hochdef/sparse.hpp"

#include <algorithm>

#include "hochdef/error.hpp"

namespace hochdef {

SparseVector SparseVector::from_unsorted(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value += e.value;
    } else {
      if (!out.entries_.empty() && out.entries_.back().value.is_zero()) out.entries_.pop_back();
      out.entries_.push_back(std::move(e));
    }
  }
  if (!out.entries_.empty() && out.entries_.back().value.is_zero()) out.entries_.pop_back();
  return out;
}

SparseVector SparseVector::from_dense(std::span<const Scalar> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.entries_.push_back({i, dense[i]});
  }
  return out;
}

SparseVector SparseVector::unit(std::size_t index, Scalar value) {
  SparseVector out;
  if (!value.is_zero()) out.entries_.push_back({index, std::move(value)});
  return out;
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return Scalar(0);
}

bool SparseVector::contains(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  return it != entries_.end() && it->index == index;
}

std::vector<Scalar> SparseVector::to_dense(std::size_t dimension) const {
  std::vector<Scalar> out(dimension);
  for (const auto& e : entries_) {
    if (e.index >= dimension) throw Error(ErrorKind::DimensionMismatch, "sparse index out of range");
    out[e.index] = e.value;
  }
  return out;
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& factor) {
  if (factor.is_zero() || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back({b->index, factor * b->value});
      ++b;
    } else {
      Scalar v = a->value + factor * b->value;
      if (!v.is_zero()) merged.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Scalar& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= factor;
}

SparseVector SparseVector::scaled(const Scalar& factor) const {
  SparseVector out = *this;
  out.scale(factor);
  return out;
}

Scalar SparseVector::dot(std::span<const Scalar> dense) const {
  Scalar acc;
  for (const auto& e : entries_) {
    if (e.index >= dense.size()) throw Error(ErrorKind::DimensionMismatch, "dot: index out of range");
    if (!dense[e.index].is_zero()) acc += e.value * dense[e.index];
  }
  return acc;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  add_scaled(other, Scalar(1));
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  add_scaled(other, Scalar(-1));
  return *this;
}

void SparseVector::push_back(std::size_t index, Scalar value) {
  if (value.is_zero()) return;
  if (!entries_.empty() && entries_.back().index >= index) {
    throw Error(ErrorKind::DimensionMismatch, "push_back: indices must increase");
  }
  entries_.push_back({index, std::move(value)});
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

SparseMatrix::SparseMatrix(std::size_t cols, std::vector<SparseVector> rows)
    : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (!r.empty() && r.entries().back().index >= cols_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix row has a column index out of range");
    }
  }
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  std::vector<std::vector<Entry>> buckets(rows);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw Error(ErrorKind::DimensionMismatch, "triplet out of range");
    buckets[t.row].push_back({t.col, std::move(t.value)});
  }
  std::vector<SparseVector> out;
  out.reserve(rows);
  for (auto& b : buckets) out.push_back(SparseVector::from_unsorted(std::move(b)));
  return SparseMatrix(cols, std::move(out));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  std::vector<SparseVector> rows;
  rows.reserve(dense.size());
  for (const auto& r : dense) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged dense matrix");
    rows.push_back(SparseVector::from_dense(r));
  }
  return SparseMatrix(cols, std::move(rows));
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::span<const SparseVector> columns) {
  std::vector<std::vector<Entry>> buckets(rows);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& e : columns[c]) {
      if (e.index >= rows) throw Error(ErrorKind::DimensionMismatch, "column entry out of range");
      buckets[e.index].push_back({c, e.value});
    }
  }
  std::vector<SparseVector> out;
  out.reserve(rows);
  for (auto& b : buckets) {
    // Columns are visited in increasing order, so each bucket is already sorted.
    SparseVector v;
    for (auto& e : b) v.push_back(e.index, std::move(e.value));
    out.push_back(std::move(v));
  }
  return SparseMatrix(columns.size(), std::move(out));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<SparseVector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(SparseVector::unit(i));
  return SparseMatrix(n, std::move(rows));
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::vector<Scalar> SparseMatrix::multiply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<Scalar> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out[r] = rows_[r].dot(x);
  return out;
}

SparseVector SparseMatrix::multiply(const SparseVector& x) const {
  if (!x.empty() && x.entries().back().index >= cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  }
  SparseVector out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar acc;
    auto a = rows_[r].begin();
    auto b = x.begin();
    while (a != rows_[r].end() && b != x.end()) {
      if (a->index < b->index) {
        ++a;
      } else if (b->index < a->index) {
        ++b;
      } else {
        acc += a->value * b->value;
        ++a;
        ++b;
      }
    }
    out.push_back(r, std::move(acc));
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseVector> cols(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r]) cols[e.index].push_back(r, e.value);
  }
  return SparseMatrix(rows_.size(), std::move(cols));
}

}  // namespace hochdef
