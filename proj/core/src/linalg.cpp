#include "hochdef/linalg.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>

#include "hochdef/error.hpp"

namespace hochdef::linalg {
namespace {

constexpr std::size_t kCandidateColumns = 4;

class Eliminator {
 public:
  Eliminator(const SparseMatrix& m, std::span<const Scalar> rhs)
      : rows_(m.row_vectors()),
        has_rhs_(!rhs.empty()),
        active_(m.rows(), 0),
        col_count_(m.cols(), 0),
        col_rows_(m.cols()),
        stamp_(m.rows(), 0) {
    result_.cols = m.cols();
    if (has_rhs_) {
      if (rhs.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
      rhs_.assign(rhs.begin(), rhs.end());
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) {
        if (has_rhs_ && !rhs_[r].is_zero()) result_.consistent = false;
        continue;
      }
      active_[r] = 1;
      for (const auto& e : rows_[r]) {
        ++col_count_[e.index];
        col_rows_[e.index].push_back(r);
      }
    }
  }

  Elimination run() {
    std::size_t prow = 0;
    std::size_t pcol = 0;
    while (select_pivot(prow, pcol)) eliminate_column(prow, pcol);
    return std::move(result_);
  }

 private:
  // Active rows that currently hold a nonzero in column c, deduplicated, in list order.
  template <typename Fn>
  void for_each_row_in_column(std::size_t c, Fn&& fn) {
    ++epoch_;
    for (std::size_t r : col_rows_[c]) {
      if (!active_[r] || stamp_[r] == epoch_) continue;
      stamp_[r] = epoch_;
      if (!rows_[r].contains(c)) continue;
      fn(r);
    }
  }

  bool select_pivot(std::size_t& prow, std::size_t& pcol) {
    std::array<std::size_t, kCandidateColumns> cand{};
    std::size_t ncand = 0;
    for (std::size_t c = 0; c < col_count_.size(); ++c) {
      const std::size_t count = col_count_[c];
      if (count == 0) continue;
      if (ncand == kCandidateColumns && count >= col_count_[cand[ncand - 1]]) continue;
      std::size_t pos = ncand < kCandidateColumns ? ncand++ : ncand - 1;
      while (pos > 0 && col_count_[cand[pos - 1]] > count) {
        cand[pos] = cand[pos - 1];
        --pos;
      }
      cand[pos] = c;
    }
    if (ncand == 0) return false;

    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    Key best{std::numeric_limits<std::size_t>::max(), 0, 0};
    bool found = false;
    for (std::size_t k = 0; k < ncand; ++k) {
      const std::size_t c = cand[k];
      for_each_row_in_column(c, [&](std::size_t r) {
        const Key key{(rows_[r].size() - 1) * (col_count_[c] - 1), c, r};
        if (!found || key < best) {
          best = key;
          found = true;
        }
      });
    }
    if (!found) throw Error(ErrorKind::DimensionMismatch, "elimination bookkeeping out of sync");
    pcol = std::get<1>(best);
    prow = std::get<2>(best);
    return true;
  }

  void eliminate_column(std::size_t prow, std::size_t pcol) {
    active_[prow] = 0;
    for (const auto& e : rows_[prow]) --col_count_[e.index];

    std::vector<std::size_t> targets;
    for_each_row_in_column(pcol, [&](std::size_t r) { targets.push_back(r); });

    const SparseVector& pivot = rows_[prow];
    const Scalar pivot_value = pivot.at(pcol);
    for (std::size_t r : targets) {
      const Scalar factor = rows_[r].at(pcol) / pivot_value;
      std::vector<Entry> merged;
      merged.reserve(rows_[r].size() + pivot.size());
      auto a = rows_[r].entries().begin();
      const auto a_end = rows_[r].entries().end();
      auto b = pivot.entries().begin();
      const auto b_end = pivot.entries().end();
      while (a != a_end || b != b_end) {
        if (b == b_end || (a != a_end && a->index < b->index)) {
          merged.push_back(*a);
          ++a;
        } else if (a == a_end || b->index < a->index) {
          merged.push_back({b->index, -(factor * b->value)});
          ++col_count_[b->index];
          col_rows_[b->index].push_back(r);
          ++b;
        } else {
          Scalar v = a->value - factor * b->value;
          if (v.is_zero()) {
            --col_count_[a->index];
          } else {
            merged.push_back({a->index, std::move(v)});
          }
          ++a;
          ++b;
        }
      }
      SparseVector updated;
      for (auto& e : merged) updated.push_back(e.index, std::move(e.value));
      rows_[r] = std::move(updated);
      if (has_rhs_) rhs_[r] -= factor * rhs_[prow];
      if (rows_[r].empty()) {
        active_[r] = 0;
        if (has_rhs_ && !rhs_[r].is_zero()) result_.consistent = false;
      }
    }
    col_rows_[pcol].clear();
    col_rows_[pcol].shrink_to_fit();

    result_.pivot_cols.push_back(pcol);
    result_.pivot_rhs.push_back(has_rhs_ ? rhs_[prow] : Scalar(0));
    result_.pivot_rows.push_back(std::move(rows_[prow]));
    rows_[prow] = SparseVector();
  }

  std::vector<SparseVector> rows_;
  bool has_rhs_;
  std::vector<Scalar> rhs_;
  std::vector<char> active_;
  std::vector<std::size_t> col_count_;
  std::vector<std::vector<std::size_t>> col_rows_;
  std::vector<std::size_t> stamp_;
  std::size_t epoch_ = 0;
  Elimination result_;
};

// Back substitution through the pivot rows in reverse selection order. `x` must already hold
// the values of the free columns; pivot columns are overwritten.
void back_substitute(const Elimination& e, std::vector<Scalar>& x, bool use_rhs) {
  for (std::size_t k = e.pivot_rows.size(); k-- > 0;) {
    const SparseVector& row = e.pivot_rows[k];
    const std::size_t pc = e.pivot_cols[k];
    Scalar acc = use_rhs ? e.pivot_rhs[k] : Scalar(0);
    Scalar pivot_value;
    for (const auto& entry : row) {
      if (entry.index == pc) {
        pivot_value = entry.value;
      } else if (!x[entry.index].is_zero()) {
        acc -= entry.value * x[entry.index];
      }
    }
    x[pc] = acc / pivot_value;
  }
}

}  // namespace

Elimination eliminate(const SparseMatrix& m, std::span<const Scalar> rhs) {
  return Eliminator(m, rhs).run();
}

std::size_t rank(const SparseMatrix& m) {
  if (m.cols() > m.rows()) return eliminate(m.transpose()).rank();
  return eliminate(m).rank();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  const Elimination e = eliminate(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = 1;

  std::vector<SparseVector> basis;
  std::vector<Scalar> x(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(x.begin(), x.end(), Scalar(0));
    x[f] = Scalar(1);
    back_substitute(e, x, false);
    basis.push_back(SparseVector::from_dense(x));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const SparseMatrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side length mismatch");
  if (m.rows() == 0) return std::vector<Scalar>(m.cols());
  const Elimination e = eliminate(m, b);
  if (!e.consistent) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  back_substitute(e, x, true);
  return x;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  auto x = solve(m, b.to_dense(m.rows()));
  if (!x) return std::nullopt;
  return SparseVector::from_dense(*x);
}

SparseVector RowSpace::reduce(const SparseVector& v) const {
  SparseVector out = v;
  for (const auto& e : v) {
    auto it = rows_.find(e.index);
    if (it != rows_.end()) out.add_scaled(it->second, -e.value);
  }
  return out;
}

bool RowSpace::insert(const SparseVector& v) {
  if (!v.empty() && v.entries().back().index >= dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "RowSpace::insert: index out of range");
  }
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.front().index;
  r.scale(r.front().value.inverse());
  for (auto& [p, row] : rows_) {
    const Scalar coeff = row.at(pivot);
    if (!coeff.is_zero()) row.add_scaled(r, -coeff);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> DenseMatrix::row(std::size_t r) const {
  return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Scalar> DenseMatrix::multiply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "dense matrix-vector size mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  return out;
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  DenseMatrix a = *this;
  DenseMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) throw Error(ErrorKind::DimensionMismatch, "singular matrix");
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(p, c), a(col, c));
        std::swap(inv(p, c), inv(col, c));
      }
    }
    const Scalar pivot_inv = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= pivot_inv;
      inv(col, c) *= pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Scalar bilinear(std::span<const Scalar> x, const DenseMatrix& m, std::span<const Scalar> y) {
  if (x.size() != m.rows() || y.size() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "bilinear form size mismatch");
  }
  Scalar acc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += x[i] * m(i, j) * y[j];
  }
  return acc;
}

}  // namespace hochdef::linalg
