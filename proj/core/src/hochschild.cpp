#include "hochdef/hochschild.hpp"

#include <algorithm>
#include <unordered_map>

#include "hochdef/error.hpp"
#include "hochdef/linalg.hpp"

namespace hochdef {
namespace {

// Calls sink(row_tuple, output, value) for every nonzero entry of coface_j applied to the
// basis cochain sending the tuple t to e_k (and every other basis tuple to 0).
template <typename Sink>
void coface_column(const Algebra& a, std::span<const std::size_t> t, std::size_t k, std::size_t j,
                   const Scalar& weight, std::vector<std::size_t>& row, Sink&& sink) {
  const std::size_t n = t.size();
  const std::size_t d = a.dimension();
  row.resize(n + 1);
  if (j == 0) {
    std::copy(t.begin(), t.end(), row.begin() + 1);
    for (std::size_t x = 0; x < d; ++x) {
      row[0] = x;
      for (const auto& e : a.product(x, k)) sink(row, e.index, weight * e.value);
    }
  } else if (j == n + 1) {
    std::copy(t.begin(), t.end(), row.begin());
    for (std::size_t x = 0; x < d; ++x) {
      row[n] = x;
      for (const auto& e : a.product(k, x)) sink(row, e.index, weight * e.value);
    }
  } else {
    // The product of arguments j and j+1 (1-based) feeds input slot j of f.
    std::copy(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j - 1), row.begin());
    std::copy(t.begin() + static_cast<std::ptrdiff_t>(j), t.end(), row.begin() + static_cast<std::ptrdiff_t>(j + 1));
    for (const auto& pre : a.preimages(t[j - 1])) {
      row[j - 1] = pre.left;
      row[j] = pre.right;
      sink(row, k, weight * pre.coefficient);
    }
  }
}

std::size_t encode(std::span<const std::size_t> tuple, std::size_t d) {
  std::size_t idx = 0;
  for (std::size_t t : tuple) idx = idx * d + t;
  return idx;
}

// Applies sum_j sign_j * coface_j to f; `faces` lists (j, sign).
Cochain apply_faces(const Cochain& f, const std::vector<std::pair<std::size_t, Scalar>>& faces) {
  const Algebra& a = f.algebra();
  const std::size_t d = a.dimension();
  Cochain result(f.algebra_ptr(), f.degree() + 1);
  std::vector<std::size_t> tuple(f.degree());
  std::vector<std::size_t> row;
  std::vector<Entry> acc;
  for (const auto& e : f.coeffs()) {
    const std::size_t k = f.decode(e.index, tuple);
    for (const auto& [j, sign] : faces) {
      coface_column(a, tuple, k, j, sign * e.value, row,
                    [&](std::span<const std::size_t> r, std::size_t out, const Scalar& v) {
                      acc.push_back({encode(r, d) * d + out, v});
                    });
    }
  }
  return Cochain(f.algebra_ptr(), f.degree() + 1, SparseVector::from_unsorted(std::move(acc)));
}

bool fits(std::optional<std::uint64_t> dim, const Budget& budget) {
  return dim && *dim <= budget.max_cochain_dim;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::size_t x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

// Representatives of ker(next) modulo the span of the columns of `prev`.
std::vector<SparseVector> cohomology_representatives(const SparseMatrix& next, const SparseMatrix* prev,
                                                     std::size_t space_dim) {
  linalg::RowSpace boundaries(space_dim);
  if (prev) {
    const SparseMatrix cols = prev->transpose();
    for (const auto& c : cols.row_vectors()) boundaries.insert(c);
  }
  linalg::RowSpace accepted = boundaries;
  std::vector<SparseVector> reps;
  for (const auto& z : linalg::kernel_basis(next)) {
    if (accepted.insert(z)) reps.push_back(boundaries.reduce(z));
  }
  return reps;
}

}  // namespace

Cochain coface(const Cochain& f, std::size_t j) {
  if (j > f.degree() + 1) throw Error(ErrorKind::IndexOutOfRange, "coface index out of range");
  return apply_faces(f, {{j, Scalar(1)}});
}

Cochain differential(const Cochain& f) {
  std::vector<std::pair<std::size_t, Scalar>> faces;
  for (std::size_t j = 0; j <= f.degree() + 1; ++j) faces.emplace_back(j, Scalar(j % 2 == 0 ? 1 : -1));
  return apply_faces(f, faces);
}

SparseMatrix differential_matrix(const Algebra& a, std::size_t n) {
  const std::size_t d = a.dimension();
  const auto rows = cochain_dimension(d, n + 1);
  if (!rows || *rows > SIZE_MAX) throw Error(ErrorKind::BudgetExceeded, "cochain space too large to index");
  const std::size_t cols = static_cast<std::size_t>(*cochain_dimension(d, n));
  std::vector<SparseVector> columns(cols);
  std::vector<std::size_t> tuple(n);
  std::vector<std::size_t> row;
  std::vector<Entry> acc;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t rest = c / d;
    const std::size_t k = c % d;
    for (std::size_t i = n; i-- > 0;) {
      tuple[i] = rest % d;
      rest /= d;
    }
    acc.clear();
    for (std::size_t j = 0; j <= n + 1; ++j) {
      coface_column(a, tuple, k, j, Scalar(j % 2 == 0 ? 1 : -1), row,
                    [&](std::span<const std::size_t> r, std::size_t out, const Scalar& v) {
                      acc.push_back({encode(r, d) * d + out, v});
                    });
    }
    columns[c] = SparseVector::from_unsorted(acc);
  }
  return SparseMatrix::from_columns(static_cast<std::size_t>(*rows), columns);
}

bool is_cocycle(const Cochain& f) { return differential(f).is_zero(); }

std::optional<Cochain> coboundary_preimage(const Cochain& f, const Budget& budget) {
  if (f.degree() == 0) throw Error(ErrorKind::DegreeMismatch, "degree-0 cochains have no preimage");
  const std::size_t n = f.degree();
  if (!fits(cochain_dimension(f.algebra().dimension(), n), budget)) {
    throw Error(ErrorKind::BudgetExceeded, "differential into degree " + std::to_string(n) + " exceeds the budget");
  }
  if (f.is_zero()) return Cochain(f.algebra_ptr(), n - 1);
  const SparseMatrix m = differential_matrix(f.algebra(), n - 1);
  auto x = linalg::solve(m, f.coeffs());
  if (!x) return std::nullopt;
  return Cochain(f.algebra_ptr(), n - 1, std::move(*x));
}

bool is_coboundary(const Cochain& f, const Budget& budget) {
  if (f.degree() == 0) return f.is_zero();
  return coboundary_preimage(f, budget).has_value();
}

// ---------------------------------------------------------------------------------------------
// Reduced complex

struct ReducedComplex::Level {
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<const std::vector<std::size_t>*> outputs;
  std::vector<std::size_t> offset;  // offset[i] = first coordinate of tuple i
  std::size_t total = 0;
  std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash> lookup;
  std::vector<std::vector<std::size_t>> blocks;  // basis elements per (source, target)
};

ReducedComplex::ReducedComplex(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  const QuiverData* q = algebra_->quiver_data();
  if (!q) throw Error(ErrorKind::DimensionMismatch, "reduced complex needs a quiver algebra");
  for (std::size_t b = 0; b < algebra_->dimension(); ++b)
    if (q->is_radical(b)) radical_.push_back(b);
}

ReducedComplex::~ReducedComplex() = default;

std::uint64_t ReducedComplex::dimension(std::size_t n) const {
  const QuiverData& q = *algebra_->quiver_data();
  const std::size_t v = q.quiver.vertex_count();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    return (a != 0 && b > UINT64_MAX / a) ? UINT64_MAX : a * b;
  };
  std::vector<std::uint64_t> block(v * v, 0);
  for (std::size_t b = 0; b < algebra_->dimension(); ++b) ++block[q.source(b) * v + q.target(b)];
  if (n == 0) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < v; ++i) total += block[i * v + i];
    return total;
  }
  // walks[s][t]: number of composable radical tuples of the current length from s to t.
  std::vector<std::uint64_t> step(v * v, 0);
  for (std::size_t b : radical_) ++step[q.source(b) * v + q.target(b)];
  std::vector<std::uint64_t> walks = step;
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<std::uint64_t> next(v * v, 0);
    for (std::size_t s = 0; s < v; ++s)
      for (std::size_t m = 0; m < v; ++m) {
        if (walks[s * v + m] == 0) continue;
        for (std::size_t t = 0; t < v; ++t)
          next[s * v + t] = sat_add(next[s * v + t], sat_mul(walks[s * v + m], step[m * v + t]));
      }
    walks = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < v * v; ++i) total = sat_add(total, sat_mul(walks[i], block[i]));
  return total;
}

const ReducedComplex::Level& ReducedComplex::level(std::size_t n) const {
  if (levels_.size() <= n) levels_.resize(n + 1);
  if (levels_[n]) return *levels_[n];
  const QuiverData& q = *algebra_->quiver_data();
  const std::size_t v = q.quiver.vertex_count();
  auto lvl = std::make_unique<Level>();
  lvl->blocks.resize(v * v);
  for (std::size_t b = 0; b < algebra_->dimension(); ++b) lvl->blocks[q.source(b) * v + q.target(b)].push_back(b);

  auto add_tuple = [&](const std::vector<std::size_t>& t, const std::vector<std::size_t>* outs) {
    if (outs->empty()) return;
    lvl->lookup.emplace(t, lvl->tuples.size());
    lvl->tuples.push_back(t);
    lvl->outputs.push_back(outs);
    lvl->offset.push_back(lvl->total);
    lvl->total += outs->size();
  };
  if (n == 0) {
    // Degree 0: a single empty tuple whose outputs are all diagonal-block elements.
    auto diag = std::make_unique<std::vector<std::size_t>>();
    for (std::size_t b = 0; b < algebra_->dimension(); ++b)
      if (q.source(b) == q.target(b)) diag->push_back(b);
    lvl->blocks.push_back(std::move(*diag));
    add_tuple({}, &lvl->blocks.back());
  } else {
    std::vector<std::size_t> t;
    auto recurse = [&](auto&& self) -> void {
      if (t.size() == n) {
        add_tuple(t, &lvl->blocks[q.source(t.front()) * v + q.target(t.back())]);
        return;
      }
      for (std::size_t b : radical_) {
        if (!t.empty() && q.target(t.back()) != q.source(b)) continue;
        t.push_back(b);
        self(self);
        t.pop_back();
      }
    };
    recurse(recurse);
  }
  levels_[n] = std::move(lvl);
  return *levels_[n];
}

SparseMatrix ReducedComplex::differential_matrix(std::size_t n) const {
  const Level& src = level(n);
  const Level& dst = level(n + 1);
  const Algebra& a = *algebra_;
  std::vector<SparseVector> columns;
  columns.reserve(src.total);
  std::vector<std::size_t> row;
  std::vector<Entry> acc;
  for (std::size_t ti = 0; ti < src.tuples.size(); ++ti) {
    for (std::size_t k : *src.outputs[ti]) {
      acc.clear();
      for (std::size_t j = 0; j <= n + 1; ++j) {
        coface_column(a, src.tuples[ti], k, j, Scalar(j % 2 == 0 ? 1 : -1), row,
                      [&](std::span<const std::size_t> r, std::size_t out, const Scalar& val) {
                        auto it = dst.lookup.find(std::vector<std::size_t>(r.begin(), r.end()));
                        if (it == dst.lookup.end()) return;
                        const auto& outs = *dst.outputs[it->second];
                        auto pos = std::lower_bound(outs.begin(), outs.end(), out);
                        if (pos == outs.end() || *pos != out) return;
                        acc.push_back({dst.offset[it->second] + static_cast<std::size_t>(pos - outs.begin()), val});
                      });
      }
      columns.push_back(SparseVector::from_unsorted(acc));
    }
  }
  return SparseMatrix::from_columns(dst.total, columns);
}

Cochain ReducedComplex::embed(std::size_t n, const SparseVector& reduced) const {
  const Level& lvl = level(n);
  const std::size_t d = algebra_->dimension();
  std::vector<Entry> acc;
  for (const auto& e : reduced) {
    if (e.index >= lvl.total) throw Error(ErrorKind::DimensionMismatch, "reduced coordinate out of range");
    const auto it = std::upper_bound(lvl.offset.begin(), lvl.offset.end(), e.index);
    const std::size_t ti = static_cast<std::size_t>(it - lvl.offset.begin()) - 1;
    const std::size_t out = (*lvl.outputs[ti])[e.index - lvl.offset[ti]];
    acc.push_back({encode(lvl.tuples[ti], d) * d + out, e.value});
  }
  return Cochain(algebra_, n, SparseVector::from_unsorted(std::move(acc)));
}

std::uint64_t reduced_complex_dimension(const AlgebraPtr& a, std::size_t n) { return ReducedComplex(a).dimension(n); }

// ---------------------------------------------------------------------------------------------

namespace {

ComplexKind choose_complex(const AlgebraPtr& a, std::size_t n, const Budget& budget,
                           std::optional<ComplexKind> force) {
  const bool full_ok = fits(cochain_dimension(a->dimension(), n + 1), budget);
  auto reduced_ok = [&] {
    if (!a->quiver_data()) return false;
    const ReducedComplex rc(a);
    return rc.dimension(n) <= budget.max_cochain_dim && rc.dimension(n + 1) <= budget.max_cochain_dim;
  };
  const std::string where = "HH^" + std::to_string(n) + " of " + a->name();
  if (force == ComplexKind::Full) {
    if (!full_ok) throw Error(ErrorKind::BudgetExceeded, where + ": full complex exceeds the budget");
    return ComplexKind::Full;
  }
  if (force == ComplexKind::Reduced) {
    if (!reduced_ok()) throw Error(ErrorKind::BudgetExceeded, where + ": reduced complex unavailable or over budget");
    return ComplexKind::Reduced;
  }
  if (full_ok) return ComplexKind::Full;
  if (reduced_ok()) return ComplexKind::Reduced;
  throw Error(ErrorKind::BudgetExceeded, where + ": cochain spaces exceed the budget");
}

}  // namespace

HHSummary hochschild_cohomology(const AlgebraPtr& a, std::size_t n, const Budget& budget,
                                std::optional<ComplexKind> force) {
  HHSummary s;
  s.degree = n;
  s.complex = choose_complex(a, n, budget, force);
  if (s.complex == ComplexKind::Full) {
    const SparseMatrix next = differential_matrix(*a, n);
    s.cocycles = next.cols() - linalg::rank(next);
    if (n > 0) s.coboundaries = linalg::rank(differential_matrix(*a, n - 1));
  } else {
    const ReducedComplex rc(a);
    const SparseMatrix next = rc.differential_matrix(n);
    s.cocycles = next.cols() - linalg::rank(next);
    if (n > 0) s.coboundaries = linalg::rank(rc.differential_matrix(n - 1));
  }
  s.dimension = s.cocycles - s.coboundaries;
  return s;
}

std::size_t hh_dimension(const AlgebraPtr& a, std::size_t n, const Budget& budget) {
  return hochschild_cohomology(a, n, budget).dimension;
}

std::vector<CohomologyClass> hh_basis(const AlgebraPtr& a, std::size_t n, const Budget& budget,
                                      std::optional<ComplexKind> force) {
  const ComplexKind kind = choose_complex(a, n, budget, force);
  std::vector<CohomologyClass> out;
  if (kind == ComplexKind::Full) {
    const SparseMatrix next = differential_matrix(*a, n);
    std::optional<SparseMatrix> prev;
    if (n > 0) prev = differential_matrix(*a, n - 1);
    for (auto& rep : cohomology_representatives(next, prev ? &*prev : nullptr, next.cols())) {
      out.push_back({n, Cochain(a, n, std::move(rep)), true});
    }
  } else {
    const ReducedComplex rc(a);
    const SparseMatrix next = rc.differential_matrix(n);
    std::optional<SparseMatrix> prev;
    if (n > 0) prev = rc.differential_matrix(n - 1);
    for (const auto& rep : cohomology_representatives(next, prev ? &*prev : nullptr, next.cols())) {
      out.push_back({n, rc.embed(n, rep), true});
    }
  }
  return out;
}

}  // namespace hochdef
