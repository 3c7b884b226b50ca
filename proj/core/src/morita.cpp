#include "hochdef/morita.hpp"

#include "hochdef/error.hpp"
#include "hochdef/hochschild.hpp"

namespace hochdef {
namespace {

void check_over(const MatrixAlgebra& m, const Cochain& F) {
  if (F.algebra_ptr() != m.algebra) throw Error(ErrorKind::MismatchedAlgebra, "cochain is not over the matrix algebra");
}

// Calls fn(c) for every c in [0, r)^len.
template <typename Fn>
void for_each_index_tuple(std::size_t r, std::size_t len, Fn&& fn) {
  std::vector<std::size_t> c(len, 0);
  while (true) {
    fn(c);
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++c[pos] < r) break;
      c[pos] = 0;
      if (pos == 0) return;
    }
    if (len == 0) return;
  }
}

}  // namespace

MatrixAlgebra matrix_algebra(AlgebraPtr base, std::size_t r) {
  if (r == 0) throw Error(ErrorKind::DimensionMismatch, "matrix size must be positive");
  MatrixAlgebra m;
  m.base = base;
  m.r = r;
  const std::size_t db = base->dimension();
  const std::size_t d = r * r * db;
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t b = 0; b < db; ++b)
        labels[m.index(i, j, b)] = "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "." + base->label(b);
  std::vector<SparseVector> table(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      if (m.col(x) != m.row(y)) continue;
      std::vector<Entry> es;
      for (const auto& e : base->product(m.entry(x), m.entry(y))) {
        es.push_back({m.index(m.row(x), m.col(y), e.index), e.value});
      }
      table[x * d + y] = SparseVector::from_unsorted(std::move(es));
    }
  std::vector<Entry> unit;
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& e : base->unit()) unit.push_back({m.index(i, i, e.index), e.value});
  m.algebra = std::make_shared<const Algebra>("M_" + std::to_string(r) + "(" + base->name() + ")", std::move(labels),
                                              std::move(table), SparseVector::from_unsorted(std::move(unit)));
  return m;
}

Cochain cotr(const MatrixAlgebra& m, const Cochain& f) {
  if (f.algebra_ptr() != m.base) throw Error(ErrorKind::MismatchedAlgebra, "cochain is not over the base algebra");
  const std::size_t n = f.degree();
  std::vector<Entry> acc;
  std::vector<std::size_t> t(n), s(n);
  Cochain shape(m.algebra, n);
  for (const auto& e : f.coeffs()) {
    const std::size_t o = f.decode(e.index, t);
    // Chain c_0 .. c_n: argument j is E_{c_j c_{j+1}}(t_j), output E_{c_0 c_n}(o).
    for_each_index_tuple(m.r, n + 1, [&](const std::vector<std::size_t>& c) {
      for (std::size_t j = 0; j < n; ++j) s[j] = m.index(c[j], c[j + 1], t[j]);
      acc.push_back({shape.flat_index(s, m.index(c.front(), c.back(), o)), e.value});
    });
  }
  return Cochain(m.algebra, n, SparseVector::from_unsorted(std::move(acc)));
}

Cochain inc_star(const MatrixAlgebra& m, const Cochain& F) {
  check_over(m, F);
  const std::size_t n = F.degree();
  std::vector<Entry> acc;
  std::vector<std::size_t> s(n), t(n);
  Cochain shape(m.base, n);
  for (const auto& e : F.coeffs()) {
    const std::size_t o = F.decode(e.index, s);
    if (m.row(o) != 0 || m.col(o) != 0) continue;
    bool corner = true;
    for (std::size_t j = 0; j < n && corner; ++j) {
      corner = m.row(s[j]) == 0 && m.col(s[j]) == 0;
      t[j] = m.entry(s[j]);
    }
    if (corner) acc.push_back({shape.flat_index(t, m.entry(o)), e.value});
  }
  return Cochain(m.base, n, SparseVector::from_unsorted(std::move(acc)));
}

Cochain homotopy(const MatrixAlgebra& m, std::size_t i, const Cochain& F) {
  check_over(m, F);
  const std::size_t n = F.degree();
  if (n == 0 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "homotopy index out of range");
  const SparseVector& one = m.base->unit();
  std::vector<Entry> acc;
  std::vector<std::size_t> t(n), s(n - 1);
  Cochain shape(m.algebra, n - 1);
  for (const auto& e : F.coeffs()) {
    const std::size_t o = F.decode(e.index, t);
    if (m.row(o) != 0) continue;  // E_k1(1) keeps only row 1 of the value
    // The first i arguments are corner entries, argument i is E_1q(1).
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = m.row(t[j]) == 0 && m.col(t[j]) == 0;
    if (!ok || m.row(t[i]) != 0) continue;
    const Scalar unit_coeff = one.at(m.entry(t[i]));
    if (unit_coeff.is_zero()) continue;
    const std::size_t q = m.col(t[i]);
    const Scalar value = e.value * unit_coeff;
    for (std::size_t j = i + 1; j < n; ++j) s[j - 1] = t[j];
    if (i == 0) {
      // k = q: the output row is the column of E_1k.
      acc.push_back({shape.flat_index(s, m.index(q, m.col(o), m.entry(o))), value});
      continue;
    }
    // Chain c_0 .. c_{i-1} free, c_i = q: argument j is E_{c_j c_{j+1}}(t_j).
    for_each_index_tuple(m.r, i, [&](const std::vector<std::size_t>& c) {
      for (std::size_t j = 0; j < i; ++j) s[j] = m.index(c[j], j + 1 < i ? c[j + 1] : q, m.entry(t[j]));
      acc.push_back({shape.flat_index(s, m.index(c[0], m.col(o), m.entry(o))), value});
    });
  }
  return Cochain(m.algebra, n - 1, SparseVector::from_unsorted(std::move(acc)));
}

namespace {

// sum_i (-1)^i h_i on a degree-n cochain; zero cochain of degree 0 is never produced since
// callers only use n >= 1.
Cochain homotopy_sum(const MatrixAlgebra& m, const Cochain& F) {
  Cochain out(m.algebra, F.degree() - 1);
  for (std::size_t i = 0; i < F.degree(); ++i) {
    const Cochain h = homotopy(m, i, F);
    if (i % 2 == 0) {
      out += h;
    } else {
      out -= h;
    }
  }
  return out;
}

std::string first_line(const Cochain& f) {
  const std::string text = write_cochains({f});
  const auto a = text.find('\n');
  const auto b = text.find('\n', a + 1);
  return a == std::string::npos || b == std::string::npos ? text : text.substr(a + 1, b - a - 1);
}

}  // namespace

Report morita_check(const AlgebraPtr& base, std::size_t r, std::size_t max_degree) {
  const MatrixAlgebra m = matrix_algebra(base, r);
  Report rep;
  rep.command = "morita-check " + base->name() + " r=" + std::to_string(r);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::string tag = "[n=" + std::to_string(n) + "]";
    bool retract = true, cotr_chain = true;
    std::string w1, w2;
    const Cochain small(base, n);
    for (std::size_t idx = 0; idx < small.space_dimension(); ++idx) {
      const Cochain f = Cochain::basis(base, n, idx);
      const Cochain cf = cotr(m, f);
      if (retract && inc_star(m, cf) != f) {
        retract = false;
        w1 = first_line(f);
      }
      if (cotr_chain && differential(cf) != cotr(m, differential(f))) {
        cotr_chain = false;
        w2 = first_line(f);
      }
    }
    rep.add("inc-cotr-identity" + tag, retract, retract ? "" : "fails on " + w1);
    rep.add("cotr-chain-map" + tag, cotr_chain, cotr_chain ? "" : "fails on " + w2);

    bool inc_chain = true, homotopy_ok = true;
    std::string w3, w4;
    const Cochain big(m.algebra, n);
    for (std::size_t idx = 0; idx < big.space_dimension(); ++idx) {
      const Cochain F = Cochain::basis(m.algebra, n, idx);
      const Cochain dF = differential(F);
      if (inc_chain && differential(inc_star(m, F)) != inc_star(m, dF)) {
        inc_chain = false;
        w3 = first_line(F);
      }
      if (!homotopy_ok) continue;
      Cochain lhs = homotopy_sum(m, dF);
      if (n > 0) lhs += differential(homotopy_sum(m, F));
      const Cochain rhs = F - cotr(m, inc_star(m, F));
      if (lhs != rhs) {
        homotopy_ok = false;
        w4 = first_line(F);
      }
    }
    rep.add("inc-chain-map" + tag, inc_chain, inc_chain ? "" : "fails on " + w3);
    rep.add("homotopy-identity" + tag, homotopy_ok,
            homotopy_ok ? std::to_string(big.space_dimension()) + " basis cochains" : "fails on " + w4);
  }
  return rep;
}

Report precosimplicial_check(const MatrixAlgebra& m, const std::vector<Cochain>& samples) {
  Report rep;
  rep.command = "precosimplicial " + m.algebra->name();
  bool first = true, second = true, third = true, bottom = true, top = true;
  for (const auto& F : samples) {
    check_over(m, F);
    const std::size_t n = F.degree();
    std::vector<Cochain> faces;
    for (std::size_t j = 0; j <= n + 1; ++j) faces.push_back(coface(F, j));
    if (homotopy(m, 0, faces[0]) != F) bottom = false;
    if (homotopy(m, n, faces[n + 1]) != cotr(m, inc_star(m, F))) top = false;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n + 1; ++j) {
        const Cochain lhs = homotopy(m, i, faces[j]);
        if (j < i) {
          if (lhs != coface(homotopy(m, i - 1, F), j)) first = false;
        } else if (j == i && i > 0) {
          if (lhs != homotopy(m, i - 1, faces[j])) second = false;
        } else if (j > i + 1) {
          if (lhs != coface(homotopy(m, i, F), j - 1)) third = false;
        }
      }
    }
  }
  rep.add("h0-b0-identity", bottom);
  rep.add("hn-bn1-cotr-inc", top);
  rep.add("relation-j-below-i", first);
  rep.add("relation-j-equals-i", second);
  rep.add("relation-j-above-i", third);
  return rep;
}

}  // namespace hochdef
