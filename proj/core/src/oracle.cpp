#include "hochdef/oracle.hpp"

#include <map>

#include "hochdef/linalg.hpp"

namespace hochdef {

DerivationCount derivation_oracle(const Algebra& a) {
  const std::size_t d = a.dimension();
  // Unknown D[k][m] (coefficient of e_m in D(e_k)) sits at column k * d + m.
  // Row (i, j, t): coefficient of e_t in D(e_i e_j) - D(e_i) e_j - e_i D(e_j).
  std::vector<Triplet> der;
  std::vector<Triplet> cen;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::map<std::pair<std::size_t, std::size_t>, Scalar> row;  // (t, column)
      for (const auto& e : a.product(i, j))
        for (std::size_t t = 0; t < d; ++t) row[{t, e.index * d + t}] += e.value;
      for (std::size_t m = 0; m < d; ++m) {
        for (const auto& e : a.product(m, j)) row[{e.index, i * d + m}] -= e.value;
        for (const auto& e : a.product(i, m)) row[{e.index, j * d + m}] -= e.value;
      }
      for (const auto& [key, v] : row)
        if (!v.is_zero()) der.push_back({(i * d + j) * d + key.first, key.second, v});
      // Center: sum_m z_m (e_m e_i - e_i e_m) = 0, row (i, t).
      if (j == 0) {
        for (std::size_t m = 0; m < d; ++m) {
          for (const auto& e : a.product(m, i)) cen.push_back({i * d + e.index, m, e.value});
          for (const auto& e : a.product(i, m)) cen.push_back({i * d + e.index, m, -e.value});
        }
      }
    }
  DerivationCount out;
  out.derivations = d * d - linalg::rank(SparseMatrix::from_triplets(d * d * d, d * d, std::move(der)));
  out.center = d - linalg::rank(SparseMatrix::from_triplets(d * d, d, std::move(cen)));
  out.inner = d - out.center;
  return out;
}

std::size_t path_algebra_dimension(const Quiver& q, const std::vector<Relation>& relations) {
  // Every path as (source, target, arrows), trivial paths included.
  struct Walk {
    std::size_t source, target;
    std::vector<std::size_t> arrows;
  };
  std::vector<Walk> walks;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) walks.push_back({v, v, {}});
  for (std::size_t k = 0; k < walks.size(); ++k) {
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrows()[a].source != walks[k].target) continue;
      Walk w = walks[k];
      w.arrows.push_back(a);
      w.target = q.arrows()[a].target;
      walks.push_back(std::move(w));
    }
  }
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::map<std::size_t, std::size_t> trivial;
  for (std::size_t k = 0; k < walks.size(); ++k) {
    if (walks[k].arrows.empty()) {
      trivial[walks[k].source] = k;
    } else {
      index[walks[k].arrows] = k;
    }
  }
  const auto lookup = [&](const std::vector<std::size_t>& arrows, std::size_t vertex) {
    return arrows.empty() ? trivial.at(vertex) : index.at(arrows);
  };
  std::vector<SparseVector> rows;
  for (const auto& rel : relations) {
    const std::size_t s = rel.terms.front().path.source;
    const std::size_t t = rel.terms.front().path.target;
    for (const auto& u : walks) {
      if (u.target != s) continue;
      for (const auto& v : walks) {
        if (v.source != t) continue;
        std::vector<Entry> es;
        for (const auto& term : rel.terms) {
          std::vector<std::size_t> arrows = u.arrows;
          arrows.insert(arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
          arrows.insert(arrows.end(), v.arrows.begin(), v.arrows.end());
          es.push_back({lookup(arrows, u.source), term.coefficient});
        }
        rows.push_back(SparseVector::from_unsorted(std::move(es)));
      }
    }
  }
  const std::size_t r = rows.empty() ? 0 : linalg::rank(SparseMatrix(walks.size(), std::move(rows)));
  return walks.size() - r;
}

}  // namespace hochdef
