#pragma once

#include <cstddef>
#include <vector>

#include "hochdef/cochain.hpp"
#include "hochdef/report.hpp"

namespace hochdef {

// r x r matrices over B with basis E_ij(b), index (i * r + j) * dim B + b (0-based i, j),
// labels "E<i>_<j>.<label of b>" (1-based i, j).
struct MatrixAlgebra {
  AlgebraPtr base;
  std::size_t r = 0;
  AlgebraPtr algebra;

  std::size_t index(std::size_t i, std::size_t j, std::size_t b) const { return (i * r + j) * base->dimension() + b; }
  std::size_t row(std::size_t idx) const { return idx / base->dimension() / r; }
  std::size_t col(std::size_t idx) const { return idx / base->dimension() % r; }
  std::size_t entry(std::size_t idx) const { return idx % base->dimension(); }
};

MatrixAlgebra matrix_algebra(AlgebraPtr base, std::size_t r);

// cotr(f)(a^1..a^n)_{ij} = sum over internal indices of f(a^1_{i i2}, a^2_{i2 i3}, ..., a^n_{in j});
// degree 0: f times the identity matrix.
Cochain cotr(const MatrixAlgebra& m, const Cochain& f);
// inc*(F)(a_1..a_n) = F(E_11(a_1), ..., E_11(a_n))_{11}.
Cochain inc_star(const MatrixAlgebra& m, const Cochain& F);
// Homotopy operator h_i : C^n(M) -> C^{n-1}(M), 0 <= i <= n - 1:
//   h_0(F)(a^1..)  = sum_k E_k1(1) F(E_1k(1), a^1, ..., a^{n-1})
//   h_i(F)(a^1..)  = sum E_k1(1) F(E_11(a^1_{k m}), ..., E_11(a^i_{p q}), E_1q(1), a^{i+1}, ..., a^{n-1})
// Throws IndexOutOfRange otherwise.
Cochain homotopy(const MatrixAlgebra& m, std::size_t i, const Cochain& F);

// Over all basis cochains of degree <= max_degree: inc* cotr = id, both maps commute with the
// differential, and (sum (-1)^i h_i) b + b (sum (-1)^i h_i) = id - cotr inc*.
Report morita_check(const AlgebraPtr& base, std::size_t r, std::size_t max_degree);
// The pre-cosimplicial relations between the h_i and the cofaces, on the given cochains:
//   h_i b_j = b_j h_{i-1}      (0 <= j < i <= n)
//   h_i b_i = h_{i-1} b_i      (0 < i <= n)
//   h_i b_j = b_{j-1} h_i      (i + 1 < j <= n + 1)
// plus h_0 b_0 = id and h_n b_{n+1} = cotr inc*.
Report precosimplicial_check(const MatrixAlgebra& m, const std::vector<Cochain>& samples);

}  // namespace hochdef
