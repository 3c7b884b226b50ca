#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hochdef/cochain.hpp"
#include "hochdef/sparse.hpp"

namespace hochdef {

struct Budget {
  // Largest cochain-space dimension a differential matrix may have as its row count.
  std::uint64_t max_cochain_dim = 10'000'000;
};

// j-th coface of the Hochschild differential, 0 <= j <= n + 1, so that
// differential = sum_j (-1)^j coface_j:
//   coface_0 f(a_1..a_{n+1})     = a_1 f(a_2..a_{n+1})
//   coface_i f(a_1..a_{n+1})     = f(a_1..a_i a_{i+1}..a_{n+1})
//   coface_{n+1} f(a_1..a_{n+1}) = f(a_1..a_n) a_{n+1}
Cochain coface(const Cochain& f, std::size_t j);
Cochain differential(const Cochain& f);
// Matrix of C^n -> C^{n+1} in the flat cochain bases.
SparseMatrix differential_matrix(const Algebra& a, std::size_t n);

enum class ComplexKind { Full, Reduced };

struct HHSummary {
  std::size_t degree = 0;
  std::size_t cocycles = 0;      // dim ker of the differential out of degree n
  std::size_t coboundaries = 0;  // dim im of the differential into degree n
  std::size_t dimension = 0;
  ComplexKind complex = ComplexKind::Full;
};

struct CohomologyClass {
  std::size_t degree;
  Cochain representative;
  bool normalized;  // reduced modulo coboundaries to echelon normal form
};

// Picks the full complex while dim(A)^(n+2) fits the budget, otherwise the complex relative
// to the vertex idempotents (quiver algebras only). `force` overrides the choice; the chosen
// complex must still fit the budget. Throws BudgetExceeded.
HHSummary hochschild_cohomology(const AlgebraPtr& a, std::size_t n, const Budget& budget = {},
                                std::optional<ComplexKind> force = std::nullopt);
std::size_t hh_dimension(const AlgebraPtr& a, std::size_t n, const Budget& budget = {});
// Cocycle representatives of a basis of HH^n, as cochains of the full complex.
std::vector<CohomologyClass> hh_basis(const AlgebraPtr& a, std::size_t n, const Budget& budget = {},
                                      std::optional<ComplexKind> force = std::nullopt);

bool is_cocycle(const Cochain& f);
// Some v with differential(v) = f. Throws DegreeMismatch for degree 0 and BudgetExceeded
// when the differential into degree n is over budget.
std::optional<Cochain> coboundary_preimage(const Cochain& f, const Budget& budget = {});
bool is_coboundary(const Cochain& f, const Budget& budget = {});

// Cochains relative to the subalgebra spanned by the vertex idempotents: in degree n >= 1,
// values on composable tuples of radical basis paths landing in p_{s(b_1)} A p_{t(b_n)};
// in degree 0, the elements of the diagonal blocks p_i A p_i. This is a subcomplex of the
// full complex with the same cohomology.
class ReducedComplex {
 public:
  // Throws DimensionMismatch for algebras not built from a quiver.
  explicit ReducedComplex(AlgebraPtr algebra);
  ~ReducedComplex();

  std::uint64_t dimension(std::size_t n) const;
  SparseMatrix differential_matrix(std::size_t n) const;
  // Extension by zero into the full complex.
  Cochain embed(std::size_t n, const SparseVector& reduced) const;

 private:
  struct Level;
  const Level& level(std::size_t n) const;

  AlgebraPtr algebra_;
  std::vector<std::size_t> radical_;
  mutable std::vector<std::unique_ptr<Level>> levels_;
};

std::uint64_t reduced_complex_dimension(const AlgebraPtr& a, std::size_t n);

}  // namespace hochdef
